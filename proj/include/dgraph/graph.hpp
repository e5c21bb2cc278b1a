#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dgraph {

// Normalized undirected edge, always stored with first < second.
using Edge = std::pair<int, int>;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoopEdgeError : GraphError {
    using GraphError::GraphError;
};
struct DuplicateEdgeError : GraphError {
    using GraphError::GraphError;
};
struct VertexOutOfRangeError : GraphError {
    using GraphError::GraphError;
};
struct ParseError : GraphError {
    using GraphError::GraphError;
};
struct EmptyGraphError : GraphError {
    using GraphError::GraphError;
};

/// Finite simple undirected graph on vertices 0..p-1.
/// Immutable after construction; edges are kept sorted and normalized.
class Graph {
  public:
    Graph() = default;

    // Validates ranges, rejects loops and duplicates, normalizes to u < v.
    static Graph from_edge_list(int p, const std::vector<Edge>& pairs);

    int p() const { return p_; }
    int q() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    bool is_complete() const { return q() == p_ * (p_ - 1) / 2; }

    // Neighbor lists, ascending.
    std::vector<std::vector<int>> adjacency() const;

    bool operator==(const Graph&) const = default;

  private:
    int p_ = 0;
    std::vector<Edge> edges_;
};

struct Metrics {
    int p = 0;
    int q = 0;
    std::vector<int> degrees;
    int min_degree = 0;
};

Metrics basic_metrics(const Graph& g);

// K1 and the empty graph count as connected.
bool is_connected(const Graph& g);

int component_count(const Graph& g);

// Articulation vertices and bridge edges (DFS low-link).
std::pair<std::vector<int>, std::vector<Edge>> cut_vertices_and_bridges(const Graph& g);

bool is_bipartite(const Graph& g);

// Connected with every degree even; K1 counts as eulerian.
bool is_eulerian(const Graph& g);

// --- edge-list text format (ELT v1) ---
//
// Line 1: "p q", then q lines "u v". Lines starting with '#' are comments,
// blank lines are ignored. The parser accepts edges in any order and either
// endpoint order; the emitter writes ascending lexicographic order.

Graph parse_elt(std::istream& in);
Graph parse_elt(const std::string& text);
std::string emit_elt(const Graph& g);

// graph6 import (short form and the 18-bit extended form).
Graph parse_graph6(const std::string& line);

// Deterministic DOT emitter.
std::string emit_dot(const Graph& g, const std::string& name = "G");

}  // namespace dgraph
