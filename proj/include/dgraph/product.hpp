#pragma once

#include <vector>

#include "dgraph/graph.hpp"

namespace dgraph {

struct ZeroOrderError : GraphError {
    using GraphError::GraphError;
};
struct EmptyFactorError : GraphError {
    using GraphError::GraphError;
};
struct LayerOutOfRangeError : GraphError {
    using GraphError::GraphError;
};
struct NotDoubleError : GraphError {
    using GraphError::GraphError;
};

/// Simple graph plus a loop set. Only ever used as the right-hand
/// product factor; loops never leak into Graph.
struct ReflexiveGraph {
    int p = 0;
    std::vector<Edge> edges;  // normalized u < v
    std::vector<int> loops;   // sorted vertex ids

    bool has_loop(int v) const;
    bool has_edge(int u, int v) const;
};

// Complete graph K_n with a loop at every vertex.
ReflexiveGraph total_graph(int n);

// Kronecker product with a loop-bearing right factor. Vertex (u,a) gets
// id a*p(g)+u; (u,a) ~ (v,b) iff uv in E(g) and (ab in E(h) or a==b with
// a loop). The left factor is loop-free so the result stays simple.
Graph kronecker(const Graph& g, const ReflexiveGraph& h);

/// D_n[g] together with its canonical layer decomposition.
/// Layer-major indexing: id(u,i) = i*p(base)+u, so layers are contiguous.
class LayeredGraph {
  public:
    LayeredGraph() = default;
    LayeredGraph(Graph base, int n, Graph graph);

    const Graph& base() const { return base_; }
    int n() const { return n_; }
    const Graph& graph() const { return graph_; }

    int id(int u, int layer) const { return layer * base_.p() + u; }

  private:
    Graph base_;
    int n_ = 1;
    Graph graph_;
};

LayeredGraph double_n(const Graph& g, int n);

// Induced subgraph on layer i, relabeled back to 0..p-1.
Graph layer_subgraph(const LayeredGraph& d, int i);

// For n=2 only: the bipartite double cover G x K2 embedded in d, i.e. the
// spanning subgraph keeping exactly the cross-layer edges.
Graph cross_layer_subgraph(const LayeredGraph& d);

}  // namespace dgraph
