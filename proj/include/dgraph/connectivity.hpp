#pragma once

#include <optional>
#include <vector>

#include "dgraph/graph.hpp"

namespace dgraph {

struct SameEndpointsError : GraphError {
    using GraphError::GraphError;
};

/// Directed network with integral capacities, the substrate for both
/// connectivity solvers.
class FlowNetwork {
  public:
    explicit FlowNetwork(int nodes);

    // Adds a forward arc and its zero-capacity reverse companion.
    void add_arc(int tail, int head, int capacity);

    int node_count() const { return static_cast<int>(head_.size()); }

    friend struct MaxFlowState;

  private:
    struct Arc {
        int to;
        int cap;
        int rev;  // index of companion arc in arcs_[to]
    };
    std::vector<std::vector<Arc>> head_;
};

struct MaxFlowResult {
    int value = 0;
    // Nodes reachable from s in the final residual network; induces a
    // minimum cut of exactly `value`.
    std::vector<char> source_side;
};

// Dinic shortest-augmenting-path phases, exact integer arithmetic.
MaxFlowResult max_flow(FlowNetwork net, int s, int t);

enum class WitnessKind { Vertices, Edges };

/// A vertex or edge set claimed to disconnect its host graph.
struct CutWitness {
    WitnessKind kind = WitnessKind::Vertices;
    std::vector<int> vertices;  // sorted, Vertices flavor
    std::vector<Edge> edges;    // sorted, Edges flavor
};

enum class WitnessAbsence {
    None,          // witness present
    CompleteGraph, // kappa of K_p: no vertex cut exists
    TrivialGraph,  // K1: nothing to cut
};

struct ConnectivityResult {
    int value = 0;
    std::optional<CutWitness> witness;
    WitnessAbsence absent_reason = WitnessAbsence::None;
};

// lambda(K1)=0, lambda(disconnected)=0 with empty witness; otherwise a
// fixed-source sweep of unit-capacity max-flows. Witnesses are verified
// before being returned.
ConnectivityResult edge_connectivity(const Graph& g);

// kappa(K_p)=p-1 with absent witness, kappa(disconnected)=0; otherwise a
// vertex-splitting reduction minimized over a dominating pair set.
ConnectivityResult vertex_connectivity(const Graph& g);

// True iff deleting the witness disconnects g (or, vertex flavor, empties it).
bool verify_cut_witness(const Graph& g, const CutWitness& w);

}  // namespace dgraph
