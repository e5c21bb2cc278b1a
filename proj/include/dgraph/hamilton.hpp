#pragma once

#include <optional>
#include <vector>

#include "dgraph/graph.hpp"
#include "dgraph/product.hpp"

namespace dgraph {

struct NotSpanningCycleError : GraphError {
    using GraphError::GraphError;
};
struct TooShortForLiftError : GraphError {
    using GraphError::GraphError;
};

/// Vertex order of a cycle; the closing edge back to the first entry is
/// implicit.
using CycleSeq = std::vector<int>;

// True iff c visits every vertex of h exactly once and consecutive
// (cyclically) entries are edges of h.
bool validate_spanning_cycle(const Graph& h, const CycleSeq& c);

// Backtracking with deterministic neighbor order; absent for p < 3 or
// non-Hamiltonian inputs.
std::optional<CycleSeq> hamiltonian_cycle(const Graph& g);

// Lifts a spanning cycle of g to a spanning cycle of D_n[g] by the
// two-pass layer stitching. The output is validated before being
// returned. For n >= 3 the cycle needs two non-incident edges, so
// length >= 4.
CycleSeq lift_hamiltonian(const Graph& g, const CycleSeq& gamma, int n);

}  // namespace dgraph
