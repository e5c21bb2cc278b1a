#include "dgraph/hamilton.hpp"

#include <algorithm>
#include <functional>

namespace dgraph {

bool validate_spanning_cycle(const Graph& h, const CycleSeq& c) {
    const int p = h.p();
    if (static_cast<int>(c.size()) != p || p < 3) return false;
    std::vector<char> seen(p, 0);
    for (int v : c) {
        if (v < 0 || v >= p || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < p; ++i)
        if (!h.has_edge(c[i], c[(i + 1) % p])) return false;
    return true;
}

std::optional<CycleSeq> hamiltonian_cycle(const Graph& g) {
    const int p = g.p();
    if (p < 3 || !is_connected(g)) return std::nullopt;
    const auto m = basic_metrics(g);
    if (m.min_degree < 2) return std::nullopt;

    const auto adj = g.adjacency();
    CycleSeq path{0};
    std::vector<char> used(p, 0);
    used[0] = 1;

    std::function<bool()> extend = [&]() -> bool {
        if (static_cast<int>(path.size()) == p) return g.has_edge(path.back(), 0);
        for (int w : adj[path.back()]) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            if (extend()) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    };

    if (extend()) return path;
    return std::nullopt;
}

CycleSeq lift_hamiltonian(const Graph& g, const CycleSeq& gamma, int n) {
    if (n < 2) throw GraphError("lift requires n >= 2");
    if (!validate_spanning_cycle(g, gamma))
        throw NotSpanningCycleError("gamma is not a spanning cycle of the base graph");
    const int p = static_cast<int>(gamma.size());
    if (n >= 3 && p < 4)
        throw TooShortForLiftError("a cycle of length " + std::to_string(p) +
                                   " has no two non-incident edges");

    // Removed edges: uv = (gamma[0], gamma[1]) and, for n >= 3,
    // u'v' = (gamma[k], gamma[k+1]) with k=2 (first later non-incident edge).
    const int k = 2;
    LayeredGraph d = double_n(g, n);
    CycleSeq c;
    c.reserve(n * p);
    auto push = [&](int pos, int layer) { c.push_back(d.id(gamma[pos], layer)); };

    // Fragments of gamma minus the two removed edges:
    //   A = gamma[1..k], B = gamma[k+1..p-1], gamma[0].
    auto push_a = [&](int layer) {
        for (int j = 1; j <= k; ++j) push(j, layer);
    };
    auto push_b = [&](int layer) {
        for (int j = k + 1; j < p; ++j) push(j, layer);
        push(0, layer);
    };
    auto push_gamma_minus_uv = [&](int layer) {
        for (int j = 1; j < p; ++j) push(j, layer);
        push(0, layer);
    };

    // Outbound pass: full path in layer 0, then one fragment per middle
    // layer, alternating A/B so each hop uses uv or u'v'.
    push_gamma_minus_uv(0);
    for (int i = 1; i <= n - 2; ++i) {
        if (i % 2 == 1)
            push_a(i);
        else
            push_b(i);
    }
    // Last layer carries a full path; which deleted edge it avoids depends
    // on which fragment the outbound pass ended with.
    if ((n - 2) % 2 == 1) {
        for (int j = k + 1; j < p; ++j) push(j, n - 1);
        for (int j = 0; j <= k; ++j) push(j, n - 1);
    } else {
        push_gamma_minus_uv(n - 1);
    }
    // Return pass: the complementary fragment of each middle layer, ending
    // with B in layer 1 so the closing hop is the uv cross edge.
    for (int i = n - 2; i >= 1; --i) {
        if (i % 2 == 1)
            push_b(i);
        else
            push_a(i);
    }

    if (!validate_spanning_cycle(d.graph(), c))
        throw std::logic_error("lift construction produced an invalid cycle");
    return c;
}

}  // namespace dgraph
