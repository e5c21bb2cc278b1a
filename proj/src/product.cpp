#include "dgraph/product.hpp"

#include <algorithm>

namespace dgraph {

bool ReflexiveGraph::has_loop(int v) const {
    return std::binary_search(loops.begin(), loops.end(), v);
}

bool ReflexiveGraph::has_edge(int u, int v) const {
    if (u == v) return has_loop(u);
    Edge e{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges.begin(), edges.end(), e);
}

ReflexiveGraph total_graph(int n) {
    if (n < 1) throw ZeroOrderError("total graph requires n >= 1");
    ReflexiveGraph t;
    t.p = n;
    for (int u = 0; u < n; ++u) {
        t.loops.push_back(u);
        for (int v = u + 1; v < n; ++v) t.edges.emplace_back(u, v);
    }
    return t;
}

Graph kronecker(const Graph& g, const ReflexiveGraph& h) {
    if (g.p() < 1 || h.p < 1) throw EmptyFactorError("kronecker factors must be nonempty");
    const int p = g.p();
    std::vector<Edge> edges;
    // Each product edge {(u,a),(v,b)} with u<v arises from exactly one
    // ordered choice (a,b), so no dedup pass is needed.
    for (auto [u, v] : g.edges()) {
        for (int a = 0; a < h.p; ++a) {
            for (int b = 0; b < h.p; ++b) {
                if (!h.has_edge(a, b)) continue;
                int x = a * p + u;
                int y = b * p + v;
                edges.emplace_back(std::min(x, y), std::max(x, y));
            }
        }
    }
    return Graph::from_edge_list(h.p * p, edges);
}

LayeredGraph::LayeredGraph(Graph base, int n, Graph graph)
    : base_(std::move(base)), n_(n), graph_(std::move(graph)) {}

LayeredGraph double_n(const Graph& g, int n) {
    if (g.p() < 1) throw EmptyFactorError("double_n requires a nonempty base graph");
    Graph product = kronecker(g, total_graph(n));
    return LayeredGraph(g, n, std::move(product));
}

Graph layer_subgraph(const LayeredGraph& d, int i) {
    if (i < 0 || i >= d.n())
        throw LayerOutOfRangeError("layer " + std::to_string(i) + " out of range for n=" +
                                   std::to_string(d.n()));
    const int p = d.base().p();
    const int lo = i * p;
    std::vector<Edge> edges;
    for (auto [u, v] : d.graph().edges())
        if (u >= lo && v < lo + p) edges.emplace_back(u - lo, v - lo);
    return Graph::from_edge_list(p, edges);
}

Graph cross_layer_subgraph(const LayeredGraph& d) {
    if (d.n() != 2) throw NotDoubleError("cross-layer subgraph is defined for n=2 only");
    const int p = d.base().p();
    std::vector<Edge> edges;
    for (auto [u, v] : d.base().edges()) {
        edges.emplace_back(u, v + p);
        edges.emplace_back(v, u + p);
    }
    return Graph::from_edge_list(2 * p, edges);
}

}  // namespace dgraph
