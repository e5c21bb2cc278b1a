#include "dgraph/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>

namespace dgraph {

FlowNetwork::FlowNetwork(int nodes) : head_(nodes) {}

void FlowNetwork::add_arc(int tail, int head, int capacity) {
    if (tail < 0 || tail >= node_count() || head < 0 || head >= node_count())
        throw VertexOutOfRangeError("arc endpoint out of range");
    if (capacity < 0) throw GraphError("negative capacity");
    head_[tail].push_back({head, capacity, static_cast<int>(head_[head].size())});
    head_[head].push_back({tail, 0, static_cast<int>(head_[tail].size()) - 1});
}

struct MaxFlowState {
    FlowNetwork& net;
    int s, t;
    std::vector<int> level;
    std::vector<int> iter;

    bool bfs() {
        level.assign(net.node_count(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const auto& a : net.head_[u]) {
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[u] + 1;
                    q.push(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    int dfs(int u, int limit) {
        if (u == t) return limit;
        for (int& i = iter[u]; i < static_cast<int>(net.head_[u].size()); ++i) {
            auto& a = net.head_[u][i];
            if (a.cap > 0 && level[a.to] == level[u] + 1) {
                int pushed = dfs(a.to, std::min(limit, a.cap));
                if (pushed > 0) {
                    a.cap -= pushed;
                    net.head_[a.to][a.rev].cap += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }
};

MaxFlowResult max_flow(FlowNetwork net, int s, int t) {
    if (s == t) throw SameEndpointsError("max_flow endpoints must differ");
    MaxFlowState st{net, s, t, {}, {}};
    MaxFlowResult result;
    while (st.bfs()) {
        st.iter.assign(net.node_count(), 0);
        while (int pushed = st.dfs(s, std::numeric_limits<int>::max())) result.value += pushed;
    }
    // final BFS failed, so level[] marks exactly the residual-reachable set
    result.source_side.assign(net.node_count(), 0);
    for (int v = 0; v < net.node_count(); ++v)
        if (st.level[v] >= 0) result.source_side[v] = 1;
    return result;
}

bool verify_cut_witness(const Graph& g, const CutWitness& w) {
    if (w.kind == WitnessKind::Vertices) {
        std::vector<char> removed(g.p(), 0);
        for (int v : w.vertices) {
            if (v < 0 || v >= g.p()) return false;
            removed[v] = 1;
        }
        std::vector<int> keep;
        std::vector<int> relabel(g.p(), -1);
        for (int v = 0; v < g.p(); ++v)
            if (!removed[v]) {
                relabel[v] = static_cast<int>(keep.size());
                keep.push_back(v);
            }
        if (keep.empty()) return true;
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            if (!removed[u] && !removed[v]) edges.emplace_back(relabel[u], relabel[v]);
        return component_count(Graph::from_edge_list(static_cast<int>(keep.size()), edges)) > 1;
    }
    std::vector<Edge> kept;
    for (auto e : g.edges())
        if (!std::binary_search(w.edges.begin(), w.edges.end(), e)) kept.push_back(e);
    return component_count(Graph::from_edge_list(g.p(), kept)) > 1;
}

namespace {

// Self-check: a returned witness must disconnect at exactly the reported size.
void require_sound(const Graph& g, const ConnectivityResult& r) {
    if (!r.witness) return;
    const auto& w = *r.witness;
    const int size = w.kind == WitnessKind::Vertices ? static_cast<int>(w.vertices.size())
                                                     : static_cast<int>(w.edges.size());
    if (size != r.value || !verify_cut_witness(g, w))
        throw std::logic_error("connectivity solver produced an unsound cut witness");
}

}  // namespace

ConnectivityResult edge_connectivity(const Graph& g) {
    const int p = g.p();
    ConnectivityResult result;
    if (p <= 1) {
        result.absent_reason = WitnessAbsence::TrivialGraph;
        return result;
    }
    if (!is_connected(g)) {
        result.witness = CutWitness{WitnessKind::Edges, {}, {}};
        require_sound(g, result);
        return result;
    }

    auto build = [&] {
        FlowNetwork net(p);
        for (auto [u, v] : g.edges()) {
            net.add_arc(u, v, 1);
            net.add_arc(v, u, 1);
        }
        return net;
    };

    int best = std::numeric_limits<int>::max();
    std::vector<char> best_side;
    for (int t = 1; t < p; ++t) {
        auto mf = max_flow(build(), 0, t);
        if (mf.value < best) {
            best = mf.value;
            best_side = std::move(mf.source_side);
        }
    }

    CutWitness w{WitnessKind::Edges, {}, {}};
    for (auto [u, v] : g.edges())
        if (best_side[u] != best_side[v]) w.edges.emplace_back(u, v);
    std::sort(w.edges.begin(), w.edges.end());
    result.value = best;
    result.witness = std::move(w);
    require_sound(g, result);
    return result;
}

namespace {

// Split network: v_in = 2v, v_out = 2v+1, unit arc through each vertex,
// effectively-infinite arcs along edges so cuts use only vertex arcs.
FlowNetwork split_network(const Graph& g) {
    const int p = g.p();
    FlowNetwork net(2 * p);
    for (int v = 0; v < p; ++v) net.add_arc(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
        net.add_arc(2 * u + 1, 2 * v, p);
        net.add_arc(2 * v + 1, 2 * u, p);
    }
    return net;
}

}  // namespace

ConnectivityResult vertex_connectivity(const Graph& g) {
    const int p = g.p();
    ConnectivityResult result;
    if (p <= 1) {
        result.absent_reason = WitnessAbsence::TrivialGraph;
        return result;
    }
    if (!is_connected(g)) {
        result.witness = CutWitness{WitnessKind::Vertices, {}, {}};
        require_sound(g, result);
        return result;
    }
    if (g.is_complete()) {
        result.value = p - 1;
        result.absent_reason = WitnessAbsence::CompleteGraph;
        return result;
    }

    const auto m = basic_metrics(g);
    int pivot = 0;
    for (int v = 1; v < p; ++v)
        if (m.degrees[v] < m.degrees[pivot]) pivot = v;

    int best = std::numeric_limits<int>::max();
    std::vector<char> best_side;
    auto probe = [&](int s, int t) {
        auto mf = max_flow(split_network(g), 2 * s + 1, 2 * t);
        if (mf.value < best) {
            best = mf.value;
            best_side = std::move(mf.source_side);
        }
    };

    // Every minimum cut either misses the pivot (then it separates the pivot
    // from some non-neighbor) or contains it (then it separates two
    // non-adjacent neighbors of the pivot).
    for (int u = 0; u < p; ++u)
        if (u != pivot && !g.has_edge(pivot, u)) probe(pivot, u);
    const auto adj = g.adjacency();
    for (size_t i = 0; i < adj[pivot].size(); ++i)
        for (size_t j = i + 1; j < adj[pivot].size(); ++j) {
            int x = adj[pivot][i], y = adj[pivot][j];
            if (!g.has_edge(x, y)) probe(x, y);
        }
    assert(best < std::numeric_limits<int>::max());

    CutWitness w{WitnessKind::Vertices, {}, {}};
    for (int v = 0; v < p; ++v)
        if (best_side[2 * v] && !best_side[2 * v + 1]) w.vertices.push_back(v);
    result.value = best;
    result.witness = std::move(w);
    require_sound(g, result);
    return result;
}

}  // namespace dgraph
