#include "dgraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <sstream>

namespace dgraph {

Graph Graph::from_edge_list(int p, const std::vector<Edge>& pairs) {
    if (p < 0) throw VertexOutOfRangeError("vertex count must be nonnegative");
    Graph g;
    g.p_ = p;
    g.edges_.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= p || v < 0 || v >= p)
            throw VertexOutOfRangeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for p=" + std::to_string(p));
        if (u == v) throw LoopEdgeError("loop at vertex " + std::to_string(u));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
        throw DuplicateEdgeError("duplicate edge in edge list");
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    Edge e{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(p_);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

Metrics basic_metrics(const Graph& g) {
    Metrics m;
    m.p = g.p();
    m.q = g.q();
    m.degrees.assign(g.p(), 0);
    for (auto [u, v] : g.edges()) {
        ++m.degrees[u];
        ++m.degrees[v];
    }
    m.min_degree = m.degrees.empty() ? 0 : *std::min_element(m.degrees.begin(), m.degrees.end());
    return m;
}

int component_count(const Graph& g) {
    const auto adj = g.adjacency();
    std::vector<char> seen(g.p(), 0);
    int components = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.p(); ++s) {
        if (seen[s]) continue;
        ++components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::pair<std::vector<int>, std::vector<Edge>> cut_vertices_and_bridges(const Graph& g) {
    const int p = g.p();
    const auto adj = g.adjacency();
    std::vector<int> disc(p, -1), low(p, 0);
    std::vector<char> is_cut(p, 0);
    std::vector<Edge> bridges;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        bool parent_skipped = false;
        for (int w : adj[u]) {
            if (w == parent && !parent_skipped) {
                // skip one copy of the tree edge; simple graphs have no
                // parallel edges so the flag is only about parent==w repeats
                parent_skipped = true;
                continue;
            }
            if (disc[w] == -1) {
                ++children;
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (parent != -1 && low[w] >= disc[u]) is_cut[u] = 1;
                if (low[w] > disc[u]) bridges.emplace_back(std::min(u, w), std::max(u, w));
            } else {
                low[u] = std::min(low[u], disc[w]);
            }
        }
        if (parent == -1 && children > 1) is_cut[u] = 1;
    };

    for (int s = 0; s < p; ++s)
        if (disc[s] == -1) dfs(s, -1);

    std::vector<int> cuts;
    for (int v = 0; v < p; ++v)
        if (is_cut[v]) cuts.push_back(v);
    std::sort(bridges.begin(), bridges.end());
    return {cuts, bridges};
}

bool is_bipartite(const Graph& g) {
    const auto adj = g.adjacency();
    std::vector<int> color(g.p(), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.p(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    stack.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_eulerian(const Graph& g) {
    if (!is_connected(g)) return false;
    for (int d : basic_metrics(g).degrees)
        if (d % 2 != 0) return false;
    return true;
}

namespace {

bool comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Graph parse_elt(std::istream& in) {
    std::string line;
    long p = -1, q = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        if (comment_or_blank(line)) continue;
        std::istringstream fields(line);
        long a, b;
        if (!(fields >> a >> b)) throw ParseError("malformed line: \"" + line + "\"");
        std::string rest;
        if (fields >> rest) throw ParseError("trailing tokens on line: \"" + line + "\"");
        if (p < 0) {
            p = a;
            q = b;
            if (p < 0 || q < 0) throw ParseError("negative p or q in header");
        } else {
            edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    if (p < 0) throw ParseError("missing header line");
    if (static_cast<long>(edges.size()) != q)
        throw ParseError("header declares q=" + std::to_string(q) + " but found " +
                         std::to_string(edges.size()) + " edges");
    try {
        return Graph::from_edge_list(static_cast<int>(p), edges);
    } catch (const GraphError& e) {
        throw ParseError(std::string("invalid edge list: ") + e.what());
    }
}

Graph parse_elt(const std::string& text) {
    std::istringstream in(text);
    return parse_elt(in);
}

std::string emit_elt(const Graph& g) {
    std::ostringstream out;
    out << g.p() << ' ' << g.q() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw ParseError("empty graph6 string");

    size_t pos = 0;
    auto byte = [&](size_t i) -> int {
        int c = static_cast<unsigned char>(s.at(i));
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte");
        return c - 63;
    };

    long n;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~') throw ParseError("graph6 orders above 258047 unsupported");
        if (s.size() < 4) throw ParseError("truncated graph6 header");
        n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }

    const long bits = n * (n - 1) / 2;
    const long need = (bits + 5) / 6;
    if (static_cast<long>(s.size()) - static_cast<long>(pos) != need)
        throw ParseError("graph6 body length mismatch");

    std::vector<Edge> edges;
    long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string emit_dot(const Graph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.p(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace dgraph
