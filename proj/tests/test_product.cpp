#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "dgraph/harness.hpp"
#include "dgraph/product.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dgraph;

namespace {

Graph cycle(int k) { return named_fixture("cycle_" + std::to_string(k)); }

}  // namespace

TEST_CASE("total graph") {
    auto t1 = total_graph(1);
    CHECK(t1.p == 1);
    CHECK(t1.edges.empty());
    CHECK(t1.loops == std::vector<int>{0});

    auto t2 = total_graph(2);
    CHECK(t2.edges == std::vector<Edge>{{0, 1}});
    CHECK(t2.loops == std::vector<int>{0, 1});

    auto t3 = total_graph(3);
    CHECK(t3.edges.size() == 3);
    CHECK(t3.loops.size() == 3);

    CHECK_THROWS_AS(total_graph(0), ZeroOrderError);
}

TEST_CASE("kronecker product") {
    // C3 x K2 (no loops) is the bipartite double cover, a 6-cycle
    ReflexiveGraph k2{2, {{0, 1}}, {}};
    CHECK(oracles::isomorphic_bruteforce(kronecker(cycle(3), k2), cycle(6)));

    // K2 x T2 is a 4-cycle
    auto k2g = Graph::from_edge_list(2, {{0, 1}});
    CHECK(oracles::isomorphic_bruteforce(kronecker(k2g, total_graph(2)), cycle(4)));

    // T1 is the identity factor, label for label
    auto c5 = cycle(5);
    CHECK(kronecker(c5, total_graph(1)) == c5);

    CHECK_THROWS_AS(kronecker(Graph{}, total_graph(2)), EmptyFactorError);
}

TEST_CASE("double_n examples") {
    auto d = double_n(named_fixture("path_3"), 2);
    CHECK(d.graph().p() == 6);
    CHECK(d.graph().q() == 8);
    CHECK(basic_metrics(d.graph()).degrees == std::vector<int>{2, 4, 2, 2, 4, 2});

    auto k1 = double_n(Graph::from_edge_list(1, {}), 5);
    CHECK(k1.graph().p() == 5);
    CHECK(k1.graph().q() == 0);

    auto d3c4 = double_n(cycle(4), 3);
    CHECK(d3c4.graph().p() == 12);
    CHECK(d3c4.graph().q() == 36);
    for (int deg : basic_metrics(d3c4.graph()).degrees) CHECK(deg == 6);
}

TEST_CASE("double_n equals the generic kronecker construction edge for edge") {
    for (int p = 1; p <= 5; ++p) {
        enumerate_labeled_graphs(p, false, [&](const Graph& g) {
            for (int n : {1, 2, 3})
                CHECK(double_n(g, n).graph() == kronecker(g, total_graph(n)));
        });
    }
}

TEST_CASE("degree and size laws hold exhaustively") {
    for (int p = 1; p <= 6; ++p) {
        enumerate_labeled_graphs(p, false, [&](const Graph& g) {
            const auto base = basic_metrics(g);
            for (int n = 1; n <= 4; ++n) {
                auto d = double_n(g, n);
                const auto m = basic_metrics(d.graph());
                REQUIRE(m.p == n * base.p);
                REQUIRE(m.q == n * n * base.q);
                for (int u = 0; u < base.p; ++u)
                    for (int i = 0; i < n; ++i)
                        REQUIRE(m.degrees[d.id(u, i)] == n * base.degrees[u]);
            }
        });
    }
}

TEST_CASE("layer subgraphs reproduce the base") {
    auto d = double_n(cycle(5), 2);
    CHECK(layer_subgraph(d, 0) == cycle(5));
    CHECK(layer_subgraph(d, 1) == cycle(5));

    auto d3 = double_n(named_fixture("complete_4"), 3);
    CHECK(layer_subgraph(d3, 2) == named_fixture("complete_4"));
    CHECK_THROWS_AS(layer_subgraph(d3, 3), LayerOutOfRangeError);
    CHECK_THROWS_AS(layer_subgraph(d3, -1), LayerOutOfRangeError);
}

TEST_CASE("cross-layer subgraph is the bipartite double cover") {
    auto k2 = Graph::from_edge_list(2, {{0, 1}});
    auto r = cross_layer_subgraph(double_n(k2, 2));
    CHECK(r.edges() == std::vector<Edge>{{0, 3}, {1, 2}});

    CHECK(oracles::isomorphic_bruteforce(cross_layer_subgraph(double_n(cycle(3), 2)), cycle(6)));

    for (int p = 2; p <= 5; ++p) {
        enumerate_labeled_graphs(p, true, [&](const Graph& g) {
            CHECK(cross_layer_subgraph(double_n(g, 2)).q() == 2 * g.q());
        });
    }

    CHECK_THROWS_AS(cross_layer_subgraph(double_n(k2, 3)), NotDoubleError);
}

TEST_CASE("structure preservation under the product") {
    for (int p = 2; p <= 6; ++p) {
        enumerate_labeled_graphs(p, false, [&](const Graph& g) {
            for (int n : {2, 3}) {
                auto d = double_n(g, n);
                CHECK(is_connected(d.graph()) == is_connected(g));
                CHECK(is_bipartite(d.graph()) == is_bipartite(g));
                if (is_connected(g))
                    CHECK(is_eulerian(d.graph()) == (is_eulerian(g) || n % 2 == 0));
            }
        });
    }
}

TEST_CASE("no cut vertex or cut edge in the product of a connected base") {
    for (int p = 2; p <= 5; ++p) {
        enumerate_labeled_graphs(p, true, [&](const Graph& g) {
            for (int n : {2, 3}) {
                auto [cuts, bridges] = cut_vertices_and_bridges(double_n(g, n).graph());
                CHECK(cuts.empty());
                CHECK(bridges.empty());
            }
        });
    }
}
