#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "dgraph/connectivity.hpp"
#include "dgraph/harness.hpp"
#include "dgraph/product.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dgraph;

namespace {

Graph cycle(int k) { return named_fixture("cycle_" + std::to_string(k)); }

void check_result(const Graph& g, const ConnectivityResult& r) {
    if (!r.witness) return;
    const int size = r.witness->kind == WitnessKind::Vertices
                         ? static_cast<int>(r.witness->vertices.size())
                         : static_cast<int>(r.witness->edges.size());
    CHECK(size == r.value);
    CHECK(verify_cut_witness(g, *r.witness));
}

}  // namespace

TEST_CASE("max flow basics") {
    FlowNetwork net(3);
    net.add_arc(0, 1, 1);
    net.add_arc(1, 2, 1);
    auto mf = max_flow(net, 0, 2);
    CHECK(mf.value == 1);

    // K4 bidirected, unit arcs
    FlowNetwork k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            if (u != v) k4.add_arc(u, v, 1);
    CHECK(max_flow(k4, 0, 3).value == 3);

    CHECK_THROWS_AS(max_flow(FlowNetwork(2), 1, 1), SameEndpointsError);
}

TEST_CASE("max flow on the bridged-triangles figure") {
    auto fig2 = named_fixture("fig2");
    FlowNetwork net(fig2.p());
    for (auto [u, v] : fig2.edges()) {
        net.add_arc(u, v, 1);
        net.add_arc(v, u, 1);
    }
    CHECK(max_flow(net, 0, 5).value == 1);
}

TEST_CASE("edge connectivity") {
    CHECK(edge_connectivity(cycle(6)).value == 2);
    CHECK(edge_connectivity(Graph::from_edge_list(1, {})).value == 0);
    CHECK(edge_connectivity(Graph::from_edge_list(4, {{0, 1}, {2, 3}})).value == 0);

    auto fig3 = named_fixture("fig3");
    auto r = edge_connectivity(fig3);
    CHECK(r.value == 1);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->edges == std::vector<Edge>{{3, 4}});

    // two K5 joined by a 3-edge matching
    CHECK(edge_connectivity(named_fixture("fig4")).value == 3);
}

TEST_CASE("vertex connectivity") {
    auto k5 = vertex_connectivity(named_fixture("complete_5"));
    CHECK(k5.value == 4);
    CHECK_FALSE(k5.witness.has_value());
    CHECK(k5.absent_reason == WitnessAbsence::CompleteGraph);

    for (int k : {4, 5, 6}) CHECK(vertex_connectivity(cycle(k)).value == 2);

    CHECK(vertex_connectivity(named_fixture("petersen")).value == 3);
    CHECK(vertex_connectivity(Graph::from_edge_list(1, {})).value == 0);
    CHECK(vertex_connectivity(Graph::from_edge_list(4, {{0, 1}, {2, 3}})).value == 0);
}

TEST_CASE("verify_cut_witness") {
    auto c4 = cycle(4);
    CHECK(verify_cut_witness(c4, {WitnessKind::Vertices, {0, 2}, {}}));
    CHECK_FALSE(verify_cut_witness(c4, {WitnessKind::Vertices, {0}, {}}));

    auto k4 = named_fixture("complete_4");
    CHECK(verify_cut_witness(k4, {WitnessKind::Edges, {}, {{0, 1}, {0, 2}, {0, 3}}}));
    CHECK_FALSE(verify_cut_witness(k4, {WitnessKind::Edges, {}, {{0, 1}}}));
}

TEST_CASE("oracle equivalence, exhaustive p<=6") {
    for (int p = 2; p <= 6; ++p) {
        enumerate_labeled_graphs(p, true, [&](const Graph& g) {
            auto lam = edge_connectivity(g);
            auto kap = vertex_connectivity(g);
            REQUIRE(lam.value == oracles::lambda_bruteforce(g));
            REQUIRE(kap.value == oracles::kappa_bruteforce(g));
            check_result(g, lam);
            check_result(g, kap);
            // Whitney chain
            const int delta = basic_metrics(g).min_degree;
            REQUIRE(kap.value <= lam.value);
            REQUIRE(lam.value <= delta);
        });
    }
}

TEST_CASE("oracle equivalence, seeded random p=7") {
    int tested = 0;
    for (int i = 0; tested < 2000 && i < 20000; ++i) {
        const int m = 6 + static_cast<int>(i % 16);
        auto g = random_graph(7, m, 0xd1ceull + i);
        if (!is_connected(g)) continue;
        ++tested;
        auto lam = edge_connectivity(g);
        auto kap = vertex_connectivity(g);
        REQUIRE(lam.value == oracles::lambda_bruteforce(g));
        REQUIRE(kap.value == oracles::kappa_bruteforce(g));
        check_result(g, lam);
        check_result(g, kap);
    }
    CHECK(tested == 2000);
}

TEST_CASE("product connectivity laws") {
    for (int p = 2; p <= 5; ++p) {
        enumerate_labeled_graphs(p, true, [&](const Graph& g) {
            const int kappa = vertex_connectivity(g).value;
            const int lambda = edge_connectivity(g).value;
            const int delta = basic_metrics(g).min_degree;
            for (int n : {2, 3}) {
                auto d = double_n(g, n);
                CHECK(vertex_connectivity(d.graph()).value == n * kappa);
                if (n == 2) {
                    const int lambda_d = edge_connectivity(d.graph()).value;
                    CHECK(lambda_d >= 2 * lambda);
                    if (lambda == delta) CHECK(lambda_d == 2 * lambda);
                }
            }
        });
    }
}

TEST_CASE("witness determinism") {
    auto g = named_fixture("fig2");
    auto a = edge_connectivity(g);
    auto b = edge_connectivity(g);
    REQUIRE(a.witness.has_value());
    CHECK(a.witness->edges == b.witness->edges);
    auto c = vertex_connectivity(g);
    auto d = vertex_connectivity(g);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->vertices == d.witness->vertices);
}
