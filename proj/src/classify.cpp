#include "dgraph/classify.hpp"

#include <algorithm>

namespace dgraph {

const char* to_string(WindowClass w) {
    switch (w) {
        case WindowClass::LowWindow: return "low";
        case WindowClass::MidWindow: return "mid";
        case WindowClass::Outside: return "outside";
    }
    return "?";
}

const char* to_string(LambdaRegime r) {
    switch (r) {
        case LambdaRegime::Equal: return "equal";
        case LambdaRegime::LowHalf: return "low_half";
        case LambdaRegime::MidBand: return "mid_band";
    }
    return "?";
}

namespace {

void require_nonempty(const Graph& g) {
    if (g.p() < 1) throw EmptyGraphError("operation requires p >= 1");
}

struct LambdaDelta {
    int lambda;
    int delta;
};

LambdaDelta connected_lambda_delta(const Graph& g) {
    if (g.p() < 2) throw TrivialGraphError("operation requires p >= 2");
    if (!is_connected(g)) throw DisconnectedInputError("operation requires a connected graph");
    return {edge_connectivity(g).value, basic_metrics(g).min_degree};
}

LambdaRegime regime_of(const LambdaDelta& ld) {
    if (ld.lambda == ld.delta) return LambdaRegime::Equal;
    if (2 * ld.lambda <= ld.delta) return LambdaRegime::LowHalf;
    return LambdaRegime::MidBand;
}

}  // namespace

int floor_avg_degree(const Graph& g) {
    require_nonempty(g);
    return 2 * g.q() / g.p();
}

QDecomposition q_decompose(const Graph& g) {
    require_nonempty(g);
    return {g.q() / g.p(), g.q() % g.p()};
}

bool is_max_kappa(const Graph& g) {
    return vertex_connectivity(g).value == floor_avg_degree(g);
}

bool is_max_lambda(const Graph& g) {
    return edge_connectivity(g).value == floor_avg_degree(g);
}

WindowClass window_class(const Graph& g, int n) {
    const auto [t, t0] = q_decompose(g);
    (void)t;
    const int p = g.p();
    if (2 * n * t0 < p) return WindowClass::LowWindow;
    if (2 * t0 >= p && 2 * n * t0 < (n + 1) * p) return WindowClass::MidWindow;
    return WindowClass::Outside;
}

int predict_kappa_double_n(const Graph& g, int n) {
    return n * vertex_connectivity(g).value;
}

bool predict_max_kappa_double_n(const Graph& g, int n) {
    return is_max_kappa(g) && window_class(g, n) != WindowClass::Outside;
}

LambdaRegime lambda_regime(const Graph& g) {
    return regime_of(connected_lambda_delta(g));
}

int predict_lambda_double(const Graph& g) {
    const auto ld = connected_lambda_delta(g);
    switch (regime_of(ld)) {
        case LambdaRegime::Equal: return 2 * ld.lambda;
        case LambdaRegime::LowHalf: return 4 * ld.lambda;
        case LambdaRegime::MidBand: return 2 * ld.delta;
    }
    return 0;
}

int predict_lambda_double_n_as_stated(const Graph& g, int n) {
    const auto ld = connected_lambda_delta(g);
    switch (regime_of(ld)) {
        case LambdaRegime::Equal: return n * ld.lambda;
        case LambdaRegime::LowHalf: return n * n * ld.lambda;
        case LambdaRegime::MidBand: return 2 * n * ld.delta;
    }
    return 0;
}

int conjectured_lambda_double_n(const Graph& g, int n) {
    const auto ld = connected_lambda_delta(g);
    return std::min(n * ld.delta, n * n * ld.lambda);
}

bool predict_max_lambda_double_n(const Graph& g, int n) {
    return is_max_lambda(g) && window_class(g, n) != WindowClass::Outside;
}

ConnectivityReport connectivity_report(const Graph& g) {
    require_nonempty(g);
    ConnectivityReport r;
    const auto m = basic_metrics(g);
    r.p = m.p;
    r.q = m.q;
    r.min_degree = m.min_degree;
    r.kappa = vertex_connectivity(g);
    r.lambda = edge_connectivity(g);
    r.floor_avg = floor_avg_degree(g);
    r.decomposition = q_decompose(g);
    if (is_connected(g) &&
        !(r.kappa.value <= r.lambda.value && r.lambda.value <= r.min_degree))
        throw std::logic_error("Whitney chain violated: internal solver bug");
    return r;
}

}  // namespace dgraph
