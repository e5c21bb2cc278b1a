#pragma once

#include <string>

#include "dgraph/connectivity.hpp"
#include "dgraph/graph.hpp"

namespace dgraph {

struct DisconnectedInputError : GraphError {
    using GraphError::GraphError;
};
struct TrivialGraphError : GraphError {
    using GraphError::GraphError;
};

/// q = t*p + t0 by Euclidean division, 0 <= t0 <= p-1.
struct QDecomposition {
    int t = 0;
    int t0 = 0;
};

// The t0 windows under which max-connectivity survives the n-fold product.
// All boundary tests are cross-multiplied integer comparisons.
enum class WindowClass {
    LowWindow,  // 2n*t0 < p
    MidWindow,  // 2*t0 >= p and 2n*t0 < (n+1)*p
    Outside,
};

enum class LambdaRegime {
    Equal,    // lambda == delta
    LowHalf,  // 2*lambda <= delta
    MidBand,  // delta < 2*lambda and lambda < delta
};

const char* to_string(WindowClass w);
const char* to_string(LambdaRegime r);

// floor(2q/p) by integer division.
int floor_avg_degree(const Graph& g);

QDecomposition q_decompose(const Graph& g);

bool is_max_kappa(const Graph& g);
bool is_max_lambda(const Graph& g);

WindowClass window_class(const Graph& g, int n);

// n * kappa(G); kappa(disconnected)=0 propagates.
int predict_kappa_double_n(const Graph& g, int n);

bool predict_max_kappa_double_n(const Graph& g, int n);

LambdaRegime lambda_regime(const Graph& g);

// Piecewise n=2 value: Equal -> 2*lambda, LowHalf -> 4*lambda,
// MidBand -> 2*delta. Agrees with min{2*delta, 4*lambda}.
int predict_lambda_double(const Graph& g);

// Literal transcription of the claimed general-n lambda formula. Audit
// input only: it disagrees with the n=2 formula in the MidBand case and
// is compared against the exact solver, never trusted.
int predict_lambda_double_n_as_stated(const Graph& g, int n);

// min{n*delta, n^2*lambda}: both generic upper bounds (isolate one copy of
// a minimum-degree vertex; replicate a minimum edge cut). Validated against
// the exact solver by the harness.
int conjectured_lambda_double_n(const Graph& g, int n);

bool predict_max_lambda_double_n(const Graph& g, int n);

/// Everything the analyze report needs for one graph.
struct ConnectivityReport {
    int p = 0;
    int q = 0;
    int min_degree = 0;
    ConnectivityResult kappa;
    ConnectivityResult lambda;
    int floor_avg = 0;
    QDecomposition decomposition;
};

// Computes kappa and lambda and asserts the Whitney chain
// kappa <= lambda <= delta for connected inputs.
ConnectivityReport connectivity_report(const Graph& g);

}  // namespace dgraph
