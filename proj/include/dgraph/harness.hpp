#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dgraph/classify.hpp"
#include "dgraph/graph.hpp"

namespace dgraph {

struct PTooLargeError : GraphError {
    using GraphError::GraphError;
};
struct TooManyEdgesError : GraphError {
    using GraphError::GraphError;
};
struct UnknownFixtureError : GraphError {
    using GraphError::GraphError;
};

inline constexpr int kMaxEnumerationOrder = 8;

// All 2^(p(p-1)/2) labeled graphs on p vertices in lexicographic edge-mask
// order, optionally filtered to connected. Hard cap p <= 8.
void enumerate_labeled_graphs(int p, bool connected_only,
                              const std::function<void(const Graph&)>& sink);

std::vector<Graph> labeled_graphs(int p, bool connected_only);

// Uniform m-subset of the possible edges; identical (p, m, seed) always
// yields the identical graph, independent of platform.
Graph random_graph(int p, int m, std::uint64_t seed);

// fig2/fig3/fig4 are bridged- or matched-clique fixtures exercising the
// lambda < delta regimes, petersen the Petersen graph; path_k / cycle_k /
// star_k / complete_k are parameterized families, e.g. "cycle_5".
Graph named_fixture(const std::string& id);

struct CorpusSpec {
    enum class Mode { Exhaustive, Random, Named };
    Mode mode = Mode::Exhaustive;
    int p_min = 2;
    int p_max = 5;
    bool connected_only = true;
    int random_count = 0;
    int random_p = 0;
    int random_m = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> named;
};

std::vector<Graph> build_corpus(const CorpusSpec& spec);

enum class CheckId {
    lemma_1_2,
    prop_1_1,
    prop_1_3_1,
    prop_1_3_3,
    prop_1_3_4,
    prop_1_4,
    prop_1_5_1,
    prop_1_5_2,
    prop_1_6,
    prop_2_1,
    prop_2_2,
    thm_2_3,
    thm_2_4,
    fact_1,
    fact_2,
    prop_3_1,
    cor_3_2,
    thm_3_4,
    prop_3_5,
    prop_3_6_vacuity_audit,
    prop_3_7,
    thm_3_8,
    thm_3_9_audit,
    thm_3_10,
    open_question_probe,
};

const std::vector<CheckId>& all_checks();
const char* check_name(CheckId id);
std::optional<CheckId> check_from_name(const std::string& name);
bool is_audit_check(CheckId id);

struct CheckResult {
    long tested = 0;
    long passed = 0;
    long failed = 0;
    long skipped = 0;  // hypothesis not met
    // Self-contained ELT text of the first failing graph, with '#' comment
    // lines giving the check context.
    std::optional<std::string> counterexample;
    std::vector<std::string> audit;
};

struct SuiteReport {
    std::vector<std::pair<CheckId, CheckResult>> checks;

    bool any_failure() const;
    std::string to_table() const;
    std::string to_json_string() const;  // deterministic bytes
};

// Evaluates every requested check on every corpus graph for every n in ns.
// Workers partition the corpus; the merged report is independent of `jobs`.
SuiteReport run_suite(const std::vector<Graph>& corpus, const std::vector<CheckId>& checks,
                      const std::vector<int>& ns, int jobs = 1);

SuiteReport run_suite(const CorpusSpec& spec, const std::vector<CheckId>& checks,
                      const std::vector<int>& ns, int jobs = 1);

struct ProbeRow {
    std::string elt;  // one-line "p q: u-v,u-v,..." rendering
    int lambda = 0;
    int delta = 0;
    int lambda_double = 0;
    int floor_avg_double = 0;
    bool max_lambda_double = false;
};

// Empirical answer sheet for the open MidBand question: every connected
// corpus graph in the MidBand regime, with the exact max-lambda status of
// its double.
std::vector<ProbeRow> probe_midband_max_lambda(const std::vector<Graph>& corpus);

std::string probe_table(const std::vector<ProbeRow>& rows);

}  // namespace dgraph
