#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dgraph/classify.hpp"
#include "dgraph/graph.hpp"
#include "dgraph/hamilton.hpp"
#include "dgraph/harness.hpp"
#include "dgraph/product.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitInputError = 2;
constexpr int kExitNotHamiltonian = 3;
constexpr int kExitLiftInfeasible = 4;

dgraph::Graph load_graph(const std::string& path, bool g6) {
    std::ifstream in(path);
    if (!in) throw dgraph::ParseError("cannot open " + path);
    if (g6) {
        std::string line;
        if (!std::getline(in, line)) throw dgraph::ParseError("empty graph6 file " + path);
        return dgraph::parse_graph6(line);
    }
    return dgraph::parse_elt(in);
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw dgraph::ParseError(std::string("bad ") + what + " list: " + text);
        }
    }
    if (out.empty()) throw dgraph::ParseError(std::string("empty ") + what + " list");
    return out;
}

ordered_json witness_json(const dgraph::ConnectivityResult& r) {
    ordered_json j;
    j["value"] = r.value;
    if (r.witness) {
        if (r.witness->kind == dgraph::WitnessKind::Vertices) {
            j["witness"] = r.witness->vertices;
        } else {
            auto arr = ordered_json::array();
            for (auto [u, v] : r.witness->edges) arr.push_back(ordered_json::array({u, v}));
            j["witness"] = std::move(arr);
        }
    } else {
        j["witness"] = nullptr;
        j["witness_absent_reason"] =
            r.absent_reason == dgraph::WitnessAbsence::CompleteGraph ? "complete" : "trivial";
    }
    return j;
}

ordered_json analyze_json(const std::string& name, const dgraph::Graph& g,
                          const std::vector<int>& ns) {
    using namespace dgraph;
    const auto report = connectivity_report(g);
    const bool connected = is_connected(g);
    const bool predictable = connected && g.p() >= 2;

    ordered_json j;
    j["schema"] = 1;
    j["input"] = name;
    j["p"] = report.p;
    j["q"] = report.q;
    j["degrees"] = basic_metrics(g).degrees;
    j["delta"] = report.min_degree;
    j["connected"] = connected;
    j["kappa"] = witness_json(report.kappa);
    j["lambda"] = witness_json(report.lambda);
    j["floor_avg"] = report.floor_avg;
    j["t"] = report.decomposition.t;
    j["t0"] = report.decomposition.t0;
    j["max_kappa"] = is_max_kappa(g);
    j["max_lambda"] = is_max_lambda(g);
    j["lambda_regime"] = predictable ? ordered_json(to_string(lambda_regime(g))) : nullptr;

    j["window"] = ordered_json::object();
    j["predictions"] = ordered_json::object();
    for (int n : ns) {
        if (n < 2) continue;
        const std::string key = std::to_string(n);
        j["window"][key] = to_string(window_class(g, n));
        if (!predictable) {
            j["predictions"][key] = nullptr;
            continue;
        }
        ordered_json p;
        p["kappa_double_n"] = predict_kappa_double_n(g, n);
        if (n == 2) p["lambda_double"] = predict_lambda_double(g);
        p["lambda_double_n_as_stated"] = predict_lambda_double_n_as_stated(g, n);
        p["conjectured_lambda_double_n"] = conjectured_lambda_double_n(g, n);
        p["max_kappa_double_n"] = predict_max_kappa_double_n(g, n);
        p["max_lambda_double_n"] = predict_max_lambda_double_n(g, n);
        j["predictions"][key] = std::move(p);
    }
    return j;
}

void print_analyze_text(const ordered_json& j, std::ostream& out) {
    out << "input: " << j["input"].get<std::string>() << '\n';
    out << "p=" << j["p"] << " q=" << j["q"] << " delta=" << j["delta"]
        << " connected=" << j["connected"] << '\n';
    out << "kappa=" << j["kappa"]["value"] << " lambda=" << j["lambda"]["value"]
        << " floor_avg=" << j["floor_avg"] << " (t=" << j["t"] << ", t0=" << j["t0"] << ")\n";
    out << "max_kappa=" << j["max_kappa"] << " max_lambda=" << j["max_lambda"]
        << " lambda_regime=" << j["lambda_regime"].dump() << '\n';
    for (const auto& [n, w] : j["window"].items())
        out << "n=" << n << ": window=" << w.get<std::string>()
            << " predictions=" << j["predictions"][n].dump() << '\n';
}

int cmd_analyze(const std::string& path, const std::string& n_list, bool g6, bool json) {
    const auto g = load_graph(path, g6);
    if (g.p() < 1) throw dgraph::EmptyGraphError("analyze requires p >= 1");
    const auto ns = parse_int_list(n_list, "n");
    const auto j = analyze_json(path, g, ns);
    if (json)
        std::cout << j.dump(2) << '\n';
    else
        print_analyze_text(j, std::cout);
    return 0;
}

int cmd_double(const std::string& path, int n, const std::string& out_path, bool g6, bool dot) {
    const auto g = load_graph(path, g6);
    const auto d = dgraph::double_n(g, n);
    const std::string text =
        dot ? dgraph::emit_dot(d.graph(), "D" + std::to_string(n)) : dgraph::emit_elt(d.graph());
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw dgraph::ParseError("cannot write " + out_path);
        out << text;
    }
    return 0;
}

int cmd_lift(const std::string& path, int n, bool g6, bool json) {
    const auto g = load_graph(path, g6);
    const auto gamma = dgraph::hamiltonian_cycle(g);
    if (!gamma) {
        std::cerr << "error: input graph is not Hamiltonian\n";
        return kExitNotHamiltonian;
    }
    dgraph::CycleSeq lifted;
    try {
        lifted = dgraph::lift_hamiltonian(g, *gamma, n);
    } catch (const dgraph::TooShortForLiftError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitLiftInfeasible;
    }
    if (json) {
        std::cout << ordered_json(lifted).dump() << '\n';
    } else {
        for (size_t i = 0; i < lifted.size(); ++i)
            std::cout << lifted[i] << (i + 1 == lifted.size() ? '\n' : ' ');
    }
    return 0;
}

int cmd_verify(int pmin, int pmax, const std::string& n_list, const std::string& check_list,
               int jobs, const std::string& random_spec, std::uint64_t seed, bool fixtures,
               bool json) {
    using namespace dgraph;
    if (pmax > kMaxEnumerationOrder)
        throw PTooLargeError("--pmax must be <= " + std::to_string(kMaxEnumerationOrder));

    std::vector<CheckId> checks;
    if (check_list.empty()) {
        checks = all_checks();
    } else {
        std::stringstream ss(check_list);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto id = check_from_name(item);
            if (!id) throw ParseError("unknown check: " + item);
            checks.push_back(*id);
        }
    }

    CorpusSpec spec;
    spec.p_min = pmin;
    spec.p_max = pmax;
    auto corpus = build_corpus(spec);
    if (!random_spec.empty()) {
        const auto r = parse_int_list(random_spec, "random");
        if (r.size() != 3) throw ParseError("--random expects count,p,m");
        CorpusSpec rs;
        rs.mode = CorpusSpec::Mode::Random;
        rs.random_count = r[0];
        rs.random_p = r[1];
        rs.random_m = r[2];
        rs.seed = seed;
        for (auto& g : build_corpus(rs)) corpus.push_back(std::move(g));
    }
    if (fixtures)
        for (const char* id : {"fig2", "fig3", "fig4"}) corpus.push_back(named_fixture(id));

    const auto report = run_suite(corpus, checks, parse_int_list(n_list, "n"), jobs);
    if (json)
        std::cout << report.to_json_string();
    else
        std::cout << report.to_table();
    return report.any_failure() ? 1 : 0;
}

int cmd_probe(int pmax, bool fig4, bool json) {
    using namespace dgraph;
    if (pmax > kMaxEnumerationOrder)
        throw PTooLargeError("--pmax must be <= " + std::to_string(kMaxEnumerationOrder));
    CorpusSpec spec;
    spec.p_max = pmax;
    auto corpus = build_corpus(spec);
    if (fig4) corpus.push_back(named_fixture("fig4"));
    const auto rows = probe_midband_max_lambda(corpus);
    if (json) {
        ordered_json j;
        j["schema"] = 1;
        j["rows"] = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["graph"] = r.elt;
            row["lambda"] = r.lambda;
            row["delta"] = r.delta;
            row["lambda_double"] = r.lambda_double;
            row["floor_avg_double"] = r.floor_avg_double;
            row["max_lambda_double"] = r.max_lambda_double;
            j["rows"].push_back(std::move(row));
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << probe_table(rows);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double graph construction, connectivity classification, and verification"};
    app.require_subcommand(1);

    std::string path, n_list = "2,3", out_path, check_list, random_spec;
    int n = 2, pmin = 2, pmax = 5, jobs = 1;
    std::uint64_t seed = 0;
    bool g6 = false, json = false, dot = false, no_fixtures = false, no_fig4 = false;

    auto* analyze = app.add_subcommand("analyze", "full connectivity and prediction report");
    analyze->add_option("path", path)->required();
    analyze->add_option("--n", n_list, "comma-separated n values");
    analyze->add_flag("--g6", g6, "input is graph6");
    analyze->add_flag("--json", json);

    auto* dbl = app.add_subcommand("double", "emit D_n[G]");
    dbl->add_option("path", path)->required();
    dbl->add_option("-n", n, "layer count")->required()->check(CLI::PositiveNumber);
    dbl->add_option("-o", out_path, "output file (default stdout)");
    dbl->add_flag("--g6", g6, "input is graph6");
    dbl->add_flag("--dot", dot, "emit DOT instead of ELT");

    auto* lift = app.add_subcommand("lift", "lift a Hamiltonian cycle into D_n[G]");
    lift->add_option("path", path)->required();
    lift->add_option("-n", n)->required()->check(CLI::Range(2, 1000));
    lift->add_flag("--g6", g6, "input is graph6");
    lift->add_flag("--json", json);

    auto* verify = app.add_subcommand("verify", "run the theorem suite over a corpus");
    verify->add_option("--pmin", pmin)->check(CLI::PositiveNumber);
    verify->add_option("--pmax", pmax)->check(CLI::PositiveNumber);
    verify->add_option("--n", n_list, "comma-separated n values");
    verify->add_option("--checks", check_list, "comma-separated check names (default all)");
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    verify->add_option("--random", random_spec, "extra random corpus: count,p,m");
    verify->add_option("--seed", seed);
    verify->add_flag("--no-fixtures", no_fixtures, "omit the fig2/fig3/fig4 fixtures");
    verify->add_flag("--json", json);

    auto* probe = app.add_subcommand("probe", "open-question probe over MidBand graphs");
    probe->add_option("--pmax", pmax)->check(CLI::PositiveNumber);
    probe->add_flag("--no-fig4", no_fig4, "omit the fig4 fixture");
    probe->add_flag("--json", json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(path, n_list, g6, json);
        if (dbl->parsed()) return cmd_double(path, n, out_path, g6, dot);
        if (lift->parsed()) return cmd_lift(path, n, g6, json);
        if (verify->parsed())
            return cmd_verify(pmin, pmax, n_list, check_list, jobs, random_spec, seed,
                              !no_fixtures, json);
        if (probe->parsed()) return cmd_probe(pmax, !no_fig4, json);
    } catch (const dgraph::GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return 0;
}
