// Command-line front end: spectral radius, parameters, bound reports, family
// generation, recognizers, and the exhaustive verification suites.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "specgraph/bounds.hpp"
#include "specgraph/enumerate.hpp"
#include "specgraph/families.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/independence.hpp"
#include "specgraph/report_json.hpp"
#include "specgraph/spectra.hpp"
#include "specgraph/verify.hpp"

using namespace specgraph;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputOptions {
    std::vector<std::string> graphs;  // positional graph6 strings
    std::string file;                 // graph6 lines
    std::string edge_file;            // single edge-list text graph
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("graphs", in.graphs, "graph6 strings");
    cmd->add_option("--file", in.file, "file with one graph6 string per line");
    cmd->add_option("--edges", in.edge_file, "file with one graph as edge-list text (n, then u v lines)");
}

std::vector<std::pair<std::string, Graph>> load_graphs(const InputOptions& in) {
    std::vector<std::pair<std::string, Graph>> out;
    auto decode_line = [&](const std::string& line, long lineno, const std::string& source) {
        if (line.empty()) return;
        try {
            out.emplace_back(line, graph6_decode(line));
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << source << " line " << lineno << " ('" << line << "'): " << e.what();
            throw UsageError(msg.str());
        }
    };
    long lineno = 0;
    for (const auto& s : in.graphs) decode_line(s, ++lineno, "argument");
    if (!in.file.empty()) {
        std::ifstream f(in.file);
        if (!f) throw UsageError("cannot open " + in.file);
        std::string line;
        lineno = 0;
        while (std::getline(f, line)) decode_line(line, ++lineno, in.file);
    }
    if (!in.edge_file.empty()) {
        std::ifstream f(in.edge_file);
        if (!f) throw UsageError("cannot open " + in.edge_file);
        std::stringstream buf;
        buf << f.rdbuf();
        try {
            Graph g = parse_edge_list_text(buf.str());
            out.emplace_back(graph6_encode(g), std::move(g));
        } catch (const std::exception& e) {
            throw UsageError(in.edge_file + ": " + e.what());
        }
    }
    if (out.empty()) {
        std::string line;
        lineno = 0;
        while (std::getline(std::cin, line)) decode_line(line, ++lineno, "stdin");
    }
    if (out.empty()) throw UsageError("no input graphs (pass graph6 strings, --file, or stdin)");
    return out;
}

FamilySpec parse_family(const std::string& name, int k) {
    if (name == "tree") return {FamilyKind::Tree};
    if (name == "ktree") return {FamilyKind::KTree, k};
    if (name == "block") return {FamilyKind::Block};
    if (name == "dh") return {FamilyKind::DistanceHereditary};
    if (name == "all-connected") return {FamilyKind::AllConnected};
    throw UsageError("unknown family '" + name + "'");
}

int run_rho(const InputOptions& in, const std::string& format) {
    auto graphs = load_graphs(in);
    if (format == "csv") std::cout << "graph6,rho,residual\n";
    for (const auto& [g6, g] : graphs) {
        SpectralData sd = spectral_radius(g);
        if (format == "json") {
            json j = to_json(sd);
            j["graph6"] = g6;
            std::cout << j.dump() << "\n";
        } else if (format == "csv") {
            std::cout.precision(15);
            std::cout << g6 << "," << sd.rho << "," << sd.residual << "\n";
        } else {
            std::cout.precision(15);
            std::cout << g6 << " rho=" << sd.rho << " residual=" << sd.residual << "\n";
        }
    }
    return kExitOk;
}

int run_params(const InputOptions& in, const std::string& format) {
    auto graphs = load_graphs(in);
    if (format == "csv")
        std::cout << "graph6,n,m,delta_max,delta_min,diameter,kappa,alpha,is_regular\n";
    for (const auto& [g6, g] : graphs) {
        GraphParams p = compute_params(g);
        if (format == "json") {
            json j = to_json(p);
            j["graph6"] = g6;
            std::cout << j.dump() << "\n";
        } else if (format == "csv") {
            std::cout << g6 << "," << p.n << "," << p.m << "," << p.delta_max << ","
                      << p.delta_min << "," << p.diameter << "," << p.edge_connectivity << ","
                      << p.independence_number << "," << (p.is_regular ? 1 : 0) << "\n";
        } else {
            std::cout << g6 << " n=" << p.n << " m=" << p.m << " delta=" << p.delta_max
                      << " diameter=" << p.diameter << " kappa=" << p.edge_connectivity
                      << " alpha=" << p.independence_number
                      << (p.is_regular ? " regular" : " nonregular") << "\n";
        }
    }
    return kExitOk;
}

// bounds evaluated from a params document alone: formula values only, no
// spectral columns
int run_bounds_from_params(const std::string& path, const std::string& format) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    if (format == "csv") std::cout << bound_report_csv_header() << "\n";
    std::string line;
    long lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        GraphParams p;
        try {
            const json j = json::parse(line);
            p.n = j.at("n");
            p.m = j.at("m");
            p.delta_max = j.at("delta_max");
            p.delta_min = j.at("delta_min");
            p.diameter = j.at("diameter");
            p.edge_connectivity = j.at("edge_connectivity");
            p.independence_number = j.at("independence_number");
            p.is_regular = j.at("is_regular");
        } catch (const std::exception& e) {
            throw UsageError(path + " line " + std::to_string(lineno) + ": " + e.what());
        }
        json out{{"schema_version", kSchemaVersion}, {"params", to_json(p)}};
        json values = json::object();
        if (!p.is_regular) {
            values["cioba_v1"] = cioba_bound_v1(p);
            values["cioba_v2"] = cioba_bound_v2(p);
            values["dh_bound"] = dh_bound(p);
            values["dh_bound_unnormalized"] = dh_bound_unnormalized(p);
        }
        values["tree_sqrt"] = std::sqrt(double(p.n - 1));
        if (p.independence_number >= 2 && p.independence_number <= p.n - 2) {
            values["pineapple_exact"] = pineapple_rho_exact(p.n, p.independence_number);
            values["pineapple_regime"] = pineapple_upper(p.n, p.independence_number).value;
        }
        out["bounds"] = values;
        if (format == "csv") {
            // keep the fixed column order, leaving unavailable cells empty
            std::ostringstream fixed;
            fixed.precision(15);
            fixed << "(params)," << p.n << "," << p.m << "," << p.delta_max << "," << p.diameter
                  << "," << p.edge_connectivity << "," << p.independence_number << ",,";
            for (const char* c : {"cioba_v1", "cioba_v2", "dh_bound", "dh_bound_unnormalized",
                                  "tree_sqrt", "pineapple_exact", "pineapple_regime"}) {
                fixed << ",";
                if (values.contains(c)) fixed << values[c].get<double>();
            }
            std::cout << fixed.str() << "\n";
        } else {
            std::cout << out.dump() << "\n";
        }
    }
    return kExitOk;
}

int run_bounds(const InputOptions& in, const std::string& format) {
    auto graphs = load_graphs(in);
    if (format == "csv") std::cout << bound_report_csv_header() << "\n";
    for (const auto& [g6, g] : graphs) {
        BoundReport r = evaluate_bounds(g);
        if (format == "json") {
            std::cout << to_json(r).dump() << "\n";
        } else if (format == "csv") {
            std::cout << bound_report_csv_row(r) << "\n";
        } else {
            std::cout.precision(12);
            std::cout << g6 << " rho=" << r.rho << " gap=" << r.gap;
            for (const auto& e : r.entries)
                if (e.applicable)
                    std::cout << " " << e.name << "=" << e.value
                              << (e.satisfied ? "" : " VIOLATED");
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_gen(const std::string& family, int n, std::optional<int> alpha, std::optional<int> k,
            bool all) {
    if (family == "pineapple") {
        if (all) {
            for (int a = 1; a <= std::max(1, n - 1); ++a)
                std::cout << graph6_encode(pineapple(n, a)) << "\n";
        } else {
            if (!alpha) throw UsageError("gen pineapple needs --alpha (or --all)");
            std::cout << graph6_encode(pineapple(n, *alpha)) << "\n";
        }
        return kExitOk;
    }
    if (family == "s-knk") {
        if (all) {
            for (int kk = 1; kk <= n; ++kk) std::cout << graph6_encode(s_knk(n, kk)) << "\n";
        } else {
            if (!k) throw UsageError("gen s-knk needs --k (or --all)");
            std::cout << graph6_encode(s_knk(n, *k)) << "\n";
        }
        return kExitOk;
    }
    if (family == "ktree" && !k) throw UsageError("gen ktree needs --k");
    FamilySpec spec = parse_family(family, k.value_or(1));
    enumerate_family(n, spec, [&](const Graph& g) {
        std::cout << graph6_encode(g) << "\n";
        return true;
    });
    return kExitOk;
}

int run_recognize(const std::string& cls, const InputOptions& in, int k,
                  const std::string& format) {
    auto graphs = load_graphs(in);
    bool all_accept = true;
    for (const auto& [g6, g] : graphs) {
        if (cls == "ktree") {
            auto cert = recognize_ktree(g, k);
            all_accept = all_accept && cert.has_value();
            if (format == "json") {
                json j{{"schema_version", kSchemaVersion},
                       {"graph6", g6},
                       {"class", cls},
                       {"accept", cert.has_value()}};
                if (cert) j["certificate"] = to_json(*cert);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << g6 << " " << (cert ? "accept" : "reject") << "\n";
            }
            continue;
        }
        bool accept;
        if (cls == "block")
            accept = recognize_block_graph(g);
        else if (cls == "dh")
            accept = recognize_distance_hereditary(g);
        else if (cls == "tree")
            accept = is_tree(g);
        else
            throw UsageError("unknown class '" + cls + "'");
        all_accept = all_accept && accept;
        if (format == "json")
            std::cout << json{{"schema_version", kSchemaVersion},
                              {"graph6", g6},
                              {"class", cls},
                              {"accept", accept}}
                             .dump()
                      << "\n";
        else
            std::cout << g6 << " " << (accept ? "accept" : "reject") << "\n";
    }
    return all_accept ? kExitOk : kExitViolations;
}

void print_report(const VerificationReport& r, const std::string& format, bool& header_done) {
    if (format == "json") {
        std::cout << to_json(r).dump() << "\n";
        return;
    }
    if (format == "csv") {
        if (!header_done) {
            std::cout << verification_csv_header() << "\n";
            header_done = true;
        }
        std::cout << verification_csv_row(r) << "\n";
        return;
    }
    std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.suite << " [" << r.universe << "] "
              << r.instances << " instances, " << r.violation_total << " violations";
    if (r.premise_total > 0) std::cout << ", " << r.premise_total << " premise observations";
    std::cout << " (" << r.wall_seconds << "s)\n";
    for (const auto& v : r.violations)
        std::cout << "  violation " << v.graph6 << ": " << v.detail << "\n";
    for (const auto& p : r.premise_log)
        std::cout << "  premise " << p.graph6 << ": " << p.detail << "\n";
    for (const auto& w : r.witnesses) {
        std::cout.precision(15);
        std::cout << "  witness " << w.graph6 << " rho=" << w.rho << " (" << w.note << ")\n";
    }
}

int run_verify(const std::string& suite, std::optional<int> n_max, std::optional<int> n_opt,
               std::optional<int> alpha, std::optional<int> k, const std::string& format) {
    std::vector<VerificationReport> reports;
    if (suite == "dh-lower-bound") {
        reports.push_back(verify_dh_lower_bound(n_max.value_or(8)));
    } else if (suite == "treewidth-extremal") {
        const int kk = k.value_or(1);
        if (n_opt) {
            reports.push_back(verify_treewidth_extremal(*n_opt, kk));
        } else {
            for (int n = std::max(kk, 2); n <= n_max.value_or(10); ++n)
                reports.push_back(verify_treewidth_extremal(n, kk));
        }
    } else if (suite == "block-extremal") {
        auto run_for = [&](int n) {
            if (alpha) {
                reports.push_back(verify_block_extremal(n, *alpha));
            } else {
                for (int a = 1; a <= std::max(1, n - 1); ++a)
                    reports.push_back(verify_block_extremal(n, a));
            }
        };
        if (n_opt)
            run_for(*n_opt);
        else
            for (int n = 1; n <= n_max.value_or(8); ++n) run_for(n);
    } else if (suite == "independence") {
        reports.push_back(verify_independence_machinery(n_max.value_or(8)));
    } else if (suite == "pineapple-bounds") {
        reports.push_back(verify_pineapple_bounds(n_max.value_or(30)));
    } else {
        throw UsageError("unknown suite '" + suite + "'");
    }

    bool header_done = false;
    bool all_passed = true;
    for (const auto& r : reports) {
        print_report(r, format, header_done);
        all_passed = all_passed && r.passed();
    }
    return all_passed ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral-radius bounds and extremal-graph verification toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    InputOptions rho_in, params_in, bounds_in, rec_in;
    auto* rho_cmd = app.add_subcommand(
        "rho", "spectral radius and Perron vector (csv columns: graph6,rho,residual)");
    add_input_flags(rho_cmd, rho_in);

    auto* params_cmd = app.add_subcommand(
        "params",
        "nonspectral graph parameters (csv columns: "
        "graph6,n,m,delta_max,delta_min,diameter,kappa,alpha,is_regular)");
    add_input_flags(params_cmd, params_in);

    auto* bounds_cmd = app.add_subcommand(
        "bounds",
        "per-graph bound report (csv columns: graph6,n,m,delta,diameter,kappa,alpha,rho,gap,"
        "cioba_v1,cioba_v2,dh_bound,dh_bound_unnormalized,tree_sqrt,pineapple_exact,"
        "pineapple_regime)");
    add_input_flags(bounds_cmd, bounds_in);
    std::string bounds_params_file;
    bounds_cmd->add_option("--from-params", bounds_params_file,
                           "evaluate formula values from params JSON lines instead of graphs");

    auto* gen_cmd = app.add_subcommand("gen", "emit graph6 lines for a family");
    std::string gen_family;
    int gen_n = 0;
    std::optional<int> gen_alpha, gen_k;
    bool gen_all = false;
    gen_cmd->add_option("family", gen_family,
                        "tree | ktree | block | dh | all-connected | pineapple | s-knk")
        ->required();
    gen_cmd->add_option("--n", gen_n, "vertex count")->required();
    gen_cmd->add_option("--alpha", gen_alpha, "independence number (pineapple)");
    gen_cmd->add_option("--k", gen_k, "clique size (ktree, s-knk)");
    gen_cmd->add_flag("--all", gen_all, "emit every valid parameter value");

    auto* rec_cmd = app.add_subcommand("recognize", "class membership with certificate");
    std::string rec_class;
    int rec_k = 1;
    rec_cmd->add_option("class", rec_class, "block | dh | tree | ktree")->required();
    rec_cmd->add_option("--k", rec_k, "clique size for ktree");
    add_input_flags(rec_cmd, rec_in);

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive certification suites");
    std::string suite;
    std::optional<int> v_nmax, v_n, v_alpha, v_k;
    verify_cmd
        ->add_option("suite", suite,
                     "dh-lower-bound | treewidth-extremal | block-extremal | independence | "
                     "pineapple-bounds")
        ->required();
    verify_cmd->add_option("--n-max", v_nmax, "largest vertex count");
    verify_cmd->add_option("--n", v_n, "single vertex count");
    verify_cmd->add_option("--alpha", v_alpha, "independence number filter");
    verify_cmd->add_option("--k", v_k, "clique size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints help/message
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rho_cmd->parsed()) return run_rho(rho_in, format);
        if (params_cmd->parsed()) return run_params(params_in, format);
        if (bounds_cmd->parsed())
            return bounds_params_file.empty() ? run_bounds(bounds_in, format)
                                              : run_bounds_from_params(bounds_params_file, format);
        if (gen_cmd->parsed()) return run_gen(gen_family, gen_n, gen_alpha, gen_k, gen_all);
        if (rec_cmd->parsed()) return run_recognize(rec_class, rec_in, rec_k, format);
        if (verify_cmd->parsed()) return run_verify(suite, v_nmax, v_n, v_alpha, v_k, format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
