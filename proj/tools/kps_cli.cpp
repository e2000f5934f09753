#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "kps/design.hpp"
#include "kps/errors.hpp"
#include "kps/graph.hpp"
#include "kps/hierarchy.hpp"
#include "kps/io.hpp"
#include "kps/mar.hpp"
#include "kps/metrics.hpp"
#include "kps/target.hpp"

namespace {

constexpr const char* kVersion = "kpstool 1.0.0";

// Exit codes: 0 success, 1 validation failure, 2 parse/config error,
// 3 search budget exhausted.
enum ExitCode { kOk = 0, kValidationFailure = 1, kParseError = 2, kBudgetExhausted = 3 };

// Design arguments accept a file path or builtin:stanton / builtin:fano /
// builtin:projective:<q> / builtin:affine:<q>.
kps::Design load_design(const std::string& spec) {
    if (spec == "builtin:stanton") return kps::stanton_design();
    if (spec == "builtin:fano") return kps::projective_plane(2);
    if (spec.rfind("builtin:projective:", 0) == 0)
        return kps::projective_plane(std::stoi(spec.substr(19)));
    if (spec.rfind("builtin:affine:", 0) == 0)
        return kps::affine_plane(std::stoi(spec.substr(15)));
    if (spec.rfind("builtin:", 0) == 0)
        throw kps::ParseError(0, "unknown builtin design '" + spec + "'");
    return kps::io::read_design(spec);
}

kps::CliqueStrategy parse_strategy(const std::string& name) {
    if (name == "greedy-largest") return kps::CliqueStrategy::GreedyLargest;
    if (name == "greedy-edge") return kps::CliqueStrategy::GreedyEdge;
    if (name == "guided") return kps::CliqueStrategy::Guided;
    throw kps::ParseError(0, "unknown strategy '" + name + "'");
}

// The must graph of a target file, or the whole graph of a graph file.
kps::Graph load_must_graph(const std::string& path) {
    std::ifstream probe(path);
    if (!probe) throw kps::ParseError(0, "cannot open " + path);
    std::string head;
    std::getline(probe, head);
    if (head.rfind("target ", 0) == 0) return kps::io::read_target(path).must;
    return kps::io::read_graph(path);
}

std::vector<std::vector<int>> guided_cliques_for(const std::string& source) {
    kps::Design d = load_design(source);
    auto params = kps::validate_bibd(d);
    auto decomp = params.lambda == 1 ? kps::point_clique_decomposition(d)
                                     : kps::pair_clique_decomposition(d);
    return decomp.cliques;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        kps::io::write_file(out_path, content);
}

int run(int argc, char** argv) {
    CLI::App app{"Key pre-distribution schemes from block designs and target graphs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.footer(
        "Metrics CSV column order (frozen): dcc,dicc,apl,so_max,so_mean,ns,nr@x...\n"
        "Design arguments accept builtin:stanton, builtin:fano,\n"
        "builtin:projective:<q>, builtin:affine:<q>, or a design file path.");

    // validate
    auto* validate = app.add_subcommand("validate", "Check a design file is a BIBD");
    std::string design_arg;
    validate->add_option("design", design_arg, "design file or builtin")->required();
    validate->callback([&] {
        kps::Design d = load_design(design_arg);
        auto params = kps::validate_bibd(d);
        std::ostringstream out;
        out << "BIBD(" << params.lambda << "," << params.k << "," << params.r << ","
            << params.v << "," << params.b << ")";
        auto g = kps::check_g_design(d);
        if (g) out << ", g-design g=" << *g;
        else out << ", not a g-design";
        auto profile = kps::intersection_profile(d);
        out << "\nintersection profile:";
        for (auto& [sz, n] : profile.counts) out << " " << sz << "x" << n;
        out << "\n";
        std::cout << out.str();
    });

    // design-graph
    auto* dgraph = app.add_subcommand("design-graph", "Write the design graph of a design");
    std::string dg_out;
    dgraph->add_option("design", design_arg, "design file or builtin")->required();
    dgraph->add_option("out", dg_out, "output graph file");
    dgraph->callback([&] {
        kps::Design d = load_design(design_arg);
        kps::validate_bibd(d);
        auto g = kps::design_graph(d);
        emit(dg_out, kps::io::serialize(g));
        if (!dg_out.empty())
            std::cout << "nodes=" << g.n << " edges=" << g.edge_count() << "\n";
    });

    // check-srg
    auto* srg = app.add_subcommand("check-srg", "Certify a graph as strongly regular");
    std::string graph_arg;
    srg->add_option("graph", graph_arg, "graph file")->required();
    srg->callback([&] {
        auto g = kps::io::read_graph(graph_arg);
        auto cert = kps::check_srg(g);
        if (!cert) {
            std::cout << "not strongly regular\n";
            throw kps::PreconditionError("not strongly regular");
        }
        std::cout << "srg(" << cert->b << "," << cert->d << "," << cert->t << ","
                  << (cert->u ? std::to_string(*cert->u) : std::string("-")) << ")\n";
    });

    // decompose
    auto* decompose = app.add_subcommand("decompose", "Clique edge-decomposition of a design graph");
    std::string decomp_mode = "auto", decomp_out;
    decompose->add_option("design", design_arg, "design file or builtin")->required();
    decompose->add_option("--mode", decomp_mode, "pair | point | auto")
        ->check(CLI::IsMember({"pair", "point", "auto"}));
    decompose->add_option("--out", decomp_out, "output clique list file");
    decompose->callback([&] {
        kps::Design d = load_design(design_arg);
        auto params = kps::validate_bibd(d);
        if (decomp_mode == "auto") decomp_mode = params.lambda == 1 ? "point" : "pair";
        auto decomp = decomp_mode == "pair" ? kps::pair_clique_decomposition(d)
                                            : kps::point_clique_decomposition(d);
        auto witness = kps::verify_decomposition(kps::design_graph(d), decomp);
        if (!witness.ok) throw kps::PreconditionError("decomposition check failed: " + witness.detail);
        std::string out;
        for (const auto& clique : decomp.cliques) {
            for (size_t i = 0; i < clique.size(); ++i)
                out += (i ? " " : "") + std::to_string(clique[i]);
            out += "\n";
        }
        emit(decomp_out, out);
        std::cout << "cliques=" << decomp.cliques.size() << " verified\n";
    });

    // extract-design
    auto* extract = app.add_subcommand("extract-design", "Recover a lambda=1 design from a regular graph");
    int extract_r = 0;
    std::string extract_out;
    extract->add_option("graph", graph_arg, "graph file")->required();
    extract->add_option("-r", extract_r, "clique size (point replication)")->required();
    extract->add_option("out", extract_out, "output design file");
    extract->callback([&] {
        auto g = kps::io::read_graph(graph_arg);
        auto d = kps::extract_design(g, extract_r);
        auto params = kps::validate_bibd(d);
        emit(extract_out, kps::io::serialize(d));
        std::cout << "BIBD(" << params.lambda << "," << params.k << "," << params.r
                  << "," << params.v << "," << params.b << ")\n";
    });

    // mar
    auto* mar = app.add_subcommand("mar", "Run the matching-and-reducing key assignment");
    std::string mar_in, mar_strategy = "greedy-largest", mar_guided, mar_assign_out, mar_trace_out;
    int mar_c0 = 3;
    uint64_t mar_seed = 0;
    std::vector<long long> mar_x;
    mar->add_option("input", mar_in, "target file (must graph) or graph file")->required();
    mar->add_option("--c0", mar_c0, "clique-size cap");
    mar->add_option("--strategy", mar_strategy, "greedy-largest | greedy-edge | guided");
    mar->add_option("--guided", mar_guided, "design whose clique decomposition guides the run");
    mar->add_option("--seed", mar_seed, "tie-breaking seed");
    mar->add_option("--out-assignment", mar_assign_out, "assignment output file");
    mar->add_option("--out-trace", mar_trace_out, "trace output file");
    mar->add_option("--x", mar_x, "capture counts for the resiliency bound");
    mar->callback([&] {
        auto gc = load_must_graph(mar_in);
        kps::MarConfig config;
        config.c0 = mar_c0;
        config.strategy = parse_strategy(mar_strategy);
        config.seed = mar_seed;
        if (!mar_guided.empty()) {
            config.strategy = kps::CliqueStrategy::Guided;
            config.guided_cliques = guided_cliques_for(mar_guided);
        }
        auto result = kps::run_mar(gc, config);
        if (!mar_assign_out.empty())
            kps::io::write_file(mar_assign_out, kps::io::serialize(result.assignment));
        if (!mar_trace_out.empty())
            kps::io::write_file(mar_trace_out, kps::io::serialize(result.trace));
        auto [so_max, so_mean] = kps::storage_overhead(result.assignment);
        std::cout << "keys=" << kps::network_scalability(result.assignment)
                  << " ring_max=" << so_max << " ring_mean=" << kps::to_string(so_mean)
                  << "\n";
        for (long long x : mar_x)
            std::cout << "bound(x=" << x << ")="
                      << kps::to_string(kps::nr_lower_bound(
                             std::max(1, gc.max_degree()), mar_c0, std::max(1LL, gc.edge_count()), x))
                      << "\n";
    });

    // metrics
    auto* metrics = app.add_subcommand("metrics", "Evaluate an assignment against a target");
    std::string m_assign, m_target, m_mode = "exact", m_format = "text", m_nr_table;
    long long m_trials = 10000;
    uint64_t m_seed = 0;
    std::vector<long long> m_x;
    metrics->add_option("assignment", m_assign, "assignment file")->required();
    metrics->add_option("target", m_target, "target file")->required();
    metrics->add_option("--x", m_x, "capture counts");
    metrics->add_option("--mode", m_mode, "exact | mc")->check(CLI::IsMember({"exact", "mc"}));
    metrics->add_option("--trials", m_trials, "monte-carlo trials");
    metrics->add_option("--seed", m_seed, "monte-carlo seed");
    metrics->add_option("--format", m_format, "text | csv")->check(CLI::IsMember({"text", "csv"}));
    metrics->add_option("--nr-table", m_nr_table, "write per-x NR CSV here");
    metrics->callback([&] {
        auto a = kps::io::read_assignment(m_assign);
        auto t = kps::io::read_target(m_target);
        kps::EvalMode mode{m_mode == "mc", m_trials, m_seed};
        auto report = kps::evaluate(a, t, m_x, mode);
        if (m_format == "csv")
            std::cout << kps::io::csv_header(report) << kps::io::csv_row(report);
        else
            std::cout << kps::io::text_report(report) << "# " << kVersion << "\n";
        if (!m_nr_table.empty()) kps::io::write_file(m_nr_table, kps::io::nr_table_csv(report));
    });

    // scenario
    auto* scenario = app.add_subcommand("scenario", "Hierarchical group KPS vs classical baseline");
    std::string scen_config, scen_out;
    scenario->add_option("config", scen_config, "key=value config file")->required();
    scenario->add_option("--out", scen_out, "comparison CSV output file");
    scenario->callback([&] {
        auto config = kps::io::read_config(scen_config);
        auto need = [&](const std::string& key) {
            auto it = config.find(key);
            if (it == config.end()) throw kps::ParseError(0, "config missing key '" + key + "'");
            return it->second;
        };
        kps::GroupPlan plan;
        plan.s = std::stoi(need("s"));
        plan.b0 = std::stoi(need("b0"));
        plan.tau0 = std::stoi(need("tau0"));
        plan.group_design = load_design(need("group_design"));
        plan.central_design = load_design(need("central_design"));
        auto classical = load_design(need("classical_design"));

        auto target = kps::hierarchical_target(plan.s, plan.b0, plan.tau0);
        auto graph_based = kps::build_group_kps(plan);
        auto classical_kps = kps::build_classical_kps(plan.s * plan.b0, classical);

        std::vector<long long> xs;
        if (config.count("x")) {
            std::istringstream ss(config.at("x"));
            std::string tok;
            while (std::getline(ss, tok, ',')) xs.push_back(std::stoll(tok));
        }
        kps::EvalMode mode;
        if (config.count("mode")) mode.monte_carlo = config.at("mode") == "mc";
        if (config.count("trials")) mode.trials = std::stoll(config.at("trials"));
        if (config.count("seed")) mode.seed = std::stoull(config.at("seed"));

        auto report = kps::compare(graph_based, classical_kps, target, xs, mode);
        emit(scen_out, "# " + std::string(kVersion) + "\n" + kps::io::csv_comparison(report));
    });

    // search
    auto* search = app.add_subcommand("search", "Backtracking search for a BIBD");
    long long s_lambda = 1, s_k = 3, s_v = 7, s_budget = 100'000'000;
    std::string search_out;
    search->add_option("lambda", s_lambda)->required();
    search->add_option("k", s_k)->required();
    search->add_option("v", s_v)->required();
    search->add_option("--budget", s_budget, "search-tree node budget");
    search->add_option("--out", search_out, "output design file");
    search->callback([&] {
        auto found = kps::brute_force_search(s_lambda, s_k, s_v, s_budget);
        if (!found) throw kps::PreconditionError("search space exhausted, no design");
        auto params = kps::validate_bibd(*found);
        emit(search_out, kps::io::serialize(*found));
        std::cout << "found BIBD(" << params.lambda << "," << params.k << ","
                  << params.r << "," << params.v << "," << params.b << ")\n";
    });

    // compare
    auto* compare = app.add_subcommand("compare", "Side-by-side metrics for two assignments");
    std::string c_a, c_b, c_target, c_out;
    std::vector<long long> c_x;
    long long c_trials = 10000;
    uint64_t c_seed = 0;
    std::string c_mode = "exact";
    compare->add_option("assignment_a", c_a, "first assignment file")->required();
    compare->add_option("assignment_b", c_b, "second assignment file")->required();
    compare->add_option("target", c_target, "target file")->required();
    compare->add_option("--x", c_x, "capture counts");
    compare->add_option("--mode", c_mode, "exact | mc")->check(CLI::IsMember({"exact", "mc"}));
    compare->add_option("--trials", c_trials, "monte-carlo trials");
    compare->add_option("--seed", c_seed, "monte-carlo seed");
    compare->add_option("--out", c_out, "comparison CSV output file");
    compare->callback([&] {
        auto a = kps::io::read_assignment(c_a);
        auto b = kps::io::read_assignment(c_b);
        auto t = kps::io::read_target(c_target);
        kps::EvalMode mode{c_mode == "mc", c_trials, c_seed};
        auto report = kps::compare(a, b, t, c_x, mode);
        emit(c_out, "# " + std::string(kVersion) + "\n" + kps::io::csv_comparison(report));
    });

    CLI11_PARSE(app, argc, argv);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const kps::ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.line > 0) std::cerr << " (line " << e.line << ")";
        std::cerr << "\n";
        return kParseError;
    } catch (const kps::NonIntegralParameters& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kParseError;
    } catch (const kps::BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kBudgetExhausted;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
}
