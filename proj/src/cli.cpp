#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "strongmatch/experiments.hpp"
#include "strongmatch/graph_io.hpp"

namespace strongmatch {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_config, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Writes to path, or stdout when path is empty.
void emit_lines(const std::string& path, const std::vector<std::string>& lines) {
    if (path.empty()) {
        for (const auto& l : lines) std::cout << l << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) fail(errc::bad_config, "cannot open output file " + path);
    for (const auto& l : lines) out << l << '\n';
}

void emit_optional_jsonl(const std::string& path, const std::vector<std::string>& lines) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) fail(errc::bad_config, "cannot open output file " + path);
    for (const auto& l : lines) out << l << '\n';
}

int cmd_gen(const std::string& model_path, VertexId n, std::uint64_t seed,
            const std::string& out_path) {
    EdgeProbModel model = EdgeProbModel::from_json(read_file(model_path));
    Graph g = sample_graph(model, n, seed);
    save_graph_file(g, out_path);
    std::cerr << "wrote " << out_path << " (n=" << g.vertex_count() << " m=" << g.edge_count()
              << ")\n";
    return 0;
}

int cmd_solve(const std::string& graph_path, int k, bool greedy, std::uint64_t max_nodes) {
    Graph g = load_graph_file(graph_path);
    SolveOptions opts;
    if (max_nodes > 0) opts.max_nodes = max_nodes;
    SolveResult res = greedy ? greedy_k_strong(g, k) : max_k_strong_exact(g, k, opts);
    std::cout << res.witness.to_json() << '\n';
    return 0;
}

int cmd_bounds(const std::string& graph_path, int k) {
    Graph g = load_graph_file(graph_path);
    BoundsReport lower = nu_lower_bounds(g, k);
    if (k >= 3) {
        BoundsReport upper = nu_upper_bound(g, k);
        lower.nu_upper = upper.nu_upper;
        lower.k1 = upper.k1;
    }
    std::cout << lower.to_json() << '\n';
    return 0;
}

int cmd_mweight(const std::string& graph_path, const std::string& model_path, int k,
                std::uint64_t seed) {
    Graph g = load_graph_file(graph_path);
    WeightModel model = WeightModel::from_json(read_file(model_path));
    WeightAssignment w = sample_weights(g, model, seed);
    WeightedSolveResult res = min_weight_max_k_strong(g, w, k);
    std::cout << "{\"value\":" << format_double(res.value) << ",\"witness\":" << res.witness.to_json()
              << "}\n";
    return 0;
}

int cmd_validate_model(const std::string& model_path, VertexId n) {
    EdgeProbModel model = EdgeProbModel::from_json(read_file(model_path));
    ModelDiagnostics diag = validate_model(model, n);
    std::cout << diag.to_json() << '\n';
    return diag.feasible ? 0 : 1;
}

int cmd_exp_weight(const std::string& config_path) {
    ExperimentConfig config = ExperimentConfig::from_json_file(config_path);
    auto records = run_weight_experiment(config);
    std::vector<std::string> csv{weight_csv_header()};
    std::vector<std::string> jsonl;
    bool clean = true;
    for (const auto& r : records) {
        csv.push_back(weight_csv_row(r));
        jsonl.push_back(weight_jsonl_row(r));
        if (!r.ok || !r.stats.verdict_mean || !r.stats.verdict_var || r.verdict_dev == 0)
            clean = false;
    }
    emit_lines(config.output_csv, csv);
    emit_optional_jsonl(config.output_jsonl, jsonl);
    return clean ? 0 : 1;
}

int cmd_exp_scaling(const std::string& config_path) {
    ExperimentConfig config = ExperimentConfig::from_json_file(config_path);
    ScalingResult res = run_scaling_experiment(config);
    std::vector<std::string> csv{scaling_csv_header()};
    std::vector<std::string> jsonl;
    for (const auto& r : res.samples) {
        csv.push_back(scaling_csv_row(r));
        jsonl.push_back(scaling_jsonl_row(r));
    }
    emit_lines(config.output_csv, csv);
    emit_optional_jsonl(config.output_jsonl, jsonl);
    std::cerr << res.summary.to_json() << '\n';
    return res.summary.sandwich_violations == 0 ? 0 : 1;
}

int cmd_exp_chernoff(const std::string& config_path, long long L, double p, double eps,
                     int mc_trials, std::uint64_t seed, const std::string& out_csv) {
    ChernoffRecord rec = config_path.empty()
                             ? run_chernoff_check(L, p, eps, mc_trials, seed)
                             : run_chernoff_check(ExperimentConfig::from_json_file(config_path));
    std::string csv_path = out_csv;
    if (!config_path.empty()) {
        ExperimentConfig config = ExperimentConfig::from_json_file(config_path);
        csv_path = config.output_csv;
    }
    emit_lines(csv_path, {chernoff_csv_header(), chernoff_csv_row(rec)});
    return rec.verdict ? 0 : 1;
}

} // namespace

int cli_dispatch(int argc, const char* const* argv) {
    CLI::App app{"k-strong matchings: solvers, local-neighborhood bounds, and seeded experiments"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP thread count (0 = library default)");

    std::string graph_path, model_path, config_path, out_path;
    int k = 0;
    VertexId n = 0;
    std::uint64_t seed = 0, max_nodes = 0;
    bool greedy = false;
    long long L = 0;
    double p = 0.0, eps = 0.0;
    int mc_trials = 20000;

    auto* gen = app.add_subcommand("gen", "sample a random graph and save it");
    gen->add_option("--model", model_path, "edge-probability model JSON")->required();
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--out", out_path, "output path (.json or edge list)")->required();

    auto* solve = app.add_subcommand("solve", "compute a maximum k-strong matching");
    solve->add_option("--graph", graph_path)->required();
    solve->add_option("--k", k)->required();
    solve->add_flag("--greedy", greedy, "min-degree greedy instead of exact search");
    solve->add_option("--max-nodes", max_nodes, "search node budget");

    auto* bounds = app.add_subcommand("bounds", "local-neighborhood bounds report");
    bounds->add_option("--graph", graph_path)->required();
    bounds->add_option("--k", k)->required();

    auto* mweight = app.add_subcommand("mweight", "minimum weight of a maximum k-strong matching");
    mweight->add_option("--graph", graph_path)->required();
    mweight->add_option("--k", k)->required();
    mweight->add_option("--weight-model", model_path, "weight model JSON")->required();
    mweight->add_option("--seed", seed);

    auto* vm = app.add_subcommand("validate-model", "exponent diagnostics of a model at size n");
    vm->add_option("--model", model_path)->required();
    vm->add_option("--n", n)->required();

    auto* expw = app.add_subcommand("exp-weight", "run a weight-bound experiment config");
    expw->add_option("--config", config_path)->required();

    auto* exps = app.add_subcommand("exp-scaling", "run a scaling experiment config");
    exps->add_option("--config", config_path)->required();

    auto* expc = app.add_subcommand("exp-chernoff", "exact binomial tail vs concentration bound");
    expc->add_option("--config", config_path);
    expc->add_option("--L", L, "number of Bernoulli variables");
    expc->add_option("--p", p, "success probability");
    expc->add_option("--eps", eps, "relative deviation, in (0, 1/2]");
    expc->add_option("--trials", mc_trials, "Monte Carlo sanity trials");
    expc->add_option("--seed", seed);
    expc->add_option("--out", out_path, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (gen->parsed()) return cmd_gen(model_path, n, seed, out_path);
        if (solve->parsed()) return cmd_solve(graph_path, k, greedy, max_nodes);
        if (bounds->parsed()) return cmd_bounds(graph_path, k);
        if (mweight->parsed()) return cmd_mweight(graph_path, model_path, k, seed);
        if (vm->parsed()) return cmd_validate_model(model_path, n);
        if (expw->parsed()) return cmd_exp_weight(config_path);
        if (exps->parsed()) return cmd_exp_scaling(config_path);
        if (expc->parsed()) {
            if (config_path.empty() && L == 0)
                fail(errc::bad_config, "exp-chernoff needs --config or --L/--p/--eps");
            return cmd_exp_chernoff(config_path, L, p, eps, mc_trials, seed, out_path);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace strongmatch
