#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strongmatch/graph.hpp"
#include "strongmatch/matching.hpp"
#include "strongmatch/random_graph.hpp"
#include "strongmatch/weights.hpp"

namespace strongmatch {

struct PowerFit {
    double slope = 0.0;
    double intercept = 0.0; // of log(value) against log(n)
    double r_squared = 0.0;
};

/// OLS of log(value) on log(n); needs at least three distinct n and strictly
/// positive finite values (errc::degenerate_input otherwise).
PowerFit fit_power_law(std::span<const std::pair<double, double>> points);

/// Graph input of a weight experiment: a file path or a sampled instance.
struct GraphSource {
    std::string id;   // row label
    std::string file; // when non-empty, wins
    std::optional<EdgeProbModel> generator;
    VertexId n = 0; // generator size
};

struct ExperimentConfig {
    enum class Kind { weight, scaling, chernoff };
    Kind kind = Kind::weight;

    // weight
    std::vector<GraphSource> graphs;
    std::optional<WeightModel> weight_model;
    int k = 0;

    // scaling
    std::optional<EdgeProbModel> model;
    std::vector<VertexId> n_grid;

    // chernoff
    long long bern_count = 0;
    double bern_p = 0.0;
    double epsilon = 0.0;
    int mc_trials = 20000;

    // shared
    int trials = 1;
    std::uint64_t seed = 0;
    int budget = 60; // exact solving only when the conflict graph has <= budget vertices
    SolveOptions solve;
    std::string output_csv;   // empty -> stdout
    std::string output_jsonl; // empty -> skip

    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig from_json_file(const std::string& path);
};

struct WeightRunRecord {
    std::string graph_id;
    int n = 0, m = 0, k = 0;
    std::string model_label;
    int trials = 0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;
    WeightStats stats;
    double dev_rhs = 0.0;     // 1 - 2 exp(-m F1(gamma) / 16) - 3 binomial stderr
    int verdict_dev = 1;      // 1 pass, 0 fail, -1 not applicable
    double wall_ms = 0.0;
};

std::vector<WeightRunRecord> run_weight_experiment(const ExperimentConfig& config);

struct ScalingSampleRecord {
    VertexId n = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    int m = 0;
    int greedy_size = 0;
    std::optional<int> exact_size;
    long long degree_sum_lower = 0;  // sum_u d1(u) (d_{k+1}(u) - 1)
    long long degree_sum_stat = 0;   // sum_u d1(u) d_{k+1}(u)
    int min_ball_k1 = 0;
    bool isolated_edge = false;
    std::optional<double> stat_avg_lower; // m^2 / (4 degree_sum_lower)
    std::optional<double> stat_upper;     // n / min_ball_k1
    int lower_check = -1; // 1 ok, 0 violation, -1 not applicable
    int upper_check = -1;
    double wall_ms = 0.0;
};

struct ScalingSummary {
    double theta_low = 0.0, theta_up = 0.0;
    int k1 = 0;
    std::optional<PowerFit> fit_avg_lower;
    std::optional<PowerFit> fit_upper;
    std::string fit_avg_lower_note, fit_upper_note;
    int exact_solved = 0;
    int sandwich_checked = 0;
    int sandwich_violations = 0;

    std::string to_json() const;
};

struct ScalingResult {
    std::vector<ScalingSampleRecord> samples;
    ScalingSummary summary;
};

ScalingResult run_scaling_experiment(const ExperimentConfig& config);

struct ChernoffRecord {
    long long count = 0;
    double p = 0.0, eps = 0.0;
    double theta = 0.0;
    double exact_tail = 0.0;
    double bound = 0.0;
    double mc_rate = 0.0;
    int mc_trials = 0;
    bool verdict = false;
    double wall_ms = 0.0;
};

/// Exact two-sided binomial tail P(|T - theta| >= theta * eps) by direct
/// summation, checked against 2 exp(-eps^2 theta / 4); requires
/// 0 < eps <= 1/2. A seeded Monte Carlo frequency rides along as a sanity
/// figure and takes no part in the verdict.
ChernoffRecord run_chernoff_check(long long count, double p, double eps, int mc_trials,
                                  std::uint64_t seed);
ChernoffRecord run_chernoff_check(const ExperimentConfig& config);

// Frozen CSV schemas; new columns append, never reorder. Doubles print as
// shortest round-trip decimals so reruns are byte-identical.
std::string weight_csv_header();
std::string weight_csv_row(const WeightRunRecord& r);
std::string scaling_csv_header();
std::string scaling_csv_row(const ScalingSampleRecord& r);
std::string chernoff_csv_header();
std::string chernoff_csv_row(const ChernoffRecord& r);

std::string weight_jsonl_row(const WeightRunRecord& r);
std::string scaling_jsonl_row(const ScalingSampleRecord& r);
std::string chernoff_jsonl_row(const ChernoffRecord& r);

/// Shortest round-trip decimal form of x ("nan"/"inf" for specials).
std::string format_double(double x);

int cli_dispatch(int argc, const char* const* argv);

} // namespace strongmatch
