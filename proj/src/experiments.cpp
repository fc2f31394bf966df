#include "strongmatch/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "strongmatch/graph_io.hpp"
#include "strongmatch/rng.hpp"

namespace strongmatch {

namespace {

constexpr std::uint64_t kGraphGenSalt = 0x67656e2d67726170ULL;
constexpr std::uint64_t kScalingSalt = 0x7363616c696e6721ULL;
constexpr std::uint64_t kBinomialSalt = 0x62696e6f6d69616cULL;

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::bad_format, e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_config, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Medians of finite values; nullopt when none exist.
std::optional<double> finite_median(std::vector<double> xs) {
    std::erase_if(xs, [](double x) { return !std::isfinite(x); });
    if (xs.empty()) return std::nullopt;
    std::sort(xs.begin(), xs.end());
    std::size_t mid = xs.size() / 2;
    if (xs.size() % 2 == 1) return xs[mid];
    return 0.5 * (xs[mid - 1] + xs[mid]);
}

std::string csv_escape(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

std::string check_str(int c) { return c == 1 ? "ok" : c == 0 ? "violation" : "na"; }

} // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

PowerFit fit_power_law(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) fail(errc::degenerate_input, "need at least 3 points");
    std::vector<double> xs, ys;
    for (const auto& [n, value] : points) {
        if (!(n > 0) || !(value > 0) || !std::isfinite(value) || !std::isfinite(n))
            fail(errc::degenerate_input, "points must be positive and finite");
        xs.push_back(std::log(n));
        ys.push_back(std::log(value));
    }
    std::vector<double> distinct = xs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3) fail(errc::degenerate_input, "need at least 3 distinct n");

    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    PowerFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss_res += r * r;
    }
    fit.r_squared = syy > 0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
    return from_json_text(read_file(path));
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    nlohmann::json j = parse_json(text);
    if (!j.is_object() || !j.contains("kind")) fail(errc::bad_config, "config needs \"kind\"");

    ExperimentConfig c;
    auto require = [&](const char* field) -> const nlohmann::json& {
        if (!j.contains(field)) fail(errc::bad_config, std::string("config misses \"") + field + "\"");
        return j.at(field);
    };
    auto opt_common = [&] {
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("budget")) c.budget = j.at("budget").get<int>();
        if (j.contains("max_nodes")) c.solve.max_nodes = j.at("max_nodes").get<std::uint64_t>();
        if (j.contains("output_csv")) c.output_csv = j.at("output_csv").get<std::string>();
        if (j.contains("output_jsonl")) c.output_jsonl = j.at("output_jsonl").get<std::string>();
    };

    std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "weight") {
            c.kind = Kind::weight;
            c.k = require("k").get<int>();
            c.trials = require("trials").get<int>();
            c.weight_model = WeightModel::from_json(require("weight_model").dump());
            for (const auto& gj : require("graphs")) {
                GraphSource src;
                if (gj.contains("file")) {
                    src.file = gj.at("file").get<std::string>();
                    src.id = gj.contains("id") ? gj.at("id").get<std::string>() : src.file;
                } else if (gj.contains("generator")) {
                    const auto& gen = gj.at("generator");
                    src.generator = EdgeProbModel::from_json(gen.at("model").dump());
                    src.n = gen.at("n").get<VertexId>();
                    src.id = gj.contains("id") ? gj.at("id").get<std::string>()
                                               : "gen-n" + std::to_string(src.n);
                } else {
                    fail(errc::bad_config, "graph entry needs \"file\" or \"generator\"");
                }
                c.graphs.push_back(std::move(src));
            }
            if (c.graphs.empty()) fail(errc::bad_config, "weight config needs at least one graph");
        } else if (kind == "scaling") {
            c.kind = Kind::scaling;
            c.model = EdgeProbModel::from_json(require("model").dump());
            c.k = c.model->k;
            c.trials = require("trials").get<int>();
            c.n_grid = require("n_grid").get<std::vector<VertexId>>();
            if (c.n_grid.size() < 1) fail(errc::bad_config, "n_grid is empty");
            for (std::size_t i = 1; i < c.n_grid.size(); ++i)
                if (c.n_grid[i] <= c.n_grid[i - 1])
                    fail(errc::bad_config, "n_grid must be strictly increasing");
        } else if (kind == "chernoff") {
            c.kind = Kind::chernoff;
            c.bern_count = require("L").get<long long>();
            c.bern_p = require("p").get<double>();
            c.epsilon = require("eps").get<double>();
            if (j.contains("mc_trials")) c.mc_trials = j.at("mc_trials").get<int>();
            c.trials = 1;
        } else {
            fail(errc::bad_config, "unknown experiment kind \"" + kind + "\"");
        }
    } catch (const nlohmann::json::exception& e) {
        fail(errc::bad_config, e.what());
    }
    if (c.trials < 1) fail(errc::bad_config, "trials must be >= 1");
    opt_common();
    return c;
}

std::vector<WeightRunRecord> run_weight_experiment(const ExperimentConfig& config) {
    if (config.kind != ExperimentConfig::Kind::weight)
        fail(errc::bad_config, "not a weight config");
    const WeightModel& model = *config.weight_model;

    std::vector<WeightRunRecord> records;
    for (std::size_t i = 0; i < config.graphs.size(); ++i) {
        const GraphSource& src = config.graphs[i];
        WeightRunRecord rec;
        rec.graph_id = src.id;
        rec.k = config.k;
        rec.model_label = model.label();
        rec.trials = config.trials;
        rec.seed = rng::stream(config.seed, i, kGraphGenSalt);
        double t0 = now_ms();
        try {
            Graph g = src.file.empty() ? sample_graph(*src.generator, src.n, rec.seed)
                                       : load_graph_file(src.file);
            rec.n = g.vertex_count();
            rec.m = g.edge_count();
            if (rec.m > config.budget)
                fail(errc::budget_exceeded,
                     "conflict graph has " + std::to_string(rec.m) + " vertices > budget " +
                         std::to_string(config.budget));
            rec.stats = mc_weight_stats(g, model, config.k, config.trials, rec.seed, config.solve);
            if (!std::isnan(rec.stats.gamma)) {
                double f1 = model.cdf_lower(rec.stats.gamma);
                double rate = rec.stats.deviation_rate;
                double se = std::sqrt(std::max(rate * (1.0 - rate), 0.0) /
                                      static_cast<double>(config.trials));
                rec.dev_rhs = 1.0 - 2.0 * std::exp(-rec.m * f1 / 16.0) - 3.0 * se;
                rec.verdict_dev = rate >= rec.dev_rhs ? 1 : 0;
            } else {
                rec.dev_rhs = std::numeric_limits<double>::quiet_NaN();
                rec.verdict_dev = -1;
            }
            rec.ok = true;
        } catch (const error& e) {
            rec.ok = false;
            rec.error = e.what();
        }
        rec.wall_ms = now_ms() - t0;
        records.push_back(std::move(rec));
    }
    return records;
}

ScalingResult run_scaling_experiment(const ExperimentConfig& config) {
    if (config.kind != ExperimentConfig::Kind::scaling)
        fail(errc::bad_config, "not a scaling config");
    const EdgeProbModel& model = *config.model;
    const int k = model.k;

    ScalingResult out;
    for (VertexId n : config.n_grid) {
        ModelDiagnostics diag = validate_model(model, n);
        if (!diag.feasible) {
            std::string why;
            for (const auto& r : diag.reasons) why += (why.empty() ? "" : "; ") + r;
            fail(errc::infeasible_model, "at n = " + std::to_string(n) + ": " + why);
        }
        out.summary.theta_low = diag.theta_low;
        out.summary.theta_up = diag.theta_up;
        out.summary.k1 = diag.k1;
    }
    const int k1 = out.summary.k1;

    std::vector<std::pair<double, double>> med_lower, med_upper;
    for (VertexId n : config.n_grid) {
        std::vector<double> stat_c, stat_d;
        for (int t = 0; t < config.trials; ++t) {
            ScalingSampleRecord rec;
            rec.n = n;
            rec.trial = t;
            rec.seed = rng::stream(config.seed, static_cast<std::uint64_t>(n),
                                   static_cast<std::uint64_t>(t), kScalingSalt);
            double t0 = now_ms();
            Graph g = sample_graph(model, n, rec.seed);
            rec.m = g.edge_count();
            rec.isolated_edge = g.has_isolated_edge();

            if (rec.m > 0) rec.greedy_size = greedy_k_strong(g, k).size;
            if (rec.m > 0 && rec.m <= config.budget) {
                rec.exact_size = max_k_strong_exact(g, k, config.solve).size;
                ++out.summary.exact_solved;
            }

            auto counts = kernels::neighborhood_counts(g, k + 1);
            long long lower_sum = 0;
            for (VertexId u = 0; u < n; ++u)
                lower_sum += static_cast<long long>(g.degree(u)) *
                             (counts[static_cast<std::size_t>(u)] - 1);
            rec.degree_sum_lower = lower_sum;
            rec.degree_sum_stat = degree_sum_statistic(g, k);
            rec.min_ball_k1 = min_neighborhood(g, k1);

            if (lower_sum > 0) {
                rec.stat_avg_lower =
                    static_cast<double>(rec.m) * rec.m / (4.0 * static_cast<double>(lower_sum));
                stat_c.push_back(*rec.stat_avg_lower);
            }
            if (rec.min_ball_k1 >= 1) {
                rec.stat_upper = static_cast<double>(n) / rec.min_ball_k1;
                stat_d.push_back(*rec.stat_upper);
            }

            // Sandwich against the exact solver; each side only when its
            // hypotheses hold on this sample.
            if (rec.exact_size) {
                bool counted = false;
                if (!rec.isolated_edge && lower_sum > 0) {
                    Rational lower(static_cast<long long>(rec.m) * rec.m, 4 * lower_sum);
                    rec.lower_check = rational_ceil(lower) <= *rec.exact_size ? 1 : 0;
                    counted = true;
                }
                if (k >= 3 && rec.min_ball_k1 >= 1) {
                    rec.upper_check =
                        static_cast<long long>(*rec.exact_size) * rec.min_ball_k1 <= n ? 1 : 0;
                    counted = true;
                }
                if (counted) {
                    ++out.summary.sandwich_checked;
                    if (rec.lower_check == 0 || rec.upper_check == 0)
                        ++out.summary.sandwich_violations;
                }
            }
            rec.wall_ms = now_ms() - t0;
            out.samples.push_back(std::move(rec));
        }
        if (auto med = finite_median(stat_c))
            med_lower.emplace_back(static_cast<double>(n), *med);
        if (auto med = finite_median(stat_d))
            med_upper.emplace_back(static_cast<double>(n), *med);
    }

    try {
        out.summary.fit_avg_lower = fit_power_law(med_lower);
    } catch (const error& e) {
        out.summary.fit_avg_lower_note = e.what();
    }
    if (med_upper.size() < config.n_grid.size())
        out.summary.fit_upper_note =
            "upper statistic undefined on some sizes (vertices with empty radius-k1 balls)";
    if (out.summary.fit_upper_note.empty()) {
        try {
            out.summary.fit_upper = fit_power_law(med_upper);
        } catch (const error& e) {
            out.summary.fit_upper_note = e.what();
        }
    }
    return out;
}

std::string ScalingSummary::to_json() const {
    nlohmann::json j{{"theta_low", theta_low},
                     {"theta_up", theta_up},
                     {"k1", k1},
                     {"exact_solved", exact_solved},
                     {"sandwich_checked", sandwich_checked},
                     {"sandwich_violations", sandwich_violations}};
    if (fit_avg_lower) {
        j["slope_avg_lower"] = fit_avg_lower->slope;
        j["r2_avg_lower"] = fit_avg_lower->r_squared;
    } else {
        j["slope_avg_lower"] = nullptr;
        j["fit_avg_lower_note"] = fit_avg_lower_note;
    }
    if (fit_upper) {
        j["slope_upper"] = fit_upper->slope;
        j["r2_upper"] = fit_upper->r_squared;
    } else {
        j["slope_upper"] = nullptr;
        j["fit_upper_note"] = fit_upper_note;
    }
    return j.dump();
}

ChernoffRecord run_chernoff_check(long long count, double p, double eps, int mc_trials,
                                  std::uint64_t seed) {
    if (!(eps > 0 && eps <= 0.5)) fail(errc::epsilon_out_of_range, "need 0 < eps <= 1/2");
    if (count < 1) fail(errc::invalid_argument, "need L >= 1");
    if (!(p > 0 && p <= 1)) fail(errc::invalid_argument, "need 0 < p <= 1");
    if (mc_trials < 1) fail(errc::invalid_argument, "need mc_trials >= 1");

    ChernoffRecord rec;
    rec.count = count;
    rec.p = p;
    rec.eps = eps;
    rec.theta = static_cast<double>(count) * p;
    rec.mc_trials = mc_trials;
    double t0 = now_ms();

    // Exact tail by pmf summation in log space; the bound is a certainty
    // claim, so Monte Carlo alone would not do.
    const double logp = std::log(p);
    const double log1mp = p < 1 ? std::log1p(-p) : 0.0;
    double tail = 0.0;
    for (long long t = 0; t <= count; ++t) {
        if (std::abs(static_cast<double>(t) - rec.theta) < rec.theta * eps) continue;
        if (p == 1.0) {
            tail += (t == count) ? 1.0 : 0.0;
            continue;
        }
        double logpmf = std::lgamma(count + 1.0) - std::lgamma(t + 1.0) -
                        std::lgamma(count - t + 1.0) + t * logp + (count - t) * log1mp;
        tail += std::exp(logpmf);
    }
    rec.exact_tail = std::min(tail, 1.0);
    rec.bound = 2.0 * std::exp(-eps * eps * rec.theta / 4.0);
    rec.verdict = rec.exact_tail <= rec.bound;

    long long hits = 0;
    for (int t = 0; t < mc_trials; ++t) {
        long long total = 0;
        for (long long i = 0; i < count; ++i)
            if (rng::uniform(seed, static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(i),
                             kBinomialSalt) < p)
                ++total;
        if (std::abs(static_cast<double>(total) - rec.theta) >= rec.theta * eps) ++hits;
    }
    rec.mc_rate = static_cast<double>(hits) / mc_trials;
    rec.wall_ms = now_ms() - t0;
    return rec;
}

ChernoffRecord run_chernoff_check(const ExperimentConfig& config) {
    if (config.kind != ExperimentConfig::Kind::chernoff)
        fail(errc::bad_config, "not a chernoff config");
    return run_chernoff_check(config.bern_count, config.bern_p, config.epsilon, config.mc_trials,
                              config.seed);
}

std::string weight_csv_header() {
    return "graph_id,k,model,trials,seed,mean,var,stderr,gamma,deviation_rate,fitted_C,"
           "verdict_mean,verdict_var,nu_k,mu,mu2,n,m,dev_rhs,verdict_dev,gamma2_hat,error";
}

std::string weight_csv_row(const WeightRunRecord& r) {
    std::ostringstream out;
    out << csv_escape(r.graph_id) << ',' << r.k << ',' << csv_escape(r.model_label) << ','
        << r.trials << ',' << r.seed << ',';
    if (r.ok) {
        out << format_double(r.stats.mean) << ',' << format_double(r.stats.var) << ','
            << format_double(r.stats.stderr_mean) << ',' << format_double(r.stats.gamma) << ','
            << format_double(r.stats.deviation_rate) << ',' << format_double(r.stats.fitted_c)
            << ',' << (r.stats.verdict_mean ? 1 : 0) << ',' << (r.stats.verdict_var ? 1 : 0) << ','
            << r.stats.nu_k << ',' << format_double(r.stats.mu) << ','
            << format_double(r.stats.mu2) << ',' << r.n << ',' << r.m << ','
            << format_double(r.dev_rhs) << ',' << check_str(r.verdict_dev) << ','
            << format_double(r.stats.gamma2_hat) << ',';
    } else {
        out << ",,,,,,,,,,," << r.n << ',' << r.m << ",,na,," << csv_escape(r.error);
    }
    return out.str();
}

std::string scaling_csv_header() {
    return "n,trial,seed,m,greedy_size,exact_size,stat_avg_lower,stat_upper,degree_sum_lower,"
           "degree_sum_stat,min_ball_k1,isolated_edge,lower_check,upper_check";
}

std::string scaling_csv_row(const ScalingSampleRecord& r) {
    std::ostringstream out;
    out << r.n << ',' << r.trial << ',' << r.seed << ',' << r.m << ',' << r.greedy_size << ',';
    if (r.exact_size) out << *r.exact_size;
    out << ',';
    if (r.stat_avg_lower) out << format_double(*r.stat_avg_lower);
    out << ',';
    if (r.stat_upper) out << format_double(*r.stat_upper);
    out << ',' << r.degree_sum_lower << ',' << r.degree_sum_stat << ',' << r.min_ball_k1 << ','
        << (r.isolated_edge ? 1 : 0) << ',' << check_str(r.lower_check) << ','
        << check_str(r.upper_check);
    return out.str();
}

std::string chernoff_csv_header() {
    return "L,p,eps,theta,exact_tail,bound,mc_rate,mc_trials,verdict";
}

std::string chernoff_csv_row(const ChernoffRecord& r) {
    std::ostringstream out;
    out << r.count << ',' << format_double(r.p) << ',' << format_double(r.eps) << ','
        << format_double(r.theta) << ',' << format_double(r.exact_tail) << ','
        << format_double(r.bound) << ',' << format_double(r.mc_rate) << ',' << r.mc_trials << ','
        << (r.verdict ? 1 : 0);
    return out.str();
}

namespace {

nlohmann::json weight_record_json(const WeightRunRecord& r) {
    nlohmann::json j{{"graph_id", r.graph_id}, {"k", r.k},       {"model", r.model_label},
                     {"trials", r.trials},     {"seed", r.seed}, {"n", r.n},
                     {"m", r.m},               {"ok", r.ok},     {"wall_ms", r.wall_ms}};
    if (r.ok) {
        j["stats"] = nlohmann::json::parse(r.stats.to_json());
        j["dev_rhs"] = std::isnan(r.dev_rhs) ? nlohmann::json() : nlohmann::json(r.dev_rhs);
        j["verdict_dev"] = check_str(r.verdict_dev);
    } else {
        j["error"] = r.error;
    }
    return j;
}

} // namespace

std::string weight_jsonl_row(const WeightRunRecord& r) { return weight_record_json(r).dump(); }

std::string scaling_jsonl_row(const ScalingSampleRecord& r) {
    nlohmann::json j{{"n", r.n},
                     {"trial", r.trial},
                     {"seed", r.seed},
                     {"m", r.m},
                     {"greedy_size", r.greedy_size},
                     {"degree_sum_lower", r.degree_sum_lower},
                     {"degree_sum_stat", r.degree_sum_stat},
                     {"min_ball_k1", r.min_ball_k1},
                     {"isolated_edge", r.isolated_edge},
                     {"lower_check", check_str(r.lower_check)},
                     {"upper_check", check_str(r.upper_check)},
                     {"wall_ms", r.wall_ms}};
    j["exact_size"] = r.exact_size ? nlohmann::json(*r.exact_size) : nlohmann::json();
    j["stat_avg_lower"] =
        r.stat_avg_lower ? nlohmann::json(*r.stat_avg_lower) : nlohmann::json();
    j["stat_upper"] = r.stat_upper ? nlohmann::json(*r.stat_upper) : nlohmann::json();
    return j.dump();
}

std::string chernoff_jsonl_row(const ChernoffRecord& r) {
    nlohmann::json j{{"L", r.count},           {"p", r.p},
                     {"eps", r.eps},           {"theta", r.theta},
                     {"exact_tail", r.exact_tail}, {"bound", r.bound},
                     {"mc_rate", r.mc_rate},   {"mc_trials", r.mc_trials},
                     {"verdict", r.verdict},   {"wall_ms", r.wall_ms}};
    return j.dump();
}

} // namespace strongmatch
