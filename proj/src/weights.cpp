#include "strongmatch/weights.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "detail/power.hpp"
#include "strongmatch/rng.hpp"

namespace strongmatch {

namespace {

constexpr std::uint64_t kWeightSalt = 0x77656967687473ULL; // distinct from pair sampling

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

} // namespace

WeightModel WeightModel::exponential(double rate) {
    if (!(rate > 0)) fail(errc::invalid_model, "exponential rate must be positive");
    WeightModel m;
    m.kind_ = Kind::exponential;
    m.param_ = rate;
    return m;
}

WeightModel WeightModel::uniform(double upper) {
    if (!(upper > 0)) fail(errc::invalid_model, "uniform upper bound must be positive");
    WeightModel m;
    m.kind_ = Kind::uniform;
    m.param_ = upper;
    return m;
}

WeightModel WeightModel::constant(double value) {
    if (!(value >= 0)) fail(errc::invalid_model, "constant weight must be nonnegative");
    WeightModel m;
    m.kind_ = Kind::constant;
    m.param_ = value;
    return m;
}

WeightModel WeightModel::bernoulli(double p) {
    if (!(p >= 0 && p <= 1)) fail(errc::invalid_model, "bernoulli p must lie in [0, 1]");
    WeightModel m;
    m.kind_ = Kind::bernoulli;
    m.param_ = p;
    m.p_min_ = m.p_max_ = p;
    return m;
}

WeightModel WeightModel::bernoulli_per_edge(std::vector<double> p) {
    if (p.empty()) fail(errc::invalid_model, "per-edge probability list is empty");
    for (double x : p)
        if (!(x >= 0 && x <= 1)) fail(errc::invalid_model, "bernoulli p must lie in [0, 1]");
    WeightModel m;
    m.kind_ = Kind::bernoulli;
    m.p_min_ = *std::min_element(p.begin(), p.end());
    m.p_max_ = *std::max_element(p.begin(), p.end());
    m.param_ = m.p_max_;
    m.per_edge_p_ = std::move(p);
    return m;
}

double WeightModel::mu() const {
    switch (kind_) {
        case Kind::exponential: return 1.0 / param_;
        case Kind::uniform: return param_ / 2.0;
        case Kind::constant: return param_;
        case Kind::bernoulli: return p_max_;
    }
    return 0.0;
}

double WeightModel::mu2() const {
    switch (kind_) {
        case Kind::exponential: return 2.0 / (param_ * param_);
        case Kind::uniform: return param_ * param_ / 3.0;
        case Kind::constant: return param_ * param_;
        case Kind::bernoulli: return p_max_; // indicator squared is the indicator
    }
    return 0.0;
}

double WeightModel::cdf_lower(double x) const {
    if (x < 0) return 0.0;
    switch (kind_) {
        case Kind::exponential: return -std::expm1(-param_ * x);
        case Kind::uniform: return std::min(x / param_, 1.0);
        case Kind::constant: return x >= param_ ? 1.0 : 0.0;
        case Kind::bernoulli: return x >= 1.0 ? 1.0 : 1.0 - p_max_;
    }
    return 0.0;
}

double WeightModel::cdf_upper(double x) const {
    if (x < 0) return 0.0;
    switch (kind_) {
        case Kind::exponential:
        case Kind::uniform:
        case Kind::constant: return cdf_lower(x);
        case Kind::bernoulli: return x >= 1.0 ? 1.0 : 1.0 - p_min_;
    }
    return 0.0;
}

double WeightModel::sample(std::uint64_t seed, std::uint64_t trial, EdgeId e) const {
    double u = rng::uniform(seed, trial, static_cast<std::uint64_t>(e), kWeightSalt);
    switch (kind_) {
        case Kind::exponential: return -std::log1p(-u) / param_;
        case Kind::uniform: return u * param_;
        case Kind::constant: return param_;
        case Kind::bernoulli: {
            double p = per_edge_p_.empty() ? param_ : per_edge_p_[static_cast<std::size_t>(e)];
            return u < p ? 1.0 : 0.0;
        }
    }
    return 0.0;
}

void WeightModel::validate_for(const Graph& g) const {
    if (!per_edge_p_.empty() &&
        per_edge_p_.size() != static_cast<std::size_t>(g.edge_count()))
        fail(errc::invalid_model, "per-edge probability list does not match edge count");
}

std::string WeightModel::label() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::exponential: out << "exponential(" << param_ << ")"; break;
        case Kind::uniform: out << "uniform(0," << param_ << ")"; break;
        case Kind::constant: out << "constant(" << param_ << ")"; break;
        case Kind::bernoulli:
            if (per_edge_p_.empty())
                out << "bernoulli(" << param_ << ")";
            else
                out << "bernoulli(per-edge)";
            break;
    }
    return out.str();
}

std::string WeightModel::to_json() const {
    nlohmann::json j;
    switch (kind_) {
        case Kind::exponential: j = {{"kind", "exponential"}, {"rate", param_}}; break;
        case Kind::uniform: j = {{"kind", "uniform"}, {"b", param_}}; break;
        case Kind::constant: j = {{"kind", "constant"}, {"c", param_}}; break;
        case Kind::bernoulli:
            if (per_edge_p_.empty())
                j = {{"kind", "bernoulli"}, {"p", param_}};
            else
                j = {{"kind", "bernoulli"}, {"p_per_edge", per_edge_p_}};
            break;
    }
    return j.dump();
}

WeightModel WeightModel::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::bad_format, e.what());
    }
    if (!j.is_object() || !j.contains("kind")) fail(errc::bad_format, "weight model needs \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "exponential") return exponential(j.at("rate").get<double>());
        if (kind == "uniform") return uniform(j.at("b").get<double>());
        if (kind == "constant") return constant(j.at("c").get<double>());
        if (kind == "bernoulli") {
            if (j.contains("p_per_edge"))
                return bernoulli_per_edge(j.at("p_per_edge").get<std::vector<double>>());
            return bernoulli(j.at("p").get<double>());
        }
    } catch (const nlohmann::json::exception& e) {
        fail(errc::bad_format, e.what());
    }
    fail(errc::bad_format, "unknown weight model kind \"" + kind + "\"");
}

WeightAssignment sample_weights(const Graph& g, const WeightModel& model, std::uint64_t seed) {
    model.validate_for(g);
    WeightAssignment out;
    out.seed = seed;
    out.weights.resize(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out.weights[static_cast<std::size_t>(e)] = model.sample(seed, 0, e);
    return out;
}

std::pair<double, double> mu_moments(const WeightModel& model) {
    return {model.mu(), model.mu2()};
}

long long bad_edge_count(const WeightAssignment& w, double gamma) {
    if (!(gamma >= 0)) fail(errc::invalid_argument, "gamma must be >= 0");
    long long count = 0;
    for (double x : w.weights)
        if (x <= gamma) ++count;
    return count;
}

double select_gamma(const WeightModel& model, int max_degree, int k) {
    if (max_degree < 1) fail(errc::invalid_argument, "max degree must be >= 1");
    if (k < 0) fail(errc::invalid_argument, "k must be >= 0");
    double threshold = 1.0 / (24.0 * std::pow(static_cast<double>(max_degree), k + 1));
    for (int i = 0; i <= 60; ++i) {
        double gamma = std::ldexp(1.0, -i);
        if (model.cdf_upper(gamma) <= threshold) return gamma;
    }
    fail(errc::no_feasible_gamma, "cdf envelope stays above " + std::to_string(threshold));
}

WeightedSolveResult min_weight_max_k_strong(const Graph& g, const WeightAssignment& w, int k,
                                            const SolveOptions& opts) {
    if (k < 0) fail(errc::invalid_argument, "k must be >= 0");
    if (w.weights.size() != static_cast<std::size_t>(g.edge_count()))
        fail(errc::invalid_argument, "weight assignment does not match edge count");
    for (double x : w.weights)
        if (!(x >= 0)) fail(errc::invalid_argument, "weights must be nonnegative");

    detail::BitGraph bg = detail::build_power_bitgraph(g, k);
    detail::MisResult mis = detail::max_independent_set(bg, w.weights.data(), opts.max_nodes);
    WeightedSolveResult out;
    out.size = mis.size;
    out.value = mis.weight;
    out.witness.k = k;
    out.witness.edge_ids.assign(mis.members.begin(), mis.members.end());
    return out;
}

double pairwise_sum(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    if (xs.size() == 1) return xs[0];
    std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

std::string WeightStats::to_json() const {
    nlohmann::json j{{"trials", trials},
                     {"nu_k", nu_k},
                     {"mu", mu},
                     {"mu2", mu2},
                     {"mean", mean},
                     {"var", var},
                     {"stderr", stderr_mean},
                     {"fitted_c", fitted_c},
                     {"var_slack", var_slack},
                     {"verdict_mean", verdict_mean},
                     {"verdict_var", verdict_var}};
    auto set_or_null = [&](const char* key, double v) {
        if (std::isnan(v))
            j[key] = nullptr;
        else
            j[key] = v;
    };
    set_or_null("gamma", gamma);
    set_or_null("deviation_rate", deviation_rate);
    set_or_null("gamma2_hat", gamma2_hat);
    return j.dump();
}

WeightStats mc_weight_stats(const Graph& g, const WeightModel& model, int k, int trials,
                            std::uint64_t seed, const SolveOptions& opts) {
    if (trials < 30) fail(errc::too_few_trials, "need at least 30 trials");
    model.validate_for(g);

    const EdgeId m = g.edge_count();
    detail::BitGraph bg = detail::build_power_bitgraph(g, k); // errc::empty_graph on m = 0
    detail::MisResult base = detail::max_independent_set(bg, nullptr, opts.max_nodes);
    const int nu_k = base.size;

    WeightStats stats;
    stats.trials = trials;
    stats.nu_k = nu_k;
    stats.mu = model.mu();
    stats.mu2 = model.mu2();
    stats.gamma = kNaN;
    try {
        stats.gamma = select_gamma(model, g.max_degree(), k);
    } catch (const error& e) {
        if (e.code() != errc::no_feasible_gamma) throw;
    }

    std::vector<double> values(static_cast<std::size_t>(trials));
    std::atomic<bool> exhausted{false};
#pragma omp parallel for schedule(dynamic, 8)
    for (int t = 0; t < trials; ++t) {
        if (exhausted.load(std::memory_order_relaxed)) continue;
        std::vector<double> w(static_cast<std::size_t>(m));
        for (EdgeId e = 0; e < m; ++e)
            w[static_cast<std::size_t>(e)] =
                model.sample(seed, static_cast<std::uint64_t>(t), e);
        try {
            detail::MisResult mis = detail::max_independent_set(bg, w.data(), opts.max_nodes);
            values[static_cast<std::size_t>(t)] = mis.weight;
        } catch (const error&) {
            exhausted.store(true, std::memory_order_relaxed);
        }
    }
    if (exhausted.load()) fail(errc::budget_exceeded, "search node budget exhausted in a trial");

    const double n = static_cast<double>(trials);
    stats.mean = pairwise_sum(values) / n;
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        double d = values[i] - stats.mean;
        sq[i] = d * d;
    }
    const double ss = pairwise_sum(sq);
    stats.var = ss / (n - 1.0);
    stats.stderr_mean = std::sqrt(stats.var / n);
    stats.fitted_c = nu_k > 0 ? stats.mean / nu_k : kNaN;

    if (!std::isnan(stats.gamma)) {
        double threshold = nu_k * stats.gamma / 2.0;
        long long hits = 0;
        for (double v : values)
            if (v >= threshold) ++hits;
        stats.deviation_rate = static_cast<double>(hits) / n;
        stats.gamma2_hat = stats.deviation_rate < 1.0
                               ? -std::log1p(-stats.deviation_rate) / static_cast<double>(m)
                               : std::numeric_limits<double>::infinity();
    } else {
        stats.deviation_rate = kNaN;
        stats.gamma2_hat = kNaN;
    }

    // Delete-one jackknife spread of the sample variance, from centered
    // sufficient statistics: leaving out x_i changes the squared-deviation
    // sum to ss - d_i^2 * n / (n - 1).
    std::vector<double> jack(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        double di2 = sq[i];
        double ss_i = std::max(ss - di2 * n / (n - 1.0), 0.0);
        jack[i] = ss_i / (n - 2.0);
    }
    const double jack_mean = pairwise_sum(jack) / n;
    std::vector<double> jack_sq(jack.size());
    for (std::size_t i = 0; i < jack.size(); ++i) {
        double d = jack[i] - jack_mean;
        jack_sq[i] = d * d;
    }
    const double var_of_var = (n - 1.0) / n * pairwise_sum(jack_sq);

    const double mean_bound = stats.mu * nu_k + 3.0 * stats.stderr_mean;
    stats.verdict_mean = stats.mean <= mean_bound;

    const double var_bound0 = 4.0 * stats.mu2 * nu_k;
    stats.var_slack = var_bound0 > 0 ? 3.0 * std::sqrt(var_of_var) / var_bound0 : 0.0;
    stats.verdict_var = stats.var <= var_bound0 * (1.0 + stats.var_slack);
    return stats;
}

} // namespace strongmatch
