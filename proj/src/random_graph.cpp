#include "strongmatch/random_graph.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "strongmatch/kernels.hpp"
#include "strongmatch/matching.hpp"

namespace strongmatch {

VertexId HSpec::subset_size(VertexId n) const {
    auto s = static_cast<VertexId>(std::llround(subset_fraction * n));
    return std::clamp(s, VertexId{0}, n);
}

double HSpec::value(VertexId u, VertexId v, VertexId n) const {
    switch (kind) {
        case Kind::constant: return h0;
        case Kind::power_of_n: return coeff * std::pow(static_cast<double>(n), delta);
        case Kind::two_class: {
            VertexId s = subset_size(n);
            bool touches_subset = u < s || v < s;
            return touches_subset ? a_coeff * std::pow(static_cast<double>(n), a_delta)
                                  : b_coeff * std::pow(static_cast<double>(n), b_delta);
        }
    }
    return 0.0;
}

namespace {

nlohmann::json hspec_to_json(const HSpec& h) {
    switch (h.kind) {
        case HSpec::Kind::constant: return {{"kind", "constant"}, {"h0", h.h0}};
        case HSpec::Kind::power_of_n:
            return {{"kind", "power_of_n"}, {"c", h.coeff}, {"delta", h.delta}};
        case HSpec::Kind::two_class:
            return {{"kind", "two_class"},       {"a_coeff", h.a_coeff},
                    {"a_delta", h.a_delta},      {"b_coeff", h.b_coeff},
                    {"b_delta", h.b_delta},      {"subset_fraction", h.subset_fraction}};
    }
    return {};
}

HSpec hspec_from_json(const nlohmann::json& j) {
    HSpec h;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") {
        h.kind = HSpec::Kind::constant;
        h.h0 = j.at("h0").get<double>();
    } else if (kind == "power_of_n") {
        h.kind = HSpec::Kind::power_of_n;
        h.coeff = j.at("c").get<double>();
        h.delta = j.at("delta").get<double>();
    } else if (kind == "two_class") {
        h.kind = HSpec::Kind::two_class;
        h.a_coeff = j.at("a_coeff").get<double>();
        h.a_delta = j.at("a_delta").get<double>();
        h.b_coeff = j.at("b_coeff").get<double>();
        h.b_delta = j.at("b_delta").get<double>();
        h.subset_fraction = j.at("subset_fraction").get<double>();
    } else {
        fail(errc::bad_format, "unknown h_spec kind \"" + kind + "\"");
    }
    return h;
}

// Distinct h values with multiplicities at size n; lets range and average
// checks run in closed form instead of touching all C(n,2) pairs.
struct HProfile {
    std::vector<std::pair<double, double>> value_count;
    double pair_count = 0.0;
};

HProfile h_profile(const HSpec& h, VertexId n) {
    HProfile prof;
    double total = 0.5 * static_cast<double>(n) * (n - 1);
    prof.pair_count = total;
    switch (h.kind) {
        case HSpec::Kind::constant: prof.value_count.emplace_back(h.h0, total); break;
        case HSpec::Kind::power_of_n:
            prof.value_count.emplace_back(h.value(0, 1, n), total);
            break;
        case HSpec::Kind::two_class: {
            double s = h.subset_size(n);
            double touching = 0.5 * s * (s - 1) + s * (n - s);
            double rest = total - touching;
            double va = h.a_coeff * std::pow(static_cast<double>(n), h.a_delta);
            double vb = h.b_coeff * std::pow(static_cast<double>(n), h.b_delta);
            if (touching > 0) prof.value_count.emplace_back(va, touching);
            if (rest > 0) prof.value_count.emplace_back(vb, rest);
            break;
        }
    }
    return prof;
}

} // namespace

std::string EdgeProbModel::to_json() const {
    nlohmann::json j{{"beta", beta},
                     {"k", k},
                     {"h_spec", hspec_to_json(h)},
                     {"gamma0", gamma0},
                     {"gamma1", gamma1},
                     {"gamma2", gamma2},
                     {"delta_low", delta_low},
                     {"delta_av", delta_av},
                     {"delta_up", delta_up}};
    return j.dump();
}

EdgeProbModel EdgeProbModel::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::bad_format, e.what());
    }
    EdgeProbModel m;
    try {
        m.beta = j.at("beta").get<double>();
        m.k = j.at("k").get<int>();
        m.h = hspec_from_json(j.at("h_spec"));
        m.gamma0 = j.at("gamma0").get<double>();
        m.gamma1 = j.at("gamma1").get<double>();
        m.gamma2 = j.at("gamma2").get<double>();
        m.delta_low = j.at("delta_low").get<double>();
        m.delta_av = j.at("delta_av").get<double>();
        m.delta_up = j.at("delta_up").get<double>();
    } catch (const nlohmann::json::exception& e) {
        fail(errc::bad_format, e.what());
    }
    return m;
}

std::string ModelDiagnostics::to_json() const {
    nlohmann::json j{{"theta_low", theta_low},
                     {"theta_up", theta_up},
                     {"k1", k1},
                     {"p_low", p_low},
                     {"p_up", p_up},
                     {"h_min", h_min},
                     {"h_max", h_max},
                     {"h_power_average", h_power_average},
                     {"h_range_ok", h_range_ok},
                     {"h_average_ok", h_average_ok},
                     {"theta_low_ok", theta_low_ok},
                     {"k1_condition_ok", k1_condition_ok},
                     {"feasible", feasible},
                     {"reasons", reasons}};
    return j.dump();
}

ModelDiagnostics validate_model(const EdgeProbModel& model, VertexId n) {
    if (n < 2) fail(errc::invalid_argument, "need n >= 2");
    if (model.k < 3) fail(errc::k_too_small, "model requires k >= 3");
    if (!(model.beta > 0 && model.beta < 1) || !(model.gamma0 > 0) || !(model.gamma1 > 0) ||
        !(model.gamma2 > 0))
        fail(errc::invalid_parameter_order, "need 0 < beta < 1 and positive gammas");
    if (!(0 <= model.delta_low && model.delta_low <= model.delta_av &&
          model.delta_av <= model.delta_up && model.delta_up < model.beta))
        fail(errc::invalid_parameter_order,
             "need 0 <= delta_low <= delta_av <= delta_up < beta");

    ModelDiagnostics d;
    d.k1 = upper_bound_radius(model.k);
    d.theta_low = 1.0 - model.k * (1.0 - model.beta + model.delta_av) -
                  2.0 * (model.delta_av - model.delta_low);
    d.theta_up = 1.0 - d.k1 * (1.0 - model.beta + model.delta_low);
    d.p_low = model.gamma1 / std::pow(static_cast<double>(n), model.beta - model.delta_low);
    d.p_up = model.gamma2 / std::pow(static_cast<double>(n), model.beta - model.delta_up);

    HProfile prof = h_profile(model.h, n);
    d.h_min = prof.value_count.front().first;
    d.h_max = d.h_min;
    double power_sum = 0.0;
    for (const auto& [value, count] : prof.value_count) {
        d.h_min = std::min(d.h_min, value);
        d.h_max = std::max(d.h_max, value);
        power_sum += count * std::pow(value, model.k + 2);
    }
    d.h_power_average = power_sum / prof.pair_count;

    double nbeta = std::pow(static_cast<double>(n), model.beta);
    if (d.h_max / nbeta > 1.0)
        fail(errc::probability_overflow,
             "p(e) = " + std::to_string(d.h_max / nbeta) + " exceeds 1 at n = " + std::to_string(n));

    double range_lo = model.gamma1 * std::pow(static_cast<double>(n), model.delta_low);
    double range_hi = model.gamma2 * std::pow(static_cast<double>(n), model.delta_up);
    d.h_range_ok = range_lo <= d.h_min && d.h_max <= range_hi;
    if (!d.h_range_ok)
        d.reasons.push_back("h range violates gamma1 n^delta_low <= h <= gamma2 n^delta_up");

    double avg_cap =
        model.gamma0 * std::pow(static_cast<double>(n), (model.k + 2) * model.delta_av);
    d.h_average_ok = d.h_power_average <= avg_cap;
    if (!d.h_average_ok) d.reasons.push_back("power average of h exceeds gamma0 n^((k+2) delta_av)");

    d.theta_low_ok = d.theta_low > 0;
    if (!d.theta_low_ok) d.reasons.push_back("theta_low <= 0");

    d.k1_condition_ok = d.k1 * (1.0 - model.beta + model.delta_up) < 1.0;
    if (!d.k1_condition_ok) d.reasons.push_back("k1 (1 - beta + delta_up) >= 1");

    d.feasible = d.h_range_ok && d.h_average_ok && d.theta_low_ok && d.k1_condition_ok;
    return d;
}

Graph sample_graph(const EdgeProbModel& model, VertexId n, std::uint64_t seed) {
    if (n < 1) fail(errc::invalid_argument, "need n >= 1");
    double nbeta = std::pow(static_cast<double>(n), model.beta);
    HProfile prof = h_profile(model.h, n);
    for (const auto& [value, count] : prof.value_count)
        if (value / nbeta > 1.0)
            fail(errc::probability_overflow,
                 "p(e) = " + std::to_string(value / nbeta) + " exceeds 1");

    // Per-kind fast paths keep the per-pair work to one hash and a compare.
    std::vector<std::pair<VertexId, VertexId>> pairs;
    switch (model.h.kind) {
        case HSpec::Kind::constant:
        case HSpec::Kind::power_of_n: {
            double p = model.h.value(0, 1, n) / nbeta;
            pairs = kernels::bernoulli_pairs(n, seed, [p](VertexId, VertexId) { return p; });
            break;
        }
        case HSpec::Kind::two_class: {
            VertexId s = model.h.subset_size(n);
            double pa = model.h.a_coeff * std::pow(static_cast<double>(n), model.h.a_delta) / nbeta;
            double pb = model.h.b_coeff * std::pow(static_cast<double>(n), model.h.b_delta) / nbeta;
            pairs = kernels::bernoulli_pairs(
                n, seed, [s, pa, pb](VertexId u, VertexId v) { return (u < s || v < s) ? pa : pb; });
            break;
        }
    }
    return Graph::build(n, pairs);
}

ExplorationRecord exploration_layers(const Graph& g, VertexId source, int depth) {
    g.check_vertex(source);
    if (depth < 0) fail(errc::invalid_argument, "depth must be >= 0");

    ExplorationRecord rec;
    rec.source = source;
    rec.layer_sizes.assign(static_cast<std::size_t>(depth) + 1, 0);
    rec.layer_sizes[0] = 1;

    std::vector<std::int32_t> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    std::vector<VertexId> frontier{source}, next;
    for (int level = 1; level <= depth && !frontier.empty(); ++level) {
        next.clear();
        for (VertexId x : frontier) {
            for (const auto& [y, eid] : g.neighbors(x)) {
                auto& d = dist[static_cast<std::size_t>(y)];
                if (d < 0) {
                    d = level;
                    next.push_back(y);
                }
            }
        }
        rec.layer_sizes[static_cast<std::size_t>(level)] = static_cast<int>(next.size());
        frontier.swap(next);
    }

    rec.cumulative.resize(rec.layer_sizes.size());
    int running = 0;
    for (std::size_t i = 0; i < rec.layer_sizes.size(); ++i) {
        running += rec.layer_sizes[i];
        rec.cumulative[i] = running;
    }
    return rec;
}

long long degree_sum_statistic(const Graph& g, int k) {
    return kernels::degree_sum_statistic(g, k);
}

int min_neighborhood(const Graph& g, int radius) {
    return kernels::min_neighborhood(g, radius);
}

} // namespace strongmatch
