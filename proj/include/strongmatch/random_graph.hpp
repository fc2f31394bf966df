#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "strongmatch/graph.hpp"

namespace strongmatch {

/// Edge "weight" h(e) driving the inclusion probability p(e) = h(e) / n^beta.
/// Three families:
///   constant    h(e) = h0
///   power_of_n  h(e) = coeff * n^delta
///   two_class   h(e) = a_coeff * n^a_delta on edges incident to the first
///               round(subset_fraction * n) vertices, b_coeff * n^b_delta
///               elsewhere
struct HSpec {
    enum class Kind { constant, power_of_n, two_class };
    Kind kind = Kind::constant;
    double h0 = 1.0;
    double coeff = 1.0, delta = 0.0;
    double a_coeff = 1.0, a_delta = 0.0;
    double b_coeff = 1.0, b_delta = 0.0;
    double subset_fraction = 0.0;

    VertexId subset_size(VertexId n) const;
    double value(VertexId u, VertexId v, VertexId n) const;
};

struct EdgeProbModel {
    double beta = 0.8;
    int k = 3;
    HSpec h;
    double gamma0 = 1.0, gamma1 = 1.0, gamma2 = 1.0;
    double delta_low = 0.0, delta_av = 0.0, delta_up = 0.0;

    std::string to_json() const;
    static EdgeProbModel from_json(const std::string& text);
};

struct ModelDiagnostics {
    double theta_low = 0.0; // 1 - k (1 - beta + delta_av) - 2 (delta_av - delta_low)
    double theta_up = 0.0;  // 1 - k1 (1 - beta + delta_low)
    int k1 = 0;
    double p_low = 0.0, p_up = 0.0;
    double h_min = 0.0, h_max = 0.0;
    double h_power_average = 0.0; // (C(n,2))^-1 sum_e h^(k+2)(e)
    bool h_range_ok = false;      // gamma1 n^delta_low <= h <= gamma2 n^delta_up
    bool h_average_ok = false;    // h_power_average <= gamma0 n^((k+2) delta_av)
    bool theta_low_ok = false;    // theta_low > 0
    bool k1_condition_ok = false; // k1 (1 - beta + delta_up) < 1
    bool feasible = false;
    std::vector<std::string> reasons;

    std::string to_json() const;
};

/// Checks the model at size n: parameter ordering, realized h range and
/// power average, the two strict exponent conditions, and p(e) <= 1
/// (errc::probability_overflow — probabilities are never clamped).
ModelDiagnostics validate_model(const EdgeProbModel& model, VertexId n);

/// Each potential edge included independently with probability
/// h(e) / n^beta, keyed by (seed, u, v); only the overflow check is
/// enforced, infeasible exponents still sample fine.
Graph sample_graph(const EdgeProbModel& model, VertexId n, std::uint64_t seed);

struct ExplorationRecord {
    VertexId source = 0;
    std::vector<int> layer_sizes; // |S_0|, ..., |S_depth|
    std::vector<int> cumulative;  // prefix sums
};

/// BFS layer sizes around source up to the given depth; layers past the
/// reachable radius are zero.
ExplorationRecord exploration_layers(const Graph& g, VertexId source, int depth);

/// sum_u d1(u) * d_{k+1}(u).
long long degree_sum_statistic(const Graph& g, int k);

/// min_u d_radius(u).
int min_neighborhood(const Graph& g, int radius);

} // namespace strongmatch
