#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "strongmatch/graph.hpp"

namespace strongmatch {

using Rational = boost::rational<long long>;

/// ceil(r) for any sign of r.
long long rational_ceil(const Rational& r);

/// A set of edges claimed to be a k-strong matching. `k` is metadata; use
/// is_k_strong to validate the claim.
struct Matching {
    int k = 0;
    std::vector<EdgeId> edge_ids; // ascending

    std::string to_json() const; // {"k":..,"edge_ids":[..],"size":..}
};

/// True iff no two of the edges share an endvertex.
bool is_matching(const Graph& g, std::span<const EdgeId> edge_ids);

/// True iff additionally no path of at most k edges in g connects an
/// endvertex of one matching edge to an endvertex of another. Paths may run
/// through matching edges themselves. k = 0 reduces to plain matching.
bool is_k_strong(const Graph& g, const Matching& m, int k);

struct SolveOptions {
    std::uint64_t max_nodes = 20'000'000; // search nodes before BudgetExceeded
};

struct SolveResult {
    int size = 0;
    Matching witness;
};

struct WeightedSolveResult {
    int size = 0;
    double value = 0.0;
    Matching witness;
};

/// Exact strong matching number with a reproducible witness: maximum
/// independent set search on the (k+1)-th power of the line graph, branching
/// on the smallest edge id first. Ties resolve to the lexicographically
/// smallest edge-id sequence.
SolveResult max_k_strong_exact(const Graph& g, int k, const SolveOptions& opts = {});

/// Minimum-degree greedy stable set on the same power graph. The size is at
/// least ceil(m / (d_av + 1)) where d_av is that graph's average degree.
SolveResult greedy_k_strong(const Graph& g, int k);

/// Local-neighborhood bounds on the strong matching number.
struct BoundsReport {
    std::optional<Rational> nu_avg_lower;    // m^2 / (4 sum_u d1(u) (d_{k+1}(u) - 1))
    std::optional<Rational> nu_maxdeg_lower; // m / (8 Delta^{k+1})
    std::optional<Rational> nu_upper;        // n / min_u d_{k1}(u), k >= 3 only
    int k1 = -1;
    long long degree_sum = 0; // sum_u d1(u) (d_{k+1}(u) - 1)

    std::string to_json() const; // rationals as {"num":..,"den":..}
};

/// Lower bounds; requires m >= 1 and no isolated edge.
BoundsReport nu_lower_bounds(const Graph& g, int k);

/// Upper bound for k >= 3; requires min_u d_{k1}(u) >= 1.
BoundsReport nu_upper_bound(const Graph& g, int k);

/// Radius used by the upper bound: (k-1)/2 for odd k, (k-2)/2 for even k.
int upper_bound_radius(int k);

} // namespace strongmatch
