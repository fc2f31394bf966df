#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "strongmatch/graph.hpp"
#include "strongmatch/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Data-parallel primitives. Each kernel has an OpenMP version here and a
// serial twin in kernels::reference with identical output — the tests assert
// bit equality and the bench target compares wall time. All kernels write
// into per-index slots or reduce integers only, so results do not depend on
// the thread count.

namespace strongmatch::kernels {

/// d_radius(u) for every vertex u (center excluded).
std::vector<int> neighborhood_counts(const Graph& g, int radius);

/// sum_u d1(u) * d_{k+1}(u).
long long degree_sum_statistic(const Graph& g, int k);

/// min_u d_radius(u); errc::empty_vertex_set on a vertexless graph.
int min_neighborhood(const Graph& g, int radius);

/// For every vertex, the ascending list of vertices within distance
/// [1, radius]. This is the adjacency of graph_power(g, radius).
std::vector<std::vector<VertexId>> ball_adjacency(const Graph& g, int radius);

/// Independent Bernoulli draw per unordered pair, keyed by (seed, u, v), in
/// lexicographic pair order. `prob(u, v)` gives the inclusion probability.
template <typename P>
std::vector<std::pair<VertexId, VertexId>> bernoulli_pairs(VertexId n, std::uint64_t seed,
                                                           P&& prob) {
    std::vector<std::vector<std::pair<VertexId, VertexId>>> rows(
        static_cast<std::size_t>(n > 0 ? n : 0));
#pragma omp parallel for schedule(dynamic, 64)
    for (VertexId u = 0; u < n; ++u) {
        auto& row = rows[static_cast<std::size_t>(u)];
        for (VertexId v = u + 1; v < n; ++v) {
            if (rng::uniform(seed, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)) <
                prob(u, v))
                row.emplace_back(u, v);
        }
    }
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const auto& row : rows) pairs.insert(pairs.end(), row.begin(), row.end());
    return pairs;
}

namespace reference {

std::vector<int> neighborhood_counts(const Graph& g, int radius);
long long degree_sum_statistic(const Graph& g, int k);
int min_neighborhood(const Graph& g, int radius);
std::vector<std::vector<VertexId>> ball_adjacency(const Graph& g, int radius);

template <typename P>
std::vector<std::pair<VertexId, VertexId>> bernoulli_pairs(VertexId n, std::uint64_t seed,
                                                           P&& prob) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng::uniform(seed, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)) <
                prob(u, v))
                pairs.emplace_back(u, v);
    return pairs;
}

} // namespace reference

} // namespace strongmatch::kernels
