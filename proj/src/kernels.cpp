#include "strongmatch/kernels.hpp"

#include <algorithm>

namespace strongmatch::kernels {

namespace {

// Reusable bounded-BFS scratch: one allocation per thread, reset by
// touched-list walk instead of a full clear.
struct BfsScratch {
    std::vector<std::int32_t> dist;
    std::vector<VertexId> frontier, next, touched;

    explicit BfsScratch(VertexId n) : dist(static_cast<std::size_t>(n), -1) {}

    // Visits every vertex within [1, radius] of u in ascending-distance
    // order and calls f(v) once per vertex.
    template <typename F>
    void run(const Graph& g, VertexId u, int radius, F&& f) {
        frontier.assign(1, u);
        touched.assign(1, u);
        dist[static_cast<std::size_t>(u)] = 0;
        for (int level = 1; level <= radius && !frontier.empty(); ++level) {
            next.clear();
            for (VertexId x : frontier) {
                for (const auto& [y, eid] : g.neighbors(x)) {
                    auto& d = dist[static_cast<std::size_t>(y)];
                    if (d < 0) {
                        d = level;
                        next.push_back(y);
                        touched.push_back(y);
                        f(y);
                    }
                }
            }
            frontier.swap(next);
        }
        for (VertexId x : touched) dist[static_cast<std::size_t>(x)] = -1;
    }
};

} // namespace

std::vector<int> neighborhood_counts(const Graph& g, int radius) {
    if (radius < 1) fail(errc::invalid_argument, "radius must be >= 1");
    const VertexId n = g.vertex_count();
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
#pragma omp parallel
    {
        BfsScratch scratch(n);
#pragma omp for schedule(dynamic, 32)
        for (VertexId u = 0; u < n; ++u) {
            int c = 0;
            scratch.run(g, u, radius, [&](VertexId) { ++c; });
            counts[static_cast<std::size_t>(u)] = c;
        }
    }
    return counts;
}

long long degree_sum_statistic(const Graph& g, int k) {
    if (k < 0) fail(errc::invalid_argument, "k must be >= 0");
    const VertexId n = g.vertex_count();
    long long total = 0;
#pragma omp parallel
    {
        BfsScratch scratch(n);
#pragma omp for schedule(dynamic, 32) reduction(+ : total)
        for (VertexId u = 0; u < n; ++u) {
            long long c = 0;
            scratch.run(g, u, k + 1, [&](VertexId) { ++c; });
            total += static_cast<long long>(g.degree(u)) * c;
        }
    }
    return total;
}

int min_neighborhood(const Graph& g, int radius) {
    if (g.vertex_count() == 0) fail(errc::empty_vertex_set, "graph has no vertices");
    std::vector<int> counts = neighborhood_counts(g, radius);
    return *std::min_element(counts.begin(), counts.end());
}

std::vector<std::vector<VertexId>> ball_adjacency(const Graph& g, int radius) {
    if (radius < 1) fail(errc::invalid_argument, "radius must be >= 1");
    const VertexId n = g.vertex_count();
    std::vector<std::vector<VertexId>> balls(static_cast<std::size_t>(n));
#pragma omp parallel
    {
        BfsScratch scratch(n);
#pragma omp for schedule(dynamic, 32)
        for (VertexId u = 0; u < n; ++u) {
            auto& ball = balls[static_cast<std::size_t>(u)];
            scratch.run(g, u, radius, [&](VertexId v) { ball.push_back(v); });
            std::sort(ball.begin(), ball.end());
        }
    }
    return balls;
}

namespace reference {

std::vector<int> neighborhood_counts(const Graph& g, int radius) {
    if (radius < 1) fail(errc::invalid_argument, "radius must be >= 1");
    const VertexId n = g.vertex_count();
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    BfsScratch scratch(n);
    for (VertexId u = 0; u < n; ++u) {
        int c = 0;
        scratch.run(g, u, radius, [&](VertexId) { ++c; });
        counts[static_cast<std::size_t>(u)] = c;
    }
    return counts;
}

long long degree_sum_statistic(const Graph& g, int k) {
    if (k < 0) fail(errc::invalid_argument, "k must be >= 0");
    const VertexId n = g.vertex_count();
    long long total = 0;
    BfsScratch scratch(n);
    for (VertexId u = 0; u < n; ++u) {
        long long c = 0;
        scratch.run(g, u, k + 1, [&](VertexId) { ++c; });
        total += static_cast<long long>(g.degree(u)) * c;
    }
    return total;
}

int min_neighborhood(const Graph& g, int radius) {
    if (g.vertex_count() == 0) fail(errc::empty_vertex_set, "graph has no vertices");
    std::vector<int> counts = neighborhood_counts(g, radius);
    return *std::min_element(counts.begin(), counts.end());
}

std::vector<std::vector<VertexId>> ball_adjacency(const Graph& g, int radius) {
    if (radius < 1) fail(errc::invalid_argument, "radius must be >= 1");
    const VertexId n = g.vertex_count();
    std::vector<std::vector<VertexId>> balls(static_cast<std::size_t>(n));
    BfsScratch scratch(n);
    for (VertexId u = 0; u < n; ++u) {
        auto& ball = balls[static_cast<std::size_t>(u)];
        scratch.run(g, u, radius, [&](VertexId v) { ball.push_back(v); });
        std::sort(ball.begin(), ball.end());
    }
    return balls;
}

} // namespace reference

} // namespace strongmatch::kernels
