// Wall-time comparison of the OpenMP kernels against their serial reference
// twins, plus the Monte Carlo weight loop at 1 vs max threads. Outputs one
// table row per kernel and size.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "strongmatch/kernels.hpp"
#include "strongmatch/random_graph.hpp"
#include "strongmatch/weights.hpp"

using namespace strongmatch;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

void row(const std::string& name, int n, double serial_ms, double parallel_ms) {
    std::printf("%-24s n=%-6d serial %9.2f ms   omp %9.2f ms   speedup %5.2fx\n", name.c_str(), n,
                serial_ms, parallel_ms, serial_ms / parallel_ms);
}

} // namespace

int main(int argc, char** argv) {
    int reps = 3;
    std::vector<VertexId> sizes{800, 1600, 3200};
    if (argc > 1) sizes = {static_cast<VertexId>(std::stoi(argv[1]))};

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif

    EdgeProbModel model; // constant h = 1, beta = 0.8, k = 3
    for (VertexId n : sizes) {
        Graph g = sample_graph(model, n, 7);
        const int radius = model.k + 1;

        double s = time_best_of(reps, [&] { kernels::reference::neighborhood_counts(g, radius); });
        double p = time_best_of(reps, [&] { kernels::neighborhood_counts(g, radius); });
        row("neighborhood_counts", n, s, p);

        s = time_best_of(reps, [&] { kernels::reference::degree_sum_statistic(g, model.k); });
        p = time_best_of(reps, [&] { kernels::degree_sum_statistic(g, model.k); });
        row("degree_sum_statistic", n, s, p);

        LineGraph lg = line_graph(g);
        s = time_best_of(reps, [&] { kernels::reference::ball_adjacency(lg.graph, radius); });
        p = time_best_of(reps, [&] { kernels::ball_adjacency(lg.graph, radius); });
        row("ball_adjacency (line)", n, s, p);

        double nbeta = std::pow(static_cast<double>(n), model.beta);
        double prob = 1.0 / nbeta;
        s = time_best_of(reps, [&] {
            kernels::reference::bernoulli_pairs(n, 11, [&](VertexId, VertexId) { return prob; });
        });
        p = time_best_of(reps, [&] {
            kernels::bernoulli_pairs(n, 11, [&](VertexId, VertexId) { return prob; });
        });
        row("bernoulli_pairs", n, s, p);
    }

    // Monte Carlo weight trials on a small instance, 1 thread vs default.
    {
        Graph pete = Graph::build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                       {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                       {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
        WeightModel wm = WeightModel::exponential(1.0);
        int trials = 4000;
#ifdef _OPENMP
        int max_threads = omp_get_max_threads();
        omp_set_num_threads(1);
#endif
        double s = time_best_of(reps, [&] { mc_weight_stats(pete, wm, 1, trials, 3); });
#ifdef _OPENMP
        omp_set_num_threads(max_threads);
#endif
        double p = time_best_of(reps, [&] { mc_weight_stats(pete, wm, 1, trials, 3); });
        row("mc_weight_stats", pete.vertex_count(), s, p);
    }
    return 0;
}
