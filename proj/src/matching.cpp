#include "strongmatch/matching.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "detail/power.hpp"
#include "strongmatch/kernels.hpp"

namespace strongmatch {

long long rational_ceil(const Rational& r) {
    long long q = r.numerator() / r.denominator(); // denominator is positive
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

std::string Matching::to_json() const {
    nlohmann::json j{{"k", k}, {"edge_ids", edge_ids}, {"size", edge_ids.size()}};
    return j.dump();
}

bool is_matching(const Graph& g, std::span<const EdgeId> edge_ids) {
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId id : edge_ids) {
        Edge e = g.edge(id); // validates the id
        if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)])
            return false;
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
    }
    return true;
}

bool is_k_strong(const Graph& g, const Matching& m, int k) {
    if (k < 0) fail(errc::invalid_argument, "k must be >= 0");
    if (!is_matching(g, m.edge_ids)) fail(errc::not_a_matching, "edges share an endvertex");
    if (k == 0 || m.edge_ids.size() < 2) return true;

    // owner[v] = index into m.edge_ids when v is an endvertex, else -1.
    std::vector<std::int32_t> owner(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < m.edge_ids.size(); ++i) {
        Edge e = g.edge(m.edge_ids[i]);
        owner[static_cast<std::size_t>(e.u)] = static_cast<std::int32_t>(i);
        owner[static_cast<std::size_t>(e.v)] = static_cast<std::int32_t>(i);
    }

    // Bounded BFS in the host graph from each endvertex; any other edge's
    // endvertex within k hops kills the property.
    std::vector<std::int32_t> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<VertexId> frontier, next, touched;
    for (std::size_t i = 0; i < m.edge_ids.size(); ++i) {
        Edge e = g.edge(m.edge_ids[i]);
        for (VertexId source : {e.u, e.v}) {
            frontier.assign(1, source);
            touched.assign(1, source);
            dist[static_cast<std::size_t>(source)] = 0;
            bool hit = false;
            for (int level = 1; level <= k && !frontier.empty() && !hit; ++level) {
                next.clear();
                for (VertexId x : frontier) {
                    for (const auto& [y, eid] : g.neighbors(x)) {
                        auto& d = dist[static_cast<std::size_t>(y)];
                        if (d < 0) {
                            d = level;
                            next.push_back(y);
                            touched.push_back(y);
                            std::int32_t o = owner[static_cast<std::size_t>(y)];
                            if (o >= 0 && o != static_cast<std::int32_t>(i)) {
                                hit = true;
                                break;
                            }
                        }
                    }
                    if (hit) break;
                }
                frontier.swap(next);
            }
            for (VertexId x : touched) dist[static_cast<std::size_t>(x)] = -1;
            if (hit) return false;
        }
    }
    return true;
}

namespace detail {

BitGraph build_power_bitgraph(const Graph& g, int k) {
    LineGraph lg = line_graph(g); // errc::empty_graph when m = 0
    const int m = lg.graph.vertex_count();
    BitGraph bg(m);
    auto balls = kernels::ball_adjacency(lg.graph, k + 1);
    for (int v = 0; v < m; ++v)
        for (VertexId w : balls[static_cast<std::size_t>(v)])
            if (w > v) bg.add_edge(v, w);
    return bg;
}

} // namespace detail

SolveResult max_k_strong_exact(const Graph& g, int k, const SolveOptions& opts) {
    if (k < 0) fail(errc::invalid_argument, "k must be >= 0");
    detail::BitGraph bg = detail::build_power_bitgraph(g, k);
    detail::MisResult mis = detail::max_independent_set(bg, nullptr, opts.max_nodes);
    SolveResult out;
    out.size = mis.size;
    out.witness.k = k;
    out.witness.edge_ids.assign(mis.members.begin(), mis.members.end());
    return out;
}

SolveResult greedy_k_strong(const Graph& g, int k) {
    if (k < 0) fail(errc::invalid_argument, "k must be >= 0");
    LineGraph lg = line_graph(g); // errc::empty_graph when m = 0
    auto balls = kernels::ball_adjacency(lg.graph, k + 1);
    const int m = lg.graph.vertex_count();

    std::vector<int> deg(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) deg[static_cast<std::size_t>(v)] = static_cast<int>(balls[static_cast<std::size_t>(v)].size());
    std::vector<char> alive(static_cast<std::size_t>(m), 1);

    // Min-degree greedy with a lazy heap; stale entries are skipped when
    // their recorded degree no longer matches.
    using Entry = std::pair<int, int>; // (degree, vertex)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (int v = 0; v < m; ++v) heap.emplace(deg[static_cast<std::size_t>(v)], v);

    std::vector<EdgeId> picked;
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (!alive[static_cast<std::size_t>(v)] || d != deg[static_cast<std::size_t>(v)]) continue;
        picked.push_back(v);
        alive[static_cast<std::size_t>(v)] = 0;
        for (VertexId u : balls[static_cast<std::size_t>(v)]) {
            if (!alive[static_cast<std::size_t>(u)]) continue;
            alive[static_cast<std::size_t>(u)] = 0;
            for (VertexId w : balls[static_cast<std::size_t>(u)]) {
                if (!alive[static_cast<std::size_t>(w)]) continue;
                --deg[static_cast<std::size_t>(w)];
                heap.emplace(deg[static_cast<std::size_t>(w)], w);
            }
        }
    }

    std::sort(picked.begin(), picked.end());
    SolveResult out;
    out.size = static_cast<int>(picked.size());
    out.witness.k = k;
    out.witness.edge_ids = std::move(picked);
    return out;
}

int upper_bound_radius(int k) {
    return (k % 2 == 1) ? (k - 1) / 2 : (k - 2) / 2;
}

namespace {

nlohmann::json rational_json(const Rational& r) {
    return nlohmann::json{{"num", r.numerator()}, {"den", r.denominator()}};
}

long long checked_pow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > std::numeric_limits<long long>::max() / (8 * base))
            fail(errc::invalid_argument, "degree bound overflows");
        out *= base;
    }
    return out;
}

} // namespace

std::string BoundsReport::to_json() const {
    nlohmann::json j;
    if (nu_avg_lower) j["nu_avg_lower"] = rational_json(*nu_avg_lower);
    if (nu_maxdeg_lower) j["nu_maxdeg_lower"] = rational_json(*nu_maxdeg_lower);
    if (nu_upper) j["nu_upper"] = rational_json(*nu_upper);
    if (k1 >= 0) j["k1"] = k1;
    if (nu_avg_lower) j["degree_sum"] = degree_sum;
    return j.dump();
}

BoundsReport nu_lower_bounds(const Graph& g, int k) {
    if (k < 0) fail(errc::invalid_argument, "k must be >= 0");
    const long long m = g.edge_count();
    if (m == 0) fail(errc::empty_graph, "lower bounds need at least one edge");
    if (g.has_isolated_edge()) fail(errc::isolated_edge_present, "graph has an isolated edge");

    std::vector<int> counts = kernels::neighborhood_counts(g, k + 1);
    long long sum = 0;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        sum += static_cast<long long>(g.degree(u)) *
               (counts[static_cast<std::size_t>(u)] - 1);
    BoundsReport rep;
    rep.degree_sum = sum;
    if (sum <= 0) fail(errc::zero_denominator, "degree sum is zero");

    rep.nu_avg_lower = Rational(m * m, 4 * sum);
    long long delta_pow = checked_pow(g.max_degree(), k + 1);
    rep.nu_maxdeg_lower = Rational(m, 8 * delta_pow);
    return rep;
}

BoundsReport nu_upper_bound(const Graph& g, int k) {
    if (k < 3) fail(errc::k_too_small, "upper bound needs k >= 3");
    BoundsReport rep;
    rep.k1 = upper_bound_radius(k);
    int min_ball = kernels::min_neighborhood(g, rep.k1);
    if (min_ball == 0) fail(errc::zero_min_neighborhood, "some vertex has an empty ball");
    rep.nu_upper = Rational(g.vertex_count(), min_ball);
    return rep;
}

} // namespace strongmatch
