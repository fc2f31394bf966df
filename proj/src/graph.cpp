#include "strongmatch/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace strongmatch {

namespace {

std::uint64_t pack_pair(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

} // namespace

Graph Graph::build(VertexId n, std::span<const std::pair<VertexId, VertexId>> edge_pairs) {
    if (n < 0) fail(errc::invalid_argument, "negative vertex count");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edge_pairs.size());

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edge_pairs.size() * 2);
    for (const auto& [u, v] : edge_pairs) {
        if (u < 0 || u >= n) fail(errc::vertex_out_of_range, "vertex " + std::to_string(u));
        if (v < 0 || v >= n) fail(errc::vertex_out_of_range, "vertex " + std::to_string(v));
        if (u == v) fail(errc::self_loop, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (!seen.insert(pack_pair(u, v)).second)
            fail(errc::duplicate_edge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.edges_.push_back(Edge{u, v});
    }

    std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : g.edges_) {
        ++counts[static_cast<std::size_t>(e.u) + 1];
        ++counts[static_cast<std::size_t>(e.v) + 1];
    }
    for (std::size_t i = 1; i < counts.size(); ++i) counts[i] += counts[i - 1];
    g.offsets_ = counts;
    g.adj_.resize(g.edges_.size() * 2);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edges_[static_cast<std::size_t>(id)];
        g.adj_[cursor[static_cast<std::size_t>(e.u)]++] = {e.v, id};
        g.adj_[cursor[static_cast<std::size_t>(e.v)]++] = {e.u, id};
    }
    return g;
}

Graph Graph::build(VertexId n, std::initializer_list<std::pair<VertexId, VertexId>> edge_pairs) {
    std::vector<std::pair<VertexId, VertexId>> v(edge_pairs);
    return build(n, std::span<const std::pair<VertexId, VertexId>>(v));
}

Graph::Graph(const Graph& other)
    : n_(other.n_), edges_(other.edges_), offsets_(other.offsets_), adj_(other.adj_),
      memo_(std::make_unique<Memo>()) {}

DistanceView Graph::distances_from(VertexId source) const {
    check_vertex(source);
    {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto it = memo_->rows.find(source);
        if (it != memo_->rows.end()) return DistanceView(source, it->second);
    }

    auto dist = std::make_shared<std::vector<std::int32_t>>(static_cast<std::size_t>(n_), -1);
    std::vector<VertexId> frontier{source};
    (*dist)[static_cast<std::size_t>(source)] = 0;
    std::int32_t level = 0;
    std::vector<VertexId> next;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (VertexId u : frontier) {
            for (const auto& [v, eid] : neighbors(u)) {
                auto& d = (*dist)[static_cast<std::size_t>(v)];
                if (d < 0) {
                    d = level;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }

    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto [it, inserted] = memo_->rows.emplace(source, dist);
    return DistanceView(source, it->second);
}

int Graph::neighborhood_count(VertexId u, int radius) const {
    check_vertex(u);
    if (radius < 1) fail(errc::invalid_argument, "radius must be >= 1");
    // Bounded BFS; no memoization so bulk callers stay memory-flat.
    std::vector<std::int32_t> dist(static_cast<std::size_t>(n_), -1);
    std::vector<VertexId> frontier{u}, next;
    dist[static_cast<std::size_t>(u)] = 0;
    int count = 0;
    for (std::int32_t level = 1; level <= radius && !frontier.empty(); ++level) {
        next.clear();
        for (VertexId x : frontier) {
            for (const auto& [y, eid] : neighbors(x)) {
                auto& d = dist[static_cast<std::size_t>(y)];
                if (d < 0) {
                    d = level;
                    next.push_back(y);
                    ++count;
                }
            }
        }
        frontier.swap(next);
    }
    return count;
}

int Graph::max_degree() const {
    int best = 0;
    for (VertexId u = 0; u < n_; ++u) best = std::max(best, degree(u));
    return best;
}

bool Graph::has_isolated_edge() const {
    for (const Edge& e : edges_)
        if (degree(e.u) == 1 && degree(e.v) == 1) return true;
    return false;
}

LineGraph line_graph(const Graph& g) {
    if (g.edge_count() == 0) fail(errc::empty_graph, "line graph of an edgeless graph");
    const EdgeId m = g.edge_count();

    // Distinct edges of a simple graph share at most one endvertex, so
    // enumerating incident pairs per vertex emits each line edge once.
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        auto inc = g.neighbors(u);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                pairs.emplace_back(inc[i].second, inc[j].second);
    }

    LineGraph out{Graph::build(m, pairs), {}};
    out.vertex_to_edge.resize(static_cast<std::size_t>(m));
    for (EdgeId e = 0; e < m; ++e) out.vertex_to_edge[static_cast<std::size_t>(e)] = e;
    return out;
}

Graph graph_power(const Graph& g, int radius) {
    if (radius < 1) fail(errc::invalid_argument, "power radius must be >= 1");
    const VertexId n = g.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::vector<std::int32_t> dist(static_cast<std::size_t>(n), -1);
    std::vector<VertexId> frontier, next, touched;
    for (VertexId u = 0; u < n; ++u) {
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
                        if (y > u) pairs.emplace_back(u, y);
                    }
                }
            }
            frontier.swap(next);
        }
        for (VertexId x : touched) dist[static_cast<std::size_t>(x)] = -1;
    }
    return Graph::build(n, pairs);
}

} // namespace strongmatch
