#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "strongmatch/errors.hpp"

namespace strongmatch {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Hop distance between two vertices; unreachable pairs get a distinguished
/// value that never compares equal to a real hop count.
class Distance {
public:
    static Distance unreachable() { return Distance(-1); }
    static Distance hops(std::int32_t h) { return Distance(h); }

    bool reachable() const { return v_ >= 0; }
    std::int32_t value() const {
        if (v_ < 0) fail(errc::invalid_argument, "value() on unreachable distance");
        return v_;
    }
    /// True iff reachable and at most r hops away.
    bool within(std::int32_t r) const { return v_ >= 0 && v_ <= r; }

    friend bool operator==(Distance a, Distance b) { return a.v_ == b.v_; }

private:
    explicit Distance(std::int32_t v) : v_(v) {}
    std::int32_t v_;
};

struct Edge {
    VertexId u;
    VertexId v;
};

/// Shared handle to the BFS distance row of one source vertex.
class DistanceView {
public:
    DistanceView(VertexId source, std::shared_ptr<const std::vector<std::int32_t>> dist)
        : source_(source), dist_(std::move(dist)) {}

    VertexId source() const { return source_; }
    Distance operator[](VertexId v) const {
        std::int32_t d = (*dist_)[static_cast<std::size_t>(v)];
        return d < 0 ? Distance::unreachable() : Distance::hops(d);
    }
    std::size_t size() const { return dist_->size(); }

private:
    VertexId source_;
    std::shared_ptr<const std::vector<std::int32_t>> dist_;
};

/// Immutable simple undirected graph. Vertices are dense 0-based ids and
/// every edge keeps the id given by its position in the construction list,
/// so witnesses and seeded experiments reproduce byte-for-byte.
///
/// Safe to share across threads after construction; the internal BFS memo
/// is mutex-guarded.
class Graph {
public:
    static Graph build(VertexId n, std::span<const std::pair<VertexId, VertexId>> edge_pairs);
    static Graph build(VertexId n, std::initializer_list<std::pair<VertexId, VertexId>> edge_pairs);

    VertexId vertex_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

    Edge edge(EdgeId e) const {
        if (e < 0 || e >= edge_count()) fail(errc::unknown_edge_id, "edge id " + std::to_string(e));
        return edges_[static_cast<std::size_t>(e)];
    }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Incident (neighbor, edge id) pairs of u, in edge-insertion order.
    std::span<const std::pair<VertexId, EdgeId>> neighbors(VertexId u) const {
        check_vertex(u);
        return {adj_.data() + offsets_[static_cast<std::size_t>(u)],
                adj_.data() + offsets_[static_cast<std::size_t>(u) + 1]};
    }

    int degree(VertexId u) const {
        check_vertex(u);
        return static_cast<int>(offsets_[static_cast<std::size_t>(u) + 1] -
                                offsets_[static_cast<std::size_t>(u)]);
    }

    /// Full BFS from source; rows are memoized per graph instance.
    DistanceView distances_from(VertexId source) const;

    /// d_j(u): vertices v != u with dist(u, v) <= radius. The center does
    /// not count itself.
    int neighborhood_count(VertexId u, int radius) const;

    int max_degree() const;

    /// True iff some edge has both endpoints of degree 1.
    bool has_isolated_edge() const;

    void check_vertex(VertexId u) const {
        if (u < 0 || u >= n_) fail(errc::vertex_out_of_range, "vertex " + std::to_string(u));
    }

    Graph(const Graph& other);
    Graph(Graph&&) noexcept = default;
    Graph& operator=(const Graph&) = delete;
    Graph& operator=(Graph&&) noexcept = default;

private:
    Graph() = default;

    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<std::pair<VertexId, EdgeId>> adj_;

    struct Memo {
        std::mutex mutex;
        std::unordered_map<VertexId, std::shared_ptr<const std::vector<std::int32_t>>> rows;
    };
    std::unique_ptr<Memo> memo_ = std::make_unique<Memo>();
};

struct LineGraph {
    Graph graph;                        // one vertex per input edge
    std::vector<EdgeId> vertex_to_edge; // identity map, kept explicit
};

/// Vertices of the result are the edges of g; two are adjacent iff the
/// edges share an endvertex.
LineGraph line_graph(const Graph& g);

/// Same vertex set; u ~ v iff 1 <= dist_g(u, v) <= radius.
Graph graph_power(const Graph& g, int radius);

} // namespace strongmatch
