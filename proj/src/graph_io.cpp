#include "strongmatch/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace strongmatch {

Graph load_edge_list(std::istream& in) {
    long long n = -1, m = -1;
    if (!(in >> n >> m)) fail(errc::bad_format, "edge list header must be \"n m\"");
    if (n < 0 || m < 0) fail(errc::bad_format, "negative count in edge list header");
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            fail(errc::bad_format, "edge list truncated at edge " + std::to_string(i));
        pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return Graph::build(static_cast<VertexId>(n), pairs);
}

Graph load_graph_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::bad_format, e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        fail(errc::bad_format, "graph JSON needs fields \"n\" and \"edges\"");
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) fail(errc::bad_format, "edge entries must be [u, v]");
        pairs.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
    }
    return Graph::build(j.at("n").get<VertexId>(), pairs);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_config, "cannot open graph file " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return load_graph_json(in);
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void save_graph_json(const Graph& g, std::ostream& out) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    nlohmann::json j{{"n", g.vertex_count()}, {"edges", edges}};
    out << j.dump() << '\n';
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(errc::bad_config, "cannot open output file " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        save_graph_json(g, out);
    else
        save_edge_list(g, out);
}

} // namespace strongmatch
