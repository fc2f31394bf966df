#pragma once

#include <iosfwd>
#include <string>

#include "strongmatch/graph.hpp"

namespace strongmatch {

// Two on-disk graph formats, both validated on load:
//   edge list: first line "n m", then m lines "u v"
//   JSON:      {"n": int, "edges": [[u, v], ...]}

Graph load_edge_list(std::istream& in);
Graph load_graph_json(std::istream& in);

/// Dispatches on extension: .json -> JSON, anything else -> edge list.
Graph load_graph_file(const std::string& path);

void save_edge_list(const Graph& g, std::ostream& out);
void save_graph_json(const Graph& g, std::ostream& out);
void save_graph_file(const Graph& g, const std::string& path);

} // namespace strongmatch
