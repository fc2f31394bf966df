#pragma once

#include "detail/bitgraph.hpp"
#include "strongmatch/graph.hpp"

namespace strongmatch::detail {

// Conflict graph of the k-strong matching problem: vertices are the edges of
// g, adjacency is line-graph distance <= k + 1. Stable sets correspond
// exactly to k-strong matchings. Throws errc::empty_graph when g has no
// edges.
BitGraph build_power_bitgraph(const Graph& g, int k);

} // namespace strongmatch::detail
