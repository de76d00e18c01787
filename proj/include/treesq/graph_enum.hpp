#ifndef TREESQ_GRAPH_ENUM_HPP
#define TREESQ_GRAPH_ENUM_HPP

#include <cstdint>
#include <vector>

#include "treesq/graph.hpp"

namespace treesq {

inline constexpr int kGraphEnumCap = 8;

// Canonical form of a small graph: minimum edge-index bitmask over all
// vertex permutations. n <= 8.
std::uint64_t canonical_graph_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class on n labeled vertices
// (connectivity not required), built by vertex augmentation. n <= 7.
std::vector<Graph> enumerate_graphs(int n);
std::vector<Graph> enumerate_connected_graphs(int n);

} // namespace treesq

#endif
