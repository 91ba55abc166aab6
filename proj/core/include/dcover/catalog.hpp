#pragma once

#include <cstdint>
#include <vector>

#include "dcover/graph.hpp"

namespace dcover {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
/// Complete multipartite graph with the given part sizes, parts taking
/// consecutive vertices.
Graph complete_multipartite_graph(const std::vector<int>& parts);

/// Connected graphs on n vertices up to isomorphism, n <= 6, each in its
/// minimal edge-mask form over vertex relabellings.
std::vector<Graph> connected_graphs(int n);

/// Erdos-Renyi G(n, p) from mt19937_64(seed).
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace dcover
