#pragma once

#include <string>
#include <vector>

#include "dcover/catalog.hpp"
#include "dcover/covering.hpp"
#include "dcover/graph.hpp"

namespace dcover::testing {

// Vertices: 0 right, 1 top, 2 left, 3 bottom. Two triangles sharing 0-2.
inline Graph kite() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}); }

// Kite minus the left-bottom edge.
inline SpanningSubgraph kite_h1() { return SpanningSubgraph::from_edges(kite(), std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}}); }

// Star at the left vertex.
inline SpanningSubgraph kite_h2() { return SpanningSubgraph::from_edges(kite(), std::vector<Edge>{{0, 2}, {1, 2}, {2, 3}}); }

// Non-switching-equivalent pair with isomorphic covers.
inline SpanningSubgraph kite_iso_h() { return SpanningSubgraph::from_edges(kite(), std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {2, 3}}); }
inline SpanningSubgraph kite_iso_k() { return SpanningSubgraph::from_edges(kite(), std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

// Four-fold voltage: (12)(34) on 0->1, (1234) on 0->3, identity elsewhere.
inline PermutationVoltage kite_fold4() {
  std::vector<PermutationVoltage::DirectedEntry> entries{
      {0, 1, Permutation::from_cycles(4, {{1, 2}, {3, 4}})},
      {0, 3, Permutation::from_cycles(4, {{1, 2, 3, 4}})},
  };
  return PermutationVoltage::from_directed(kite(), 4, entries);
}

/// K_{m-1} on vertices 0..m-2 plus isolated vertices, spanning K_n.
inline SpanningSubgraph clique_plus_isolated(int n, int m) {
  std::vector<Edge> edges;
  for (int u = 0; u < m - 1; ++u) {
    for (int v = u + 1; v < m - 1; ++v) edges.emplace_back(u, v);
  }
  return SpanningSubgraph::from_edges(complete_graph(n), edges);
}

/// Disjoint cliques of the given sizes spanning K_n.
inline SpanningSubgraph disjoint_cliques(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  std::vector<Edge> edges;
  int start = 0;
  for (int s : sizes) {
    for (int u = start; u < start + s; ++u) {
      for (int v = u + 1; v < start + s; ++v) edges.emplace_back(u, v);
    }
    start += s;
  }
  return SpanningSubgraph::from_edges(complete_graph(n), edges);
}

inline std::string data_path(const std::string& name) { return std::string(DCOVER_TEST_DATA) + "/" + name; }

}  // namespace dcover::testing
