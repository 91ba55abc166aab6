#pragma once

#include <optional>

#include "dcover/graph.hpp"

namespace dcover::oracle {

/// Smallest k such that some map V -> {1..k} has no monochromatic edge,
/// trying all k^n maps. |V| <= 10, else SizeLimitError.
int brute_chromatic(const Graph& g);

/// Smallest k such that some pair of proper k-colorings of H is compatible,
/// trying all pairs. |V| <= 7, else SizeLimitError.
int brute_chi_rel(const SpanningSubgraph& h);

/// First X, counting bit v as vertex v, with H_X = K. |V| <= 10, else
/// SizeLimitError.
std::optional<VertexSubset> brute_switch_equiv(const SpanningSubgraph& h, const SpanningSubgraph& k);

}  // namespace dcover::oracle
