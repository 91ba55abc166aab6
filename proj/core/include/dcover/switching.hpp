#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dcover/covering.hpp"
#include "dcover/graph.hpp"

namespace dcover {

/// Seidel switch H_X: inside X and inside V-X keep H's adjacency; across the
/// cut take the complement of H in G. Throws GraphError if X is over a
/// different vertex set.
SpanningSubgraph seidel_switch(const SpanningSubgraph& h, const VertexSubset& x);

/// phi_X: flips the sign of every edge with exactly one end in X.
Signing switch_signing(const Signing& phi, const VertexSubset& x);

/// A vertex set X proven to switch `source` into `target`.
class SwitchWitness {
 public:
  /// Throws PreconditionError unless seidel_switch(source, x) == target.
  SwitchWitness(const SpanningSubgraph& source, const SpanningSubgraph& target, VertexSubset x);

  const VertexSubset& subset() const { return subset_; }

 private:
  VertexSubset subset_;
};

/// Decides Seidel switching equivalence by propagating
/// s(u) s(v) = phi_H(e) phi_K(e) over each component of G, rooting every
/// component at its lowest vertex with s = +1. X = s^-1(-1). Linear time.
/// Throws MismatchError if H and K have different parents.
std::optional<SwitchWitness> are_switching_equivalent(const SpanningSubgraph& h, const SpanningSubgraph& k);

inline constexpr int default_class_vertex_limit = 16;
inline constexpr std::size_t default_class_edge_limit = 24;

/// [H] = {H_X : X subset of V}, deduplicated and sorted by edge mask. Throws
/// SizeLimitError above `vertex_limit` vertices.
std::vector<SpanningSubgraph> enumerate_switching_class(const SpanningSubgraph& h,
                                                        int vertex_limit = default_class_vertex_limit);

/// Number of switching classes among all 2^|E| spanning subgraphs of G, i.e.
/// double covers of G up to covering isomorphism. Counted by explicit orbit
/// marking. Throws SizeLimitError above either limit.
std::size_t count_cover_classes(const Graph& g, int vertex_limit = default_class_vertex_limit,
                                std::size_t edge_limit = default_class_edge_limit);

}  // namespace dcover
