#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcover/chromatic.hpp"
#include "dcover/graph.hpp"

namespace dcover {

/// max(0, 2 max(S) - sum(S)). Throws PreconditionError on empty S.
int delta_S(std::span<const int> s);

/// Number of color classes of f that are independent in the complement of H
/// within G. Throws ImproperColoringError unless f is proper on H.
int independent_color_count(const SpanningSubgraph& h, const Coloring& f);

struct BoundReport {
  std::string name;
  int lower = 0;
  int upper = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
};

/// `bound <name> lower=<l> upper=<u> exhaustive=<y|n> seed=<s>`
std::string format_bound(const BoundReport& r);

inline constexpr std::size_t default_class_budget = std::size_t{1} << 12;
inline constexpr std::size_t default_coloring_budget = 256;

/// Bounds from the switching class: lower = max chi(K), upper = min over K and
/// chi(K)-colorings f of K of min(chi(G), 2 chi(K) - I_f). K = H_X with X over
/// subsets of V - {0}; exhaustive when 2^(|V|-1) <= class_budget, otherwise
/// over class_budget subsets drawn from mt19937_64(seed).
BoundReport bounds_cor24(const SpanningSubgraph& h, std::size_t class_budget = default_class_budget,
                         std::uint64_t seed = 0, std::size_t coloring_budget = default_coloring_budget);

/// H/P where P is the partition into components of the complement of H in G,
/// with one optimal coloring c of that quotient and the parts H_c(i).
struct QuotientColoringContext {
  SpanningSubgraph h;
  Partition complement_partition;
  Graph quotient;
  Coloring c;
  /// Vertex sets c^-1(i), as vertices of G.
  std::vector<std::vector<Vertex>> parts;
};

struct Thm31Result {
  int value = 0;
  bool exhaustive = true;
};

/// Upper bound minimizing, over chi(H/P)-colorings c of the quotient (up to
/// color permutation, at most search_budget of them), the smaller of
/// sum s_i + Delta{s_i} and sum s_i + min_f Delta{D_f(i)} with
/// s_i = chi(H_c(i)) and f over colorings respecting c.
Thm31Result upper_thm31_detailed(const SpanningSubgraph& h, std::size_t search_budget = default_coloring_budget);
int upper_thm31(const SpanningSubgraph& h, std::size_t search_budget = default_coloring_budget);
/// Report form; lower is chi(H).
BoundReport bounds_thm31(const SpanningSubgraph& h, std::size_t search_budget = default_coloring_budget);

/// H = union of G[V_i]. lower = max chi(G[V_i + V_j]), upper = max
/// chi(G[V_i]) + chi(G[V_j]) over blocks adjacent in G/P; (chi(H), chi(H))
/// when the quotient has no edges.
BoundReport bounds_thm34(const Graph& g, const Partition& p);

/// Components of H when H is the union of the subgraphs they induce in G.
std::optional<Partition> induced_partition(const SpanningSubgraph& h);

struct BipartiteQuotientReport {
  int chi = 0;
  int chi_rel = 0;
  bool equal = false;
  int sandwich_lower = 0;
  int sandwich_upper = 0;
  bool sandwich_holds = false;
};

/// For bipartite G/P: chi(G) against chi_G(union of G[V_i]), and the
/// sandwich max chi(G[V_i + V_j]) <= chi(G) <= max chi(G[V_i]) + chi(G[V_j]).
/// Throws PreconditionError when the quotient is not bipartite.
BipartiteQuotientReport chi_equals_chi_rel_bipartite_quotient(const Graph& g, const Partition& p);

/// True iff G is bipartite or H switches to the null graph. Throws
/// PreconditionError when G is disconnected or has no edges.
bool characterize_chi2(const SpanningSubgraph& h);

struct Realization {
  SpanningSubgraph subgraph;
  int chi_rel = 0;
  /// chi_G of the padded m-critical subgraph.
  int critical_value = 0;
  /// The padded critical subgraph did not have chi_G = m; `subgraph` then
  /// comes from walking G's edges onto the null graph.
  bool discrepancy = false;
};

/// A spanning subgraph with chi_G = m, 2 <= m <= chi(G). Tries an m-critical
/// subgraph padded with isolated vertices first and checks it exactly.
/// Throws PreconditionError on disconnected G or m out of range.
Realization realize_chi_rel(const Graph& g, int m, const SolverOptions& options = {});

/// For H complete multipartite spanning a complete G: the number of parts.
/// Throws PreconditionError otherwise, and for a single part on 2+ vertices.
int chi_rel_complete_multipartite(const SpanningSubgraph& h);

/// For H whose complement in G is complete k-partite on the components of H,
/// k >= 2: chi(H_1) + chi(H_2) with components by descending chi, ties by
/// minimum vertex. Throws PreconditionError otherwise.
int chi_rel_complete_partite_complement(const SpanningSubgraph& h);

}  // namespace dcover
