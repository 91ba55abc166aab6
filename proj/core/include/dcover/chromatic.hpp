#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcover/covering.hpp"
#include "dcover/graph.hpp"

namespace dcover {

/// Vertex coloring with colors 1..palette_size.
struct Coloring {
  std::vector<int> colors;
  int palette_size = 0;

  Coloring() = default;
  Coloring(std::vector<int> c, int palette) : colors(std::move(c)), palette_size(palette) {}

  int operator[](Vertex v) const { return colors[static_cast<std::size_t>(v)]; }
  std::size_t size() const { return colors.size(); }
  /// Number of distinct colors actually used.
  int used_colors() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Total, within the palette, and no edge of g monochromatic.
bool is_proper(const Graph& g, const Coloring& c);
bool is_proper(const SpanningSubgraph& h, const Coloring& c);

struct SolverOptions {
  /// Exact search refuses graphs with more vertices than this.
  int exact_vertex_limit = 64;
  bool allow_large = false;
};

struct ColoringResult {
  int chromatic_number = 0;
  Coloring witness;
};

/// Exact chi(G) with a witness coloring. DSATUR-ordered branch and bound per
/// component, seeded with a greedy clique (lower bound, precolored) and a
/// DSATUR greedy coloring (upper bound). chi = 0 for the empty graph.
/// Throws SizeLimitError, carrying the greedy bound, above the vertex limit.
ColoringResult optimal_coloring(const Graph& g, const SolverOptions& options = {});
int chromatic_number(const Graph& g, const SolverOptions& options = {});

/// A proper coloring with at most k colors (palette_size = k), if any.
std::optional<Coloring> is_k_colorable(const Graph& g, int k, const SolverOptions& options = {});

/// DSATUR greedy coloring; an upper bound on chi.
Coloring greedy_coloring(const Graph& g);
/// Greedy maximal clique, used as a lower bound on chi.
std::vector<Vertex> greedy_clique(const Graph& g);

struct ColoringEnumeration {
  std::vector<Coloring> colorings;
  bool complete = false;
};

/// Proper k-colorings of g up to color permutation (colors first appear in
/// increasing vertex order), stopping after `limit` of them.
ColoringEnumeration enumerate_colorings(const Graph& g, int k, std::size_t limit);

// --- compatible colorings ----------------------------------------------------

struct CompatibilityReport {
  bool compatible = false;
  /// First edge of E(G) - E(H), in edge order, violating compatibility.
  std::optional<Edge> violation;
};

/// f, g compatible in G: f(u) != g(v) and f(v) != g(u) on every edge of
/// E(G) - E(H). Throws ImproperColoringError if f or g is not proper on H.
CompatibilityReport check_compatible(const SpanningSubgraph& h, const Coloring& f, const Coloring& g);

/// A pair of colorings of H checked proper and compatible at construction.
class CompatiblePair {
 public:
  /// Throws ImproperColoringError or PreconditionError.
  CompatiblePair(SpanningSubgraph h, Coloring f, Coloring g);

  const SpanningSubgraph& subgraph() const { return h_; }
  const Coloring& f() const { return f_; }
  const Coloring& g() const { return g_; }

 private:
  SpanningSubgraph h_;
  Coloring f_;
  Coloring g_;
};

struct RelativeColoringResult {
  int value = 0;
  Coloring f;
  Coloring g;
};

/// A compatible pair of proper k-colorings of H, if one exists.
std::optional<CompatiblePair> find_compatible_pair(const SpanningSubgraph& h, int k,
                                                   const SolverOptions& options = {});

/// chi_G(H) by joint backtracking over (f, g). f is restricted to colorings
/// whose colors first appear in search order; g is unconstrained. Refuses
/// 2|V| above the exact vertex limit.
RelativeColoringResult chi_rel_direct_with_witness(const SpanningSubgraph& h, const SolverOptions& options = {});
int chi_rel_direct(const SpanningSubgraph& h, const SolverOptions& options = {});

/// chi_G(H) as chi of the double cover derived from phi_H.
int chi_rel_via_cover(const SpanningSubgraph& h, const SolverOptions& options = {});

// --- n-fold -------------------------------------------------------------------

struct NfoldResult {
  int value = 0;
  /// f_1..f_n, f_i(v) = color of cover vertex (v, i).
  std::vector<Coloring> tuple;
};

/// Smallest k admitting a compatible n-tuple for the voltage, via chi of the
/// permutation derived graph.
NfoldResult chi_rel_nfold(const PermutationVoltage& phi, const SolverOptions& options = {});

struct TupleReport {
  bool valid = false;
  std::string message;
};

/// Each f_i proper on cospt(phi), and f_i(u) != f_{phi(u,v)(i)}(v) for every
/// directed edge (u, v) outside cospt(phi) and every i.
TupleReport check_compatible_tuple(const PermutationVoltage& phi, std::span<const Coloring> tuple);

/// Same value as chi_rel_nfold, by searching tuples directly on the
/// compatibility condition. For validation on small instances; refuses more
/// than `variable_limit` variables (|V| * fold).
int chi_rel_nfold_direct(const PermutationVoltage& phi, int variable_limit = 40);

}  // namespace dcover
