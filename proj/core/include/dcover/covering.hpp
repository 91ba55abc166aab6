#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcover/graph.hpp"

namespace dcover {

enum class Sign : std::int8_t { plus = 1, minus = -1 };

inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }

/// Z2 voltage assignment: one sign per edge of the base graph, indexed like
/// base.edges().
class Signing {
 public:
  Signing() = default;
  Signing(Graph base, std::vector<Sign> signs);
  static Signing all(Graph base, Sign s);

  const Graph& base() const { return base_; }
  Sign sign(std::size_t edge_index) const { return signs_[edge_index]; }
  /// Sign of edge (a,b); throws GraphError if it is not an edge.
  Sign sign(Vertex a, Vertex b) const;
  const std::vector<Sign>& signs() const { return signs_; }

  /// spt: edges signed -1.
  SpanningSubgraph support() const;
  /// cospt: edges signed +1.
  SpanningSubgraph cosupport() const;

  friend bool operator==(const Signing&, const Signing&) = default;

 private:
  Graph base_;
  std::vector<Sign> signs_;
};

/// phi_H: +1 exactly on E(H).
Signing signing_from_cosupport(const SpanningSubgraph& h);

/// Permutation of {0..n-1} in one-line form; image(j) is where j goes.
/// External formats use 1..n.
class Permutation {
 public:
  Permutation() = default;
  /// Throws VoltageError if `images` is not a bijection of 0..n-1.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// From 1-based one-line images, as in `2,3,4,1`.
  static Permutation from_one_based(std::span<const int> images);
  /// Product of disjoint cycles given 1-based, e.g. {{1,2},{3,4}}.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;
  /// (this * other)(j) = this(other(j)).
  Permutation compose(const Permutation& other) const;
  /// Comma-separated 1-based images.
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Permutation voltage assignment phi: D(G) -> S_n. One permutation is stored
/// per edge for the (min -> max) orientation; the reverse orientation carries
/// the inverse, so phi(e^-1) = phi(e)^-1 holds by construction.
class PermutationVoltage {
 public:
  PermutationVoltage() = default;
  /// `canonical` is indexed like base.edges(); throws VoltageError on a fold
  /// mismatch.
  PermutationVoltage(Graph base, int fold, std::vector<Permutation> canonical);
  /// Identity on every edge.
  static PermutationVoltage trivial(Graph base, int fold);

  /// Directed assignment builder: entries may name either orientation of an
  /// edge. If both orientations of an edge are given they must be mutually
  /// inverse; edges never mentioned get the identity. Throws VoltageError.
  struct DirectedEntry {
    Vertex from;
    Vertex to;
    Permutation perm;
  };
  static PermutationVoltage from_directed(Graph base, int fold, std::span<const DirectedEntry> entries);

  /// n = 2 encoding of a signing: +1 -> identity, -1 -> transposition.
  static PermutationVoltage from_signing(const Signing& s);

  const Graph& base() const { return base_; }
  int fold() const { return fold_; }
  const Permutation& canonical(std::size_t edge_index) const { return perms_[edge_index]; }
  /// phi applied to the directed edge (from, to). Throws GraphError if that
  /// is not an edge.
  Permutation value(Vertex from, Vertex to) const;
  /// Image of sheet j (0-based) along the directed edge (from, to).
  int apply(Vertex from, Vertex to, int sheet) const;

  /// cospt(phi): edges carrying the identity.
  SpanningSubgraph cosupport() const;

 private:
  Graph base_;
  int fold_ = 1;
  std::vector<Permutation> perms_;
  std::vector<Permutation> inverses_;
};

struct FiberLabel {
  Vertex base_vertex;
  int sheet;  // 0-based

  friend bool operator==(const FiberLabel&, const FiberLabel&) = default;
};

/// A graph together with a claimed projection onto a base graph. Built by the
/// derive_* functions; verify_covering checks the covering property for any
/// instance, including hand-modified ones.
struct CoveringGraph {
  Graph graph;
  Graph base;
  int fold = 0;
  std::vector<FiberLabel> fiber;  // per covering vertex

  Vertex projection(Vertex v) const { return fiber[static_cast<std::size_t>(v)].base_vertex; }
};

/// Double cover index of v_g: 2v for g = +1, 2v+1 for g = -1.
inline Vertex double_cover_index(Vertex v, Sign g) { return 2 * v + (g == Sign::plus ? 0 : 1); }

/// G^phi for a signing: u_g ~ v_{phi(u,v) g}.
CoveringGraph derive_double_cover(const Signing& phi);

/// Permutation derived graph: (u, j) ~ (v, phi(u,v) j), vertex (v, j) at
/// index fold*v + j.
CoveringGraph derive_nfold_cover(const PermutationVoltage& phi);

struct CoveringReport {
  bool valid = false;
  /// Covering vertices where local bijectivity fails (ascending).
  std::vector<Vertex> violations;
  std::string message;
};

/// Checks uniform fibre sizes and that p restricted to N(v~) is a bijection
/// onto N(p(v~)) at every covering vertex.
CoveringReport verify_covering(const CoveringGraph& c);

/// For a connected non-bipartite base: true iff every cycle C has
/// phi(C) = +1 exactly when |C| is even, which holds iff G^phi is bipartite.
/// Checked on a spanning-tree cycle basis. Throws PreconditionError for a
/// disconnected or bipartite base.
bool z2_cycle_parity_check(const Signing& phi);

/// Every voltage of the given fold on `base`, one per orbit under relabelling
/// the sheets (simultaneous conjugation of all edge permutations), each the
/// lexicographically least member of its orbit. Throws SizeLimitError when
/// (fold!)^|E| exceeds `limit`.
std::vector<PermutationVoltage> voltages_up_to_relabeling(const Graph& base, int fold, std::size_t limit = 1'000'000);

}  // namespace dcover
