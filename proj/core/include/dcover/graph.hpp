#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace dcover {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Copies share the underlying storage, so
/// passing graphs by value is cheap. Edges are kept sorted lexicographically
/// and every edge has a stable index into `edges()`.
class Graph {
 public:
  Graph();
  explicit Graph(int vertex_count);
  /// Throws GraphError on loops, duplicate edges or endpoints out of range.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return data_->n; }
  std::size_t edge_count() const { return data_->edges.size(); }
  bool empty() const { return data_->n == 0; }

  std::span<const Edge> edges() const { return data_->edges; }
  const Edge& edge(std::size_t index) const { return data_->edges[index]; }

  /// Sorted neighbourhood N(v).
  std::span<const Vertex> neighbors(Vertex v) const;
  /// Edge indices incident to v, parallel to neighbors(v).
  std::span<const std::size_t> incident_edges(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool adjacent(Vertex a, Vertex b) const;
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  bool contains_vertex(Vertex v) const { return v >= 0 && v < data_->n; }

  /// True when both handles refer to the same storage.
  bool same_storage(const Graph& other) const { return data_ == other.data_; }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Data {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> offsets;
    std::vector<Vertex> adjacency;
    std::vector<std::size_t> adjacency_edge;
  };
  std::shared_ptr<const Data> data_;
};

/// Subset of V(G), stored as a membership mask over 0..n-1.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(int vertex_count) : in_(static_cast<std::size_t>(vertex_count), false) {}
  /// Throws GraphError when a member is out of range.
  VertexSubset(int vertex_count, std::span<const Vertex> members);
  /// Bit v of `bits` selects vertex v; requires vertex_count <= 64.
  static VertexSubset from_bits(int vertex_count, std::uint64_t bits);

  int universe_size() const { return static_cast<int>(in_.size()); }
  bool contains(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  void insert(Vertex v) { in_[static_cast<std::size_t>(v)] = true; }
  void erase(Vertex v) { in_[static_cast<std::size_t>(v)] = false; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<Vertex> members() const;

  VertexSubset complement() const;
  /// Symmetric difference; both subsets must share the universe.
  VertexSubset symmetric_difference(const VertexSubset& other) const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<bool> in_;
};

/// Spanning subgraph H of a parent G: same vertex set, E(H) subset of E(G).
/// The edge set is a mask over the parent's edge indices.
class SpanningSubgraph {
 public:
  SpanningSubgraph() = default;
  /// `mask` must have one entry per parent edge.
  SpanningSubgraph(Graph parent, std::vector<bool> mask);

  /// Throws MismatchError when an edge is not in the parent.
  static SpanningSubgraph from_edges(Graph parent, std::span<const Edge> edges);
  /// Bit i of `bits` selects parent edge i; requires edge_count <= 64.
  static SpanningSubgraph from_bits(Graph parent, std::uint64_t bits);
  static SpanningSubgraph whole(Graph parent);
  static SpanningSubgraph null(Graph parent);

  const Graph& parent() const { return parent_; }
  int vertex_count() const { return parent_.vertex_count(); }
  const std::vector<bool>& mask() const { return mask_; }
  bool has_edge(std::size_t parent_edge_index) const { return mask_[parent_edge_index]; }
  /// True iff (a,b) is an edge of H.
  bool adjacent(Vertex a, Vertex b) const;
  std::size_t edge_count() const;
  std::vector<Edge> edge_list() const;
  /// H as a standalone graph on the same vertex set.
  Graph as_graph() const;
  /// Bit encoding of the mask; requires edge_count of the parent <= 64.
  std::uint64_t bits() const;

  friend bool operator==(const SpanningSubgraph& a, const SpanningSubgraph& b);

 private:
  Graph parent_;
  std::vector<bool> mask_;
};

/// Partition of V(G) into disjoint nonempty blocks.
class Partition {
 public:
  Partition() = default;
  /// Throws GraphError unless the blocks partition 0..vertex_count-1.
  /// Each block is sorted; block order is kept as given.
  Partition(int vertex_count, std::vector<std::vector<Vertex>> blocks);
  /// Blocks from a label per vertex, ordered by minimum vertex.
  static Partition from_labels(std::span<const int> labels);

  int vertex_count() const { return static_cast<int>(block_of_.size()); }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  const std::vector<Vertex>& block(std::size_t i) const { return blocks_[i]; }
  std::size_t block_of(Vertex v) const { return block_of_[static_cast<std::size_t>(v)]; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Result of induced_subgraph: the subgraph and, for each new vertex, the
/// original vertex it came from.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

/// Complement of H within its parent: E(G) - E(H).
SpanningSubgraph complement_within(const SpanningSubgraph& h);

/// G[S] relabelled to 0..|S|-1 in increasing vertex order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& subset);

/// G/P: one vertex per block, blocks adjacent iff some edge crosses them.
Graph quotient(const Graph& g, const Partition& p);

/// Connected components, ordered by minimum vertex.
Partition components(const Graph& g);
bool is_connected(const Graph& g);

/// 2-coloring (sides 0/1) with no monochromatic edge, if one exists. The
/// lowest vertex of every component gets side 0.
std::optional<std::vector<int>> is_bipartite(const Graph& g);

/// Disjoint union of G[V_i] over the blocks of P, as a spanning subgraph of G.
SpanningSubgraph union_of_induced(const Graph& g, const Partition& p);

}  // namespace dcover
