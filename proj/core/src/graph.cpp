#include "dcover/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "dcover/errors.hpp"

namespace dcover {

namespace {

// Messages number vertices from 1, as the file formats do.
std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + ")";
}

}  // namespace

Graph::Graph() : Graph(0) {}

Graph::Graph(int vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  auto data = std::make_shared<Data>();
  data->n = vertex_count;
  for (const Edge& e : edges) {
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u + 1));
    if (e.u < 0 || e.v >= vertex_count) throw GraphError("edge " + edge_str(e) + " out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw GraphError("duplicate edge " + edge_str(*dup));
  }
  data->edges = std::move(edges);

  const auto n = static_cast<std::size_t>(vertex_count);
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : data->edges) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  data->offsets.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) data->offsets[v + 1] = data->offsets[v] + deg[v];
  data->adjacency.resize(data->offsets[n]);
  data->adjacency_edge.resize(data->offsets[n]);
  std::vector<std::size_t> fill(data->offsets.begin(), data->offsets.end() - 1);
  // Lower neighbours first, then higher: both runs are already sorted.
  for (std::size_t i = 0; i < data->edges.size(); ++i) {
    const Edge& e = data->edges[i];
    auto& slot_v = fill[static_cast<std::size_t>(e.v)];
    data->adjacency[slot_v] = e.u;
    data->adjacency_edge[slot_v] = i;
    ++slot_v;
  }
  for (std::size_t i = 0; i < data->edges.size(); ++i) {
    const Edge& e = data->edges[i];
    auto& slot_u = fill[static_cast<std::size_t>(e.u)];
    data->adjacency[slot_u] = e.v;
    data->adjacency_edge[slot_u] = i;
    ++slot_u;
  }
  data_ = std::move(data);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  const auto i = static_cast<std::size_t>(v);
  return std::span<const Vertex>(data_->adjacency).subspan(data_->offsets[i],
                                                           data_->offsets[i + 1] - data_->offsets[i]);
}

std::span<const std::size_t> Graph::incident_edges(Vertex v) const {
  const auto i = static_cast<std::size_t>(v);
  return std::span<const std::size_t>(data_->adjacency_edge)
      .subspan(data_->offsets[i], data_->offsets[i + 1] - data_->offsets[i]);
}

bool Graph::adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b || !contains_vertex(a) || !contains_vertex(b)) return std::nullopt;
  const Edge key(a, b);
  auto it = std::lower_bound(data_->edges.begin(), data_->edges.end(), key);
  if (it == data_->edges.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - data_->edges.begin());
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->n == b.data_->n && a.data_->edges == b.data_->edges;
}

// ---------------------------------------------------------------------------

VertexSubset::VertexSubset(int vertex_count, std::span<const Vertex> members)
    : VertexSubset(vertex_count) {
  for (Vertex v : members) {
    if (v < 0 || v >= vertex_count) throw GraphError("vertex " + std::to_string(v + 1) + " out of range");
    insert(v);
  }
}

VertexSubset VertexSubset::from_bits(int vertex_count, std::uint64_t bits) {
  VertexSubset s(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    if ((bits >> v) & 1U) s.insert(v);
  }
  return s;
}

std::size_t VertexSubset::size() const {
  return static_cast<std::size_t>(std::count(in_.begin(), in_.end(), true));
}

std::vector<Vertex> VertexSubset::members() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < in_.size(); ++v) {
    if (in_[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

VertexSubset VertexSubset::complement() const {
  VertexSubset c = *this;
  c.in_.flip();
  return c;
}

VertexSubset VertexSubset::symmetric_difference(const VertexSubset& other) const {
  if (other.in_.size() != in_.size()) throw GraphError("vertex subsets over different universes");
  VertexSubset out(universe_size());
  for (std::size_t v = 0; v < in_.size(); ++v) out.in_[v] = in_[v] != other.in_[v];
  return out;
}

// ---------------------------------------------------------------------------

SpanningSubgraph::SpanningSubgraph(Graph parent, std::vector<bool> mask)
    : parent_(std::move(parent)), mask_(std::move(mask)) {
  if (mask_.size() != parent_.edge_count()) throw GraphError("edge mask size does not match parent");
}

SpanningSubgraph SpanningSubgraph::from_edges(Graph parent, std::span<const Edge> edges) {
  std::vector<bool> mask(parent.edge_count(), false);
  for (const Edge& e : edges) {
    auto idx = parent.edge_index(e.u, e.v);
    if (!idx) throw MismatchError("edge " + edge_str(e) + " is not an edge of the parent graph");
    mask[*idx] = true;
  }
  return SpanningSubgraph(std::move(parent), std::move(mask));
}

SpanningSubgraph SpanningSubgraph::from_bits(Graph parent, std::uint64_t bits) {
  if (parent.edge_count() > 64) throw GraphError("bit encoding needs at most 64 edges");
  std::vector<bool> mask(parent.edge_count());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = (bits >> i) & 1U;
  return SpanningSubgraph(std::move(parent), std::move(mask));
}

SpanningSubgraph SpanningSubgraph::whole(Graph parent) {
  std::vector<bool> mask(parent.edge_count(), true);
  return SpanningSubgraph(std::move(parent), std::move(mask));
}

SpanningSubgraph SpanningSubgraph::null(Graph parent) {
  std::vector<bool> mask(parent.edge_count(), false);
  return SpanningSubgraph(std::move(parent), std::move(mask));
}

bool SpanningSubgraph::adjacent(Vertex a, Vertex b) const {
  auto idx = parent_.edge_index(a, b);
  return idx && mask_[*idx];
}

std::size_t SpanningSubgraph::edge_count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<Edge> SpanningSubgraph::edge_list() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) out.push_back(parent_.edge(i));
  }
  return out;
}

Graph SpanningSubgraph::as_graph() const { return Graph(parent_.vertex_count(), edge_list()); }

std::uint64_t SpanningSubgraph::bits() const {
  if (mask_.size() > 64) throw GraphError("bit encoding needs at most 64 edges");
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) b |= std::uint64_t{1} << i;
  }
  return b;
}

bool operator==(const SpanningSubgraph& a, const SpanningSubgraph& b) {
  return a.mask_ == b.mask_ && a.parent_ == b.parent_;
}

// ---------------------------------------------------------------------------

Partition::Partition(int vertex_count, std::vector<std::vector<Vertex>> blocks)
    : blocks_(std::move(blocks)) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  block_of_.assign(static_cast<std::size_t>(vertex_count), unassigned);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto& block = blocks_[b];
    if (block.empty()) throw GraphError("partition has an empty block");
    std::sort(block.begin(), block.end());
    for (Vertex v : block) {
      if (v < 0 || v >= vertex_count) throw GraphError("partition vertex " + std::to_string(v + 1) + " out of range");
      auto& slot = block_of_[static_cast<std::size_t>(v)];
      if (slot != unassigned) throw GraphError("vertex " + std::to_string(v + 1) + " in two blocks");
      slot = b;
    }
  }
  for (std::size_t v = 0; v < block_of_.size(); ++v) {
    if (block_of_[v] == unassigned) throw GraphError("vertex " + std::to_string(v + 1) + " not covered by partition");
  }
}

Partition Partition::from_labels(std::span<const int> labels) {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::pair<int, std::size_t>> seen;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == labels[v]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[v], blocks.size());
      blocks.push_back({static_cast<Vertex>(v)});
    } else {
      blocks[it->second].push_back(static_cast<Vertex>(v));
    }
  }
  return Partition(static_cast<int>(labels.size()), std::move(blocks));
}

// ---------------------------------------------------------------------------

SpanningSubgraph complement_within(const SpanningSubgraph& h) {
  std::vector<bool> mask = h.mask();
  mask.flip();
  return SpanningSubgraph(h.parent(), std::move(mask));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  return induced_subgraph(g, VertexSubset(g.vertex_count(), subset));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& subset) {
  if (subset.universe_size() != g.vertex_count()) throw GraphError("vertex subset over a different universe");
  InducedSubgraph out;
  out.original = subset.members();
  std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    relabel[static_cast<std::size_t>(out.original[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = relabel[static_cast<std::size_t>(e.u)];
    const int b = relabel[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  out.graph = Graph(static_cast<int>(out.original.size()), std::move(edges));
  return out;
}

Graph quotient(const Graph& g, const Partition& p) {
  if (p.vertex_count() != g.vertex_count()) throw GraphError("partition does not match graph");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const auto a = p.block_of(e.u);
    const auto b = p.block_of(e.v);
    if (a != b) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(static_cast<int>(p.size()), std::move(edges));
}

Partition components(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> label(n, -1);
  std::vector<std::vector<Vertex>> blocks;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(blocks.size());
    blocks.emplace_back();
    std::deque<Vertex> queue{static_cast<Vertex>(s)};
    label[s] = id;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      blocks.back().push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = id;
          queue.push_back(w);
        }
      }
    }
  }
  return Partition(g.vertex_count(), std::move(blocks));
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> side(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{static_cast<Vertex>(s)};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

SpanningSubgraph union_of_induced(const Graph& g, const Partition& p) {
  if (p.vertex_count() != g.vertex_count()) throw GraphError("partition does not match graph");
  std::vector<bool> mask(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    mask[i] = p.block_of(e.u) == p.block_of(e.v);
  }
  return SpanningSubgraph(g, std::move(mask));
}

}  // namespace dcover
