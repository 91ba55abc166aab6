#include "dcover/switching.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>

#include "dcover/errors.hpp"

namespace dcover {

namespace {

void require_universe(const Graph& g, const VertexSubset& x) {
  if (x.universe_size() != g.vertex_count()) {
    throw GraphError("switching set over " + std::to_string(x.universe_size()) + " vertices, graph has " +
                     std::to_string(g.vertex_count()));
  }
}

/// Vertices other than the lowest one of each component. Switching by a
/// whole component changes nothing, so subsets of these reach every H_X.
std::vector<Vertex> free_vertices(const Graph& g) {
  std::vector<Vertex> out;
  const Partition parts = components(g);
  for (const auto& block : parts.blocks()) out.insert(out.end(), block.begin() + 1, block.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SpanningSubgraph seidel_switch(const SpanningSubgraph& h, const VertexSubset& x) {
  const Graph& g = h.parent();
  require_universe(g, x);
  std::vector<bool> mask(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    const bool crossing = x.contains(e.u) != x.contains(e.v);
    mask[i] = crossing ? !h.has_edge(i) : h.has_edge(i);
  }
  return SpanningSubgraph(g, std::move(mask));
}

Signing switch_signing(const Signing& phi, const VertexSubset& x) {
  const Graph& g = phi.base();
  require_universe(g, x);
  std::vector<Sign> signs = phi.signs();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (x.contains(e.u) != x.contains(e.v)) signs[i] = signs[i] * Sign::minus;
  }
  return Signing(g, std::move(signs));
}

SwitchWitness::SwitchWitness(const SpanningSubgraph& source, const SpanningSubgraph& target, VertexSubset x)
    : subset_(std::move(x)) {
  if (!(seidel_switch(source, subset_) == target)) throw PreconditionError("witness does not switch source to target");
}

std::optional<SwitchWitness> are_switching_equivalent(const SpanningSubgraph& h, const SpanningSubgraph& k) {
  const Graph& g = h.parent();
  if (!(g == k.parent())) throw MismatchError("spanning subgraphs of different graphs");

  const auto n = static_cast<std::size_t>(g.vertex_count());
  // side[v] = 0 for s(v) = +1, 1 for s(v) = -1.
  std::vector<int> side(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::deque<Vertex> queue{static_cast<Vertex>(root)};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      const auto nbrs = g.neighbors(v);
      const auto inc = g.incident_edges(v);
      for (std::size_t j = 0; j < nbrs.size(); ++j) {
        // s(u) s(v) = -1 exactly on edges where H and K disagree.
        const int flip = h.has_edge(inc[j]) != k.has_edge(inc[j]) ? 1 : 0;
        const int want = side[static_cast<std::size_t>(v)] ^ flip;
        auto& sw = side[static_cast<std::size_t>(nbrs[j])];
        if (sw < 0) {
          sw = want;
          queue.push_back(nbrs[j]);
        } else if (sw != want) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSubset x(g.vertex_count());
  for (std::size_t v = 0; v < n; ++v) {
    if (side[v] == 1) x.insert(static_cast<Vertex>(v));
  }
  return SwitchWitness(h, k, std::move(x));
}

std::vector<SpanningSubgraph> enumerate_switching_class(const SpanningSubgraph& h, int vertex_limit) {
  const Graph& g = h.parent();
  if (g.vertex_count() > vertex_limit) {
    throw SizeLimitError("switching class enumeration limited to " + std::to_string(vertex_limit) + " vertices");
  }
  const auto free = free_vertices(g);
  std::set<std::vector<bool>> seen;
  const std::uint64_t count = std::uint64_t{1} << free.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    VertexSubset x(g.vertex_count());
    for (std::size_t i = 0; i < free.size(); ++i) {
      if ((bits >> i) & 1U) x.insert(free[i]);
    }
    seen.insert(seidel_switch(h, x).mask());
  }
  std::vector<SpanningSubgraph> out;
  out.reserve(seen.size());
  for (const auto& mask : seen) out.emplace_back(g, mask);
  return out;
}

std::size_t count_cover_classes(const Graph& g, int vertex_limit, std::size_t edge_limit) {
  if (g.vertex_count() > vertex_limit) {
    throw SizeLimitError("class counting limited to " + std::to_string(vertex_limit) + " vertices");
  }
  if (g.edge_count() > edge_limit || g.edge_count() > 62) {
    throw SizeLimitError("class counting limited to " + std::to_string(edge_limit) + " edges");
  }
  // Switching at v toggles exactly the edges incident to v.
  const auto free = free_vertices(g);
  std::vector<std::uint64_t> star;
  for (Vertex v : free) {
    std::uint64_t m = 0;
    for (std::size_t e : g.incident_edges(v)) m |= std::uint64_t{1} << e;
    star.push_back(m);
  }
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  std::vector<bool> visited(total, false);
  std::size_t classes = 0;
  for (std::uint64_t h = 0; h < total; ++h) {
    if (visited[h]) continue;
    ++classes;
    const std::uint64_t orbit = std::uint64_t{1} << free.size();
    for (std::uint64_t bits = 0; bits < orbit; ++bits) {
      std::uint64_t image = h;
      for (std::size_t i = 0; i < free.size(); ++i) {
        if ((bits >> i) & 1U) image ^= star[i];
      }
      visited[image] = true;
    }
  }
  return classes;
}

}  // namespace dcover
