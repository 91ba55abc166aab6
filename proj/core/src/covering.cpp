#include "dcover/covering.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "dcover/errors.hpp"

namespace dcover {

Signing::Signing(Graph base, std::vector<Sign> signs) : base_(std::move(base)), signs_(std::move(signs)) {
  if (signs_.size() != base_.edge_count()) throw GraphError("signing must assign every edge exactly once");
}

Signing Signing::all(Graph base, Sign s) {
  std::vector<Sign> signs(base.edge_count(), s);
  return Signing(std::move(base), std::move(signs));
}

Sign Signing::sign(Vertex a, Vertex b) const {
  auto idx = base_.edge_index(a, b);
  if (!idx) throw GraphError("not an edge of the base graph");
  return signs_[*idx];
}

SpanningSubgraph Signing::support() const {
  std::vector<bool> mask(signs_.size());
  for (std::size_t i = 0; i < signs_.size(); ++i) mask[i] = signs_[i] == Sign::minus;
  return SpanningSubgraph(base_, std::move(mask));
}

SpanningSubgraph Signing::cosupport() const {
  std::vector<bool> mask(signs_.size());
  for (std::size_t i = 0; i < signs_.size(); ++i) mask[i] = signs_[i] == Sign::plus;
  return SpanningSubgraph(base_, std::move(mask));
}

Signing signing_from_cosupport(const SpanningSubgraph& h) {
  std::vector<Sign> signs(h.parent().edge_count());
  for (std::size_t i = 0; i < signs.size(); ++i) signs[i] = h.has_edge(i) ? Sign::plus : Sign::minus;
  return Signing(h.parent(), std::move(signs));
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int j : images_) {
    if (j < 0 || j >= size() || hit[static_cast<std::size_t>(j)]) {
      throw VoltageError("not a permutation of 1.." + std::to_string(size()));
    }
    hit[static_cast<std::size_t>(j)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) images[static_cast<std::size_t>(j)] = j;
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> zero_based(images.begin(), images.end());
  for (int& j : zero_based) --j;
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images = identity(n).images();
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i] - 1;
      const int to = cycle[(i + 1) % cycle.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n) throw VoltageError("cycle entry out of range");
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int j = 0; j < size(); ++j) {
    if (images_[static_cast<std::size_t>(j)] != j) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int j = 0; j < size(); ++j) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(j)])] = j;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw VoltageError("composing permutations of different degree");
  std::vector<int> out(images_.size());
  for (int j = 0; j < size(); ++j) out[static_cast<std::size_t>(j)] = (*this)(other(j));
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (j) out << ',';
    out << images_[j] + 1;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

PermutationVoltage::PermutationVoltage(Graph base, int fold, std::vector<Permutation> canonical)
    : base_(std::move(base)), fold_(fold), perms_(std::move(canonical)) {
  if (fold_ < 1) throw VoltageError("fold must be positive");
  if (perms_.size() != base_.edge_count()) throw VoltageError("voltage must assign every edge exactly once");
  inverses_.reserve(perms_.size());
  for (const auto& p : perms_) {
    if (p.size() != fold_) throw VoltageError("permutation degree differs from fold " + std::to_string(fold_));
    inverses_.push_back(p.inverse());
  }
}

PermutationVoltage PermutationVoltage::trivial(Graph base, int fold) {
  std::vector<Permutation> perms(base.edge_count(), Permutation::identity(fold));
  return PermutationVoltage(std::move(base), fold, std::move(perms));
}

PermutationVoltage PermutationVoltage::from_directed(Graph base, int fold, std::span<const DirectedEntry> entries) {
  std::vector<std::optional<Permutation>> forward(base.edge_count());
  std::vector<std::optional<Permutation>> backward(base.edge_count());
  for (const auto& entry : entries) {
    auto idx = base.edge_index(entry.from, entry.to);
    if (!idx) {
      throw VoltageError("voltage on (" + std::to_string(entry.from + 1) + "," + std::to_string(entry.to + 1) +
                         ") which is not an edge");
    }
    if (entry.perm.size() != fold) throw VoltageError("permutation degree differs from fold " + std::to_string(fold));
    auto& slot = entry.from < entry.to ? forward[*idx] : backward[*idx];
    if (slot) throw VoltageError("directed edge assigned twice");
    slot = entry.perm;
  }
  std::vector<Permutation> perms;
  perms.reserve(base.edge_count());
  for (std::size_t i = 0; i < base.edge_count(); ++i) {
    if (forward[i] && backward[i]) {
      if (backward[i]->compose(*forward[i]) != Permutation::identity(fold)) {
        const Edge& e = base.edge(i);
        throw VoltageError("phi(e^-1) != phi(e)^-1 on edge (" + std::to_string(e.u + 1) + "," +
                           std::to_string(e.v + 1) + ")");
      }
      perms.push_back(*forward[i]);
    } else if (forward[i]) {
      perms.push_back(*forward[i]);
    } else if (backward[i]) {
      perms.push_back(backward[i]->inverse());
    } else {
      perms.push_back(Permutation::identity(fold));
    }
  }
  return PermutationVoltage(std::move(base), fold, std::move(perms));
}

PermutationVoltage PermutationVoltage::from_signing(const Signing& s) {
  const Permutation id = Permutation::identity(2);
  const Permutation swap({1, 0});
  std::vector<Permutation> perms;
  perms.reserve(s.base().edge_count());
  for (Sign g : s.signs()) perms.push_back(g == Sign::plus ? id : swap);
  return PermutationVoltage(s.base(), 2, std::move(perms));
}

Permutation PermutationVoltage::value(Vertex from, Vertex to) const {
  auto idx = base_.edge_index(from, to);
  if (!idx) throw GraphError("not an edge of the base graph");
  return from < to ? perms_[*idx] : inverses_[*idx];
}

int PermutationVoltage::apply(Vertex from, Vertex to, int sheet) const {
  auto idx = base_.edge_index(from, to);
  if (!idx) throw GraphError("not an edge of the base graph");
  return from < to ? perms_[*idx](sheet) : inverses_[*idx](sheet);
}

SpanningSubgraph PermutationVoltage::cosupport() const {
  std::vector<bool> mask(perms_.size());
  for (std::size_t i = 0; i < perms_.size(); ++i) mask[i] = perms_[i].is_identity();
  return SpanningSubgraph(base_, std::move(mask));
}

// ---------------------------------------------------------------------------

CoveringGraph derive_double_cover(const Signing& phi) {
  const Graph& g = phi.base();
  std::vector<Edge> edges;
  edges.reserve(2 * g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    const Sign s = phi.sign(i);
    edges.emplace_back(double_cover_index(e.u, Sign::plus), double_cover_index(e.v, s));
    edges.emplace_back(double_cover_index(e.u, Sign::minus), double_cover_index(e.v, s * Sign::minus));
  }
  CoveringGraph c;
  c.graph = Graph(2 * g.vertex_count(), std::move(edges));
  c.base = g;
  c.fold = 2;
  c.fiber.reserve(static_cast<std::size_t>(2 * g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    c.fiber.push_back({v, 0});
    c.fiber.push_back({v, 1});
  }
  return c;
}

CoveringGraph derive_nfold_cover(const PermutationVoltage& phi) {
  const Graph& g = phi.base();
  const int n = phi.fold();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    const Permutation& p = phi.canonical(i);
    for (int j = 0; j < n; ++j) edges.emplace_back(n * e.u + j, n * e.v + p(j));
  }
  CoveringGraph c;
  c.graph = Graph(n * g.vertex_count(), std::move(edges));
  c.base = g;
  c.fold = n;
  c.fiber.reserve(static_cast<std::size_t>(n * g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int j = 0; j < n; ++j) c.fiber.push_back({v, j});
  }
  return c;
}

CoveringReport verify_covering(const CoveringGraph& c) {
  CoveringReport report;
  if (c.fiber.size() != static_cast<std::size_t>(c.graph.vertex_count())) {
    report.message = "fibre map does not label every covering vertex";
    return report;
  }
  std::vector<int> fibre_size(static_cast<std::size_t>(c.base.vertex_count()), 0);
  for (const auto& label : c.fiber) {
    if (!c.base.contains_vertex(label.base_vertex)) {
      report.message = "projection leaves the base vertex set";
      return report;
    }
    ++fibre_size[static_cast<std::size_t>(label.base_vertex)];
  }
  for (std::size_t v = 0; v < fibre_size.size(); ++v) {
    if (fibre_size[v] != c.fold) {
      report.message = "base vertex " + std::to_string(v + 1) + " has " + std::to_string(fibre_size[v]) +
                       " preimages, expected " + std::to_string(c.fold);
      return report;
    }
  }
  std::vector<Vertex> image;
  for (Vertex x = 0; x < c.graph.vertex_count(); ++x) {
    image.clear();
    for (Vertex y : c.graph.neighbors(x)) image.push_back(c.projection(y));
    std::sort(image.begin(), image.end());
    const auto expected = c.base.neighbors(c.projection(x));
    if (!std::equal(image.begin(), image.end(), expected.begin(), expected.end())) report.violations.push_back(x);
  }
  report.valid = report.violations.empty();
  if (!report.valid) {
    report.message = "local bijectivity fails at covering vertex " + std::to_string(report.violations.front() + 1);
  }
  return report;
}

bool z2_cycle_parity_check(const Signing& phi) {
  const Graph& g = phi.base();
  if (g.vertex_count() == 0 || !is_connected(g)) throw PreconditionError("cycle parity check needs a connected base");
  if (is_bipartite(g)) throw PreconditionError("cycle parity check needs a non-bipartite base");

  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> depth(n, -1);
  std::vector<Sign> potential(n, Sign::plus);
  std::vector<bool> tree_edge(g.edge_count(), false);
  std::deque<Vertex> queue{0};
  depth[0] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    const auto nbrs = g.neighbors(v);
    const auto inc = g.incident_edges(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const auto w = static_cast<std::size_t>(nbrs[k]);
      if (depth[w] >= 0) continue;
      depth[w] = depth[static_cast<std::size_t>(v)] + 1;
      potential[w] = potential[static_cast<std::size_t>(v)] * phi.sign(inc[k]);
      tree_edge[inc[k]] = true;
      queue.push_back(nbrs[k]);
    }
  }
  // Fundamental cycle of a non-tree edge uv: sign pot(u) pot(v) phi(uv),
  // length parity depth(u) + depth(v) + 1.
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (tree_edge[i]) continue;
    const auto u = static_cast<std::size_t>(g.edge(i).u);
    const auto v = static_cast<std::size_t>(g.edge(i).v);
    const bool positive = (potential[u] * potential[v] * phi.sign(i)) == Sign::plus;
    const bool even = (depth[u] + depth[v] + 1) % 2 == 0;
    if (positive != even) return false;
  }
  return true;
}

std::vector<PermutationVoltage> voltages_up_to_relabeling(const Graph& base, int fold, std::size_t limit) {
  if (fold < 1) throw VoltageError("fold must be positive");
  std::vector<Permutation> perms;
  std::vector<int> images(static_cast<std::size_t>(fold));
  for (int j = 0; j < fold; ++j) images[static_cast<std::size_t>(j)] = j;
  do {
    perms.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  const std::size_t m = base.edge_count();
  double total = 1;
  for (std::size_t e = 0; e < m; ++e) total *= static_cast<double>(perms.size());
  if (total > static_cast<double>(limit)) {
    throw SizeLimitError("voltage enumeration limited to " + std::to_string(limit) + " assignments");
  }
  // conj[s][p] = index of s p s^-1; perms are in lexicographic order, so
  // comparing index tuples compares the assignments lexicographically.
  std::vector<std::vector<std::size_t>> conj(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t s = 0; s < perms.size(); ++s) {
    for (std::size_t p = 0; p < perms.size(); ++p) {
      const Permutation c = perms[s].compose(perms[p]).compose(perms[s].inverse());
      conj[s][p] = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  std::vector<PermutationVoltage> out;
  std::vector<std::size_t> digits(m, 0);
  while (true) {
    bool least = true;
    for (std::size_t s = 1; s < perms.size() && least; ++s) {
      for (std::size_t e = 0; e < m; ++e) {
        const std::size_t image = conj[s][digits[e]];
        if (image != digits[e]) {
          least = image > digits[e];
          break;
        }
      }
    }
    if (least) {
      std::vector<Permutation> assignment;
      for (std::size_t d : digits) assignment.push_back(perms[d]);
      out.emplace_back(base, fold, std::move(assignment));
    }
    std::size_t e = m;
    while (e > 0 && ++digits[e - 1] == perms.size()) digits[--e] = 0;
    if (e == 0) break;
  }
  return out;
}

}  // namespace dcover
