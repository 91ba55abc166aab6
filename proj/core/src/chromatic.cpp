#include "dcover/chromatic.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>

#include "dcover/errors.hpp"

namespace dcover {

int Coloring::used_colors() const {
  std::set<int> distinct(colors.begin(), colors.end());
  return static_cast<int>(distinct.size());
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  for (int x : c.colors) {
    if (x < 1 || x > c.palette_size) return false;
  }
  for (const Edge& e : g.edges()) {
    if (c[e.u] == c[e.v]) return false;
  }
  return true;
}

bool is_proper(const SpanningSubgraph& h, const Coloring& c) {
  if (c.size() != static_cast<std::size_t>(h.vertex_count())) return false;
  for (int x : c.colors) {
    if (x < 1 || x > c.palette_size) return false;
  }
  const Graph& g = h.parent();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (h.has_edge(i) && c[g.edge(i).u] == c[g.edge(i).v]) return false;
  }
  return true;
}

namespace {

/// One connected component relabelled to 0..n-1.
struct LocalGraph {
  std::vector<std::vector<int>> adj;
  std::vector<Vertex> original;

  int size() const { return static_cast<int>(adj.size()); }
};

LocalGraph local_component(const Graph& g, const std::vector<Vertex>& block) {
  LocalGraph lg;
  lg.original = block;
  lg.adj.resize(block.size());
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < block.size(); ++i) local[static_cast<std::size_t>(block[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (Vertex w : g.neighbors(block[i])) lg.adj[i].push_back(local[static_cast<std::size_t>(w)]);
  }
  return lg;
}

std::vector<int> clique_of(const LocalGraph& g) {
  const int n = g.size();
  std::vector<int> by_degree(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_degree[static_cast<std::size_t>(v)] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    return g.adj[static_cast<std::size_t>(a)].size() > g.adj[static_cast<std::size_t>(b)].size();
  });
  std::vector<std::vector<bool>> adjacent(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int v = 0; v < n; ++v) {
    for (int w : g.adj[static_cast<std::size_t>(v)]) adjacent[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = true;
  }
  std::vector<int> best;
  for (int s : by_degree) {
    if (g.adj[static_cast<std::size_t>(s)].size() + 1 <= best.size()) break;
    std::vector<int> clique{s};
    for (int w : by_degree) {
      if (w == s || !adjacent[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)]) continue;
      const bool joins = std::all_of(clique.begin(), clique.end(), [&](int c) {
        return adjacent[static_cast<std::size_t>(c)][static_cast<std::size_t>(w)];
      });
      if (joins) clique.push_back(w);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  return best;
}

/// DSATUR bookkeeping shared by the greedy and exact colorers: color per
/// vertex and, per vertex and color, how many neighbours carry that color.
class SaturationState {
 public:
  SaturationState(const LocalGraph& g, int colors)
      : g_(g), cap_(colors), color_(static_cast<std::size_t>(g.size()), -1),
        count_(static_cast<std::size_t>(g.size()) * static_cast<std::size_t>(colors), 0),
        saturation_(static_cast<std::size_t>(g.size()), 0) {}

  int color(int v) const { return color_[static_cast<std::size_t>(v)]; }
  bool blocked(int v, int c) const { return count_[index(v, c)] > 0; }

  void assign(int v, int c) {
    color_[static_cast<std::size_t>(v)] = c;
    for (int w : g_.adj[static_cast<std::size_t>(v)]) {
      if (count_[index(w, c)]++ == 0) ++saturation_[static_cast<std::size_t>(w)];
    }
  }

  void unassign(int v) {
    const int c = color_[static_cast<std::size_t>(v)];
    color_[static_cast<std::size_t>(v)] = -1;
    for (int w : g_.adj[static_cast<std::size_t>(v)]) {
      if (--count_[index(w, c)] == 0) --saturation_[static_cast<std::size_t>(w)];
    }
  }

  /// Uncolored vertex of maximum saturation; ties by degree, then index.
  int select() const {
    int best = -1;
    for (int v = 0; v < g_.size(); ++v) {
      if (color_[static_cast<std::size_t>(v)] >= 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      const int sv = saturation_[static_cast<std::size_t>(v)];
      const int sb = saturation_[static_cast<std::size_t>(best)];
      if (sv > sb || (sv == sb && g_.adj[static_cast<std::size_t>(v)].size() > g_.adj[static_cast<std::size_t>(best)].size())) {
        best = v;
      }
    }
    return best;
  }

  const std::vector<int>& colors() const { return color_; }

 private:
  std::size_t index(int v, int c) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(cap_) + static_cast<std::size_t>(c);
  }

  const LocalGraph& g_;
  int cap_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> saturation_;
};

std::vector<int> greedy_local(const LocalGraph& g) {
  SaturationState state(g, g.size() + 1);
  for (int step = 0; step < g.size(); ++step) {
    const int v = state.select();
    int c = 0;
    while (state.blocked(v, c)) ++c;
    state.assign(v, c);
  }
  return state.colors();
}

int count_colors(const std::vector<int>& colors) {
  int used = 0;
  for (int c : colors) used = std::max(used, c + 1);
  return used;
}

/// Exact DSATUR branch and bound on one component: looks for colorings with
/// fewer than `bound` colors, stopping once one with `stop_at` colors (or,
/// with first_only, any one) is found.
class DsaturSearch {
 public:
  DsaturSearch(const LocalGraph& g, int bound) : g_(g), state_(g, std::max(bound, 1)), best_(bound) {}

  std::optional<std::vector<int>> run(const std::vector<int>& clique, int stop_at, bool first_only) {
    stop_at_ = stop_at;
    first_only_ = first_only;
    const int q = static_cast<int>(clique.size());
    if (q >= best_) return std::nullopt;
    for (int i = 0; i < q; ++i) state_.assign(clique[static_cast<std::size_t>(i)], i);
    search(q, q);
    if (best_colors_.empty() && g_.size() > 0) return std::nullopt;
    return best_colors_;
  }

 private:
  void search(int colored, int used) {
    if (colored == g_.size()) {
      best_ = used;
      best_colors_ = state_.colors();
      if (first_only_ || used <= stop_at_) stop_ = true;
      return;
    }
    const int v = state_.select();
    for (int c = 0; c < used; ++c) {
      if (state_.blocked(v, c)) continue;
      state_.assign(v, c);
      search(colored + 1, used);
      state_.unassign(v);
      if (stop_ || used >= best_) return;
    }
    if (used + 1 < best_) {
      state_.assign(v, used);
      search(colored + 1, used + 1);
      state_.unassign(v);
    }
  }

  const LocalGraph& g_;
  SaturationState state_;
  int best_;
  int stop_at_ = 0;
  bool first_only_ = false;
  bool stop_ = false;
  std::vector<int> best_colors_;
};

/// Optimal 0-based coloring of one component.
std::vector<int> solve_component(const LocalGraph& g) {
  std::vector<int> greedy = greedy_local(g);
  const int ub = count_colors(greedy);
  const auto clique = clique_of(g);
  const int lb = static_cast<int>(clique.size());
  if (ub <= lb) return greedy;
  DsaturSearch search(g, ub);
  if (auto better = search.run(clique, lb, false)) return *better;
  return greedy;
}

void guard_size(const Graph& g, const SolverOptions& options) {
  if (!options.allow_large && g.vertex_count() > options.exact_vertex_limit) {
    throw SizeLimitError("exact coloring refused: " + std::to_string(g.vertex_count()) + " vertices exceeds limit " +
                             std::to_string(options.exact_vertex_limit),
                         greedy_coloring(g).palette_size);
  }
}

}  // namespace

Coloring greedy_coloring(const Graph& g) {
  std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
  int palette = 0;
  const Partition parts = components(g);
  for (const auto& block : parts.blocks()) {
    const LocalGraph lg = local_component(g, block);
    const auto local = greedy_local(lg);
    for (std::size_t i = 0; i < block.size(); ++i) colors[static_cast<std::size_t>(block[i])] = local[i] + 1;
    palette = std::max(palette, count_colors(local));
  }
  return Coloring(std::move(colors), palette);
}

std::vector<Vertex> greedy_clique(const Graph& g) {
  std::vector<Vertex> best;
  const Partition parts = components(g);
  for (const auto& block : parts.blocks()) {
    const LocalGraph lg = local_component(g, block);
    const auto local = clique_of(lg);
    if (local.size() > best.size()) {
      best.clear();
      for (int v : local) best.push_back(block[static_cast<std::size_t>(v)]);
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

ColoringResult optimal_coloring(const Graph& g, const SolverOptions& options) {
  guard_size(g, options);
  ColoringResult result;
  result.witness.colors.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  const Partition parts = components(g);
  for (const auto& block : parts.blocks()) {
    const LocalGraph lg = local_component(g, block);
    const auto local = solve_component(lg);
    for (std::size_t i = 0; i < block.size(); ++i) result.witness.colors[static_cast<std::size_t>(block[i])] = local[i] + 1;
    result.chromatic_number = std::max(result.chromatic_number, count_colors(local));
  }
  result.witness.palette_size = result.chromatic_number;
  return result;
}

int chromatic_number(const Graph& g, const SolverOptions& options) { return optimal_coloring(g, options).chromatic_number; }

std::optional<Coloring> is_k_colorable(const Graph& g, int k, const SolverOptions& options) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  guard_size(g, options);
  std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
  const Partition parts = components(g);
  for (const auto& block : parts.blocks()) {
    const LocalGraph lg = local_component(g, block);
    std::vector<int> local = greedy_local(lg);
    if (count_colors(local) > k) {
      DsaturSearch search(lg, k + 1);
      auto found = search.run(clique_of(lg), k, true);
      if (!found) return std::nullopt;
      local = std::move(*found);
    }
    for (std::size_t i = 0; i < block.size(); ++i) colors[static_cast<std::size_t>(block[i])] = local[i] + 1;
  }
  return Coloring(std::move(colors), k);
}

ColoringEnumeration enumerate_colorings(const Graph& g, int k, std::size_t limit) {
  ColoringEnumeration out;
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  bool truncated = false;
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (truncated) return;
    if (v == n) {
      if (out.colorings.size() >= limit) {
        truncated = true;
        return;
      }
      out.colorings.emplace_back(color, k);
      return;
    }
    const int top = std::min(used + 1, k);
    for (int c = 1; c <= top; ++c) {
      bool ok = true;
      for (Vertex w : g.neighbors(v)) {
        if (w < v && color[static_cast<std::size_t>(w)] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      self(self, v + 1, std::max(used, c));
      if (truncated) return;
    }
  };
  if (k > 0 || n == 0) rec(rec, 0, 0);
  out.complete = !truncated;
  return out;
}

// ---------------------------------------------------------------------------

CompatibilityReport check_compatible(const SpanningSubgraph& h, const Coloring& f, const Coloring& g) {
  if (!is_proper(h, f)) throw ImproperColoringError("f is not a proper coloring of H");
  if (!is_proper(h, g)) throw ImproperColoringError("g is not a proper coloring of H");
  const Graph& parent = h.parent();
  for (std::size_t i = 0; i < parent.edge_count(); ++i) {
    if (h.has_edge(i)) continue;
    const Edge& e = parent.edge(i);
    if (f[e.u] == g[e.v] || f[e.v] == g[e.u]) return {false, e};
  }
  return {true, std::nullopt};
}

CompatiblePair::CompatiblePair(SpanningSubgraph h, Coloring f, Coloring g)
    : h_(std::move(h)), f_(std::move(f)), g_(std::move(g)) {
  auto report = check_compatible(h_, f_, g_);
  if (!report.compatible) throw PreconditionError("colorings are not compatible");
}

namespace {

/// Joint backtracking over (f(v), g(v)) along a static vertex order.
class PairSearch {
 public:
  explicit PairSearch(const SpanningSubgraph& h) : n_(h.vertex_count()) {
    const Graph& g = h.parent();
    // Order: repeatedly take the vertex with most already-ordered
    // neighbours (ties: higher degree, lower index).
    std::vector<int> placed_nbrs(static_cast<std::size_t>(n_), 0);
    std::vector<bool> placed(static_cast<std::size_t>(n_), false);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        if (best < 0 || placed_nbrs[static_cast<std::size_t>(v)] > placed_nbrs[static_cast<std::size_t>(best)] ||
            (placed_nbrs[static_cast<std::size_t>(v)] == placed_nbrs[static_cast<std::size_t>(best)] &&
             g.degree(v) > g.degree(best))) {
          best = v;
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      order_.push_back(best);
      for (Vertex w : g.neighbors(best)) ++placed_nbrs[static_cast<std::size_t>(w)];
    }
    std::vector<int> position(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) position[static_cast<std::size_t>(order_[static_cast<std::size_t>(p)])] = p;
    same_.resize(static_cast<std::size_t>(n_));
    cross_.resize(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      const bool u_first = position[static_cast<std::size_t>(e.u)] < position[static_cast<std::size_t>(e.v)];
      const Vertex later = u_first ? e.v : e.u;
      const Vertex earlier = u_first ? e.u : e.v;
      (h.has_edge(i) ? same_ : cross_)[static_cast<std::size_t>(later)].push_back(earlier);
    }
    f_.assign(static_cast<std::size_t>(n_), 0);
    g_.assign(static_cast<std::size_t>(n_), 0);
  }

  bool run(int k) {
    k_ = k;
    return search(0, 0);
  }

  Coloring f() const { return to_coloring(f_); }
  Coloring g() const { return to_coloring(g_); }

 private:
  Coloring to_coloring(const std::vector<int>& c) const {
    std::vector<int> colors(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) colors[i] = c[i] + 1;
    return Coloring(std::move(colors), k_);
  }

  bool search(int p, int used_f) {
    if (p == n_) return true;
    const Vertex v = order_[static_cast<std::size_t>(p)];
    std::uint64_t forbid_f = 0;
    std::uint64_t forbid_g = 0;
    for (Vertex w : same_[static_cast<std::size_t>(v)]) {
      forbid_f |= std::uint64_t{1} << f_[static_cast<std::size_t>(w)];
      forbid_g |= std::uint64_t{1} << g_[static_cast<std::size_t>(w)];
    }
    for (Vertex w : cross_[static_cast<std::size_t>(v)]) {
      forbid_f |= std::uint64_t{1} << g_[static_cast<std::size_t>(w)];
      forbid_g |= std::uint64_t{1} << f_[static_cast<std::size_t>(w)];
    }
    const int top_f = std::min(used_f + 1, k_);
    for (int cf = 0; cf < top_f; ++cf) {
      if ((forbid_f >> cf) & 1U) continue;
      f_[static_cast<std::size_t>(v)] = cf;
      for (int cg = 0; cg < k_; ++cg) {
        if ((forbid_g >> cg) & 1U) continue;
        g_[static_cast<std::size_t>(v)] = cg;
        if (search(p + 1, std::max(used_f, cf + 1))) return true;
      }
    }
    return false;
  }

  int n_;
  int k_ = 0;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> same_;   // earlier H-neighbours
  std::vector<std::vector<Vertex>> cross_;  // earlier neighbours through E(G) - E(H)
  std::vector<int> f_;
  std::vector<int> g_;
};

void guard_pair_size(const SpanningSubgraph& h, const SolverOptions& options) {
  if (!options.allow_large && 2 * h.vertex_count() > options.exact_vertex_limit) {
    throw SizeLimitError("compatible pair search refused: 2|V| = " + std::to_string(2 * h.vertex_count()) +
                             " exceeds limit " + std::to_string(options.exact_vertex_limit),
                         greedy_coloring(h.parent()).palette_size);
  }
}

}  // namespace

std::optional<CompatiblePair> find_compatible_pair(const SpanningSubgraph& h, int k, const SolverOptions& options) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  if (k > 64) throw SizeLimitError("pair search supports at most 64 colors");
  guard_pair_size(h, options);
  if (h.vertex_count() == 0) return CompatiblePair(h, Coloring({}, k), Coloring({}, k));
  PairSearch search(h);
  if (!search.run(k)) return std::nullopt;
  return CompatiblePair(h, search.f(), search.g());
}

RelativeColoringResult chi_rel_direct_with_witness(const SpanningSubgraph& h, const SolverOptions& options) {
  guard_pair_size(h, options);
  const Graph& parent = h.parent();
  const int n = parent.vertex_count();
  if (n == 0) return {};
  if (parent.edge_count() == 0) {
    Coloring ones(std::vector<int>(static_cast<std::size_t>(n), 1), 1);
    return {1, ones, ones};
  }
  // (f, f) for any coloring f of G is compatible, so the greedy palette of G
  // is always reachable.
  const Coloring greedy = greedy_coloring(parent);
  const int lb = std::max<int>(2, static_cast<int>(greedy_clique(h.as_graph()).size()));
  PairSearch search(h);
  for (int k = lb; k < greedy.palette_size; ++k) {
    if (search.run(k)) return {k, search.f(), search.g()};
  }
  return {greedy.palette_size, greedy, greedy};
}

int chi_rel_direct(const SpanningSubgraph& h, const SolverOptions& options) {
  return chi_rel_direct_with_witness(h, options).value;
}

int chi_rel_via_cover(const SpanningSubgraph& h, const SolverOptions& options) {
  return chromatic_number(derive_double_cover(signing_from_cosupport(h)).graph, options);
}

// ---------------------------------------------------------------------------

NfoldResult chi_rel_nfold(const PermutationVoltage& phi, const SolverOptions& options) {
  const CoveringGraph cover = derive_nfold_cover(phi);
  const ColoringResult colored = optimal_coloring(cover.graph, options);
  NfoldResult out;
  out.value = colored.chromatic_number;
  const int n = phi.fold();
  const int base_n = phi.base().vertex_count();
  for (int i = 0; i < n; ++i) {
    std::vector<int> fi(static_cast<std::size_t>(base_n));
    for (Vertex v = 0; v < base_n; ++v) fi[static_cast<std::size_t>(v)] = colored.witness[n * v + i];
    out.tuple.emplace_back(std::move(fi), out.value);
  }
  return out;
}

TupleReport check_compatible_tuple(const PermutationVoltage& phi, std::span<const Coloring> tuple) {
  const Graph& g = phi.base();
  if (tuple.size() != static_cast<std::size_t>(phi.fold())) {
    return {false, "expected " + std::to_string(phi.fold()) + " colorings, got " + std::to_string(tuple.size())};
  }
  const SpanningSubgraph h = phi.cosupport();
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (!is_proper(h, tuple[i])) return {false, "f_" + std::to_string(i + 1) + " is not proper on cospt(phi)"};
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (h.has_edge(e)) continue;
    for (const auto& [u, v] : {std::pair{g.edge(e).u, g.edge(e).v}, std::pair{g.edge(e).v, g.edge(e).u}}) {
      for (int i = 0; i < phi.fold(); ++i) {
        const int j = phi.apply(u, v, i);
        if (tuple[static_cast<std::size_t>(i)][u] == tuple[static_cast<std::size_t>(j)][v]) {
          return {false, "f_" + std::to_string(i + 1) + "(" + std::to_string(u + 1) + ") = f_" + std::to_string(j + 1) +
                             "(" + std::to_string(v + 1) + ")"};
        }
      }
    }
  }
  return {true, {}};
}

int chi_rel_nfold_direct(const PermutationVoltage& phi, int variable_limit) {
  const Graph& g = phi.base();
  const int base_n = g.vertex_count();
  const int n = phi.fold();
  if (base_n * n > variable_limit) {
    throw SizeLimitError("direct tuple search limited to " + std::to_string(variable_limit) + " variables");
  }
  if (base_n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  // BFS order over base vertices; all sheets of a vertex are assigned together.
  std::vector<Vertex> order;
  std::vector<int> position(static_cast<std::size_t>(base_n), -1);
  for (Vertex s = 0; s < base_n; ++s) {
    if (position[static_cast<std::size_t>(s)] >= 0) continue;
    std::deque<Vertex> queue{s};
    position[static_cast<std::size_t>(s)] = static_cast<int>(order.size());
    order.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (position[static_cast<std::size_t>(w)] >= 0) continue;
        position[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
        order.push_back(w);
        queue.push_back(w);
      }
    }
  }
  // tuple[i][v] stored at v * n + i.
  std::vector<int> value(static_cast<std::size_t>(base_n * n), -1);
  int k = 0;
  auto search = [&](auto&& self, int var, int used) -> bool {
    if (var == base_n * n) return true;
    const Vertex v = order[static_cast<std::size_t>(var / n)];
    const int i = var % n;
    const int top = std::min(used + 1, k);
    for (int c = 0; c < top; ++c) {
      bool ok = true;
      for (Vertex u : g.neighbors(v)) {
        if (position[static_cast<std::size_t>(u)] >= position[static_cast<std::size_t>(v)]) continue;
        // f_i(v) != f_{phi(v,u)(i)}(u)
        const int j = phi.apply(v, u, i);
        if (value[static_cast<std::size_t>(u * n + j)] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      value[static_cast<std::size_t>(v * n + i)] = c;
      if (self(self, var + 1, std::max(used, c + 1))) return true;
    }
    value[static_cast<std::size_t>(v * n + i)] = -1;
    return false;
  };
  for (k = 1;; ++k) {
    if (search(search, 0, 0)) return k;
  }
}

}  // namespace dcover
