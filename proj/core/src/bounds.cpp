#include "dcover/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "dcover/errors.hpp"
#include "dcover/switching.hpp"

namespace dcover {

int delta_S(std::span<const int> s) {
  if (s.empty()) throw PreconditionError("delta_S of an empty multiset");
  const int top = *std::max_element(s.begin(), s.end());
  const int sum = std::accumulate(s.begin(), s.end(), 0);
  return std::max(0, 2 * top - sum);
}

namespace {

/// Classes among colors 1..palette that contain no edge of `complement`.
int independent_classes(const Graph& complement, const Coloring& f) {
  std::vector<bool> dependent(static_cast<std::size_t>(f.palette_size) + 1, false);
  for (const Edge& e : complement.edges()) {
    if (f[e.u] == f[e.v]) dependent[static_cast<std::size_t>(f[e.u])] = true;
  }
  int count = 0;
  for (int c = 1; c <= f.palette_size; ++c) {
    if (!dependent[static_cast<std::size_t>(c)]) ++count;
  }
  return count;
}

}  // namespace

int independent_color_count(const SpanningSubgraph& h, const Coloring& f) {
  if (!is_proper(h, f)) throw ImproperColoringError("coloring is not proper on H");
  return independent_classes(complement_within(h).as_graph(), f);
}

std::string format_bound(const BoundReport& r) {
  std::ostringstream out;
  out << "bound " << r.name << " lower=" << r.lower << " upper=" << r.upper << " exhaustive=" << (r.exhaustive ? 'y' : 'n')
      << " seed=" << r.seed;
  return out.str();
}

BoundReport bounds_cor24(const SpanningSubgraph& h, std::size_t class_budget, std::uint64_t seed,
                         std::size_t coloring_budget) {
  const Graph& g = h.parent();
  const int n = g.vertex_count();
  BoundReport report{"cor24", 0, 0, true, seed};
  if (n == 0) return report;
  const int chi_g = chromatic_number(g);
  report.upper = chi_g;

  auto consider = [&](const SpanningSubgraph& k) {
    const Graph kg = k.as_graph();
    const int chi_k = chromatic_number(kg);
    report.lower = std::max(report.lower, chi_k);
    const Graph complement = complement_within(k).as_graph();
    const auto colorings = enumerate_colorings(kg, chi_k, coloring_budget);
    if (!colorings.complete) report.exhaustive = false;
    for (const Coloring& f : colorings.colorings) {
      report.upper = std::min(report.upper, 2 * chi_k - independent_classes(complement, f));
    }
  };

  const int free = n - 1;
  if (free < 63 && (std::uint64_t{1} << free) <= class_budget) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free); ++bits) {
      consider(seidel_switch(h, VertexSubset::from_bits(n, bits << 1)));
    }
    return report;
  }
  report.exhaustive = false;
  consider(h);
  std::mt19937_64 rng(seed);
  for (std::size_t draw = 1; draw < class_budget; ++draw) {
    VertexSubset x(n);
    std::uint64_t word = 0;
    for (int v = 1; v < n; ++v) {
      if ((v - 1) % 64 == 0) word = rng();
      if ((word >> ((v - 1) % 64)) & 1U) x.insert(v);
    }
    consider(seidel_switch(h, x));
  }
  return report;
}

namespace {

struct PartData {
  int chi = 0;
  /// Distinct D_f(i) values over the enumerated chi-colorings of the part.
  std::vector<int> d_values;
  bool complete = true;
};

PartData analyse_part(const Graph& h_graph, const Graph& complement, const std::vector<Vertex>& part,
                      std::size_t budget) {
  PartData out;
  const InducedSubgraph local = induced_subgraph(h_graph, std::span<const Vertex>(part));
  const InducedSubgraph local_complement = induced_subgraph(complement, std::span<const Vertex>(part));
  out.chi = chromatic_number(local.graph);
  const auto colorings = enumerate_colorings(local.graph, out.chi, budget);
  out.complete = colorings.complete;
  std::set<int> values;
  for (const Coloring& f : colorings.colorings) values.insert(out.chi - independent_classes(local_complement.graph, f));
  out.d_values.assign(values.begin(), values.end());
  return out;
}

/// min over one value per part of Delta of the chosen values.
int min_delta(const std::vector<PartData>& parts, std::size_t combo_budget, bool& complete) {
  int best = -1;
  std::size_t visited = 0;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (best == 0 || visited >= combo_budget) return;
    if (i == parts.size()) {
      ++visited;
      const int d = delta_S(chosen);
      if (best < 0 || d < best) best = d;
      return;
    }
    for (int v : parts[i].d_values) {
      chosen.push_back(v);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  if (visited >= combo_budget && best != 0) complete = false;
  return best;
}

}  // namespace

Thm31Result upper_thm31_detailed(const SpanningSubgraph& h, std::size_t search_budget) {
  const Graph& g = h.parent();
  if (g.vertex_count() == 0) return {0, true};
  const Graph h_graph = h.as_graph();
  const Graph complement = complement_within(h).as_graph();
  const Partition blocks = components(complement);
  const Graph q = quotient(h_graph, blocks);
  const int chi_q = chromatic_number(q);
  const auto colorings = enumerate_colorings(q, chi_q, search_budget);

  Thm31Result result{-1, colorings.complete};
  for (const Coloring& c : colorings.colorings) {
    std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(chi_q));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      auto& part = parts[static_cast<std::size_t>(c[static_cast<Vertex>(b)] - 1)];
      part.insert(part.end(), blocks.block(b).begin(), blocks.block(b).end());
    }
    std::vector<PartData> data;
    std::vector<int> s;
    int sum = 0;
    for (auto& part : parts) {
      std::sort(part.begin(), part.end());
      data.push_back(analyse_part(h_graph, complement, part, search_budget));
      if (!data.back().complete) result.exhaustive = false;
      s.push_back(data.back().chi);
      sum += data.back().chi;
    }
    bool complete = true;
    const int slack = std::min(delta_S(s), min_delta(data, search_budget * 16, complete));
    if (!complete) result.exhaustive = false;
    if (result.value < 0 || sum + slack < result.value) result.value = sum + slack;
  }
  return result;
}

int upper_thm31(const SpanningSubgraph& h, std::size_t search_budget) {
  return upper_thm31_detailed(h, search_budget).value;
}

BoundReport bounds_thm31(const SpanningSubgraph& h, std::size_t search_budget) {
  const Thm31Result upper = upper_thm31_detailed(h, search_budget);
  return {"thm31", chromatic_number(h.as_graph()), upper.value, upper.exhaustive, 0};
}

BoundReport bounds_thm34(const Graph& g, const Partition& p) {
  if (p.vertex_count() != g.vertex_count()) throw GraphError("partition and graph differ in vertex count");
  BoundReport report{"thm34", 0, 0, true, 0};
  const Graph q = quotient(g, p);
  if (q.edge_count() == 0) {
    const int chi_h = chromatic_number(union_of_induced(g, p).as_graph());
    report.lower = report.upper = chi_h;
    return report;
  }
  std::vector<int> block_chi;
  for (const auto& block : p.blocks()) block_chi.push_back(chromatic_number(induced_subgraph(g, std::span<const Vertex>(block)).graph));
  for (const Edge& e : q.edges()) {
    std::vector<Vertex> both = p.block(static_cast<std::size_t>(e.u));
    both.insert(both.end(), p.block(static_cast<std::size_t>(e.v)).begin(), p.block(static_cast<std::size_t>(e.v)).end());
    std::sort(both.begin(), both.end());
    report.lower = std::max(report.lower, chromatic_number(induced_subgraph(g, std::span<const Vertex>(both)).graph));
    report.upper = std::max(report.upper, block_chi[static_cast<std::size_t>(e.u)] + block_chi[static_cast<std::size_t>(e.v)]);
  }
  return report;
}

std::optional<Partition> induced_partition(const SpanningSubgraph& h) {
  Partition p = components(h.as_graph());
  if (union_of_induced(h.parent(), p) == h) return p;
  return std::nullopt;
}

BipartiteQuotientReport chi_equals_chi_rel_bipartite_quotient(const Graph& g, const Partition& p) {
  if (!is_bipartite(quotient(g, p))) throw PreconditionError("quotient graph is not bipartite");
  BipartiteQuotientReport r;
  r.chi = chromatic_number(g);
  r.chi_rel = chi_rel_direct(union_of_induced(g, p));
  r.equal = r.chi == r.chi_rel;
  const BoundReport sandwich = bounds_thm34(g, p);
  r.sandwich_lower = sandwich.lower;
  r.sandwich_upper = sandwich.upper;
  r.sandwich_holds = sandwich.lower <= r.chi && r.chi <= sandwich.upper;
  return r;
}

bool characterize_chi2(const SpanningSubgraph& h) {
  const Graph& g = h.parent();
  if (g.edge_count() == 0) throw PreconditionError("graph has no edges");
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  return is_bipartite(g).has_value() || are_switching_equivalent(h, SpanningSubgraph::null(g)).has_value();
}

Realization realize_chi_rel(const Graph& g, int m, const SolverOptions& options) {
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  const int chi = chromatic_number(g, options);
  if (m < 2 || m > chi) {
    throw PreconditionError("m = " + std::to_string(m) + " outside 2.." + std::to_string(chi));
  }
  const int n = g.vertex_count();
  std::vector<bool> mask(g.edge_count(), true);
  auto at_least_m = [&](const std::vector<bool>& candidate) {
    return !is_k_colorable(SpanningSubgraph(g, candidate).as_graph(), m - 1, options).has_value();
  };
  // Vertex deletion drops every incident edge; the vertex stays isolated.
  for (Vertex v = 0; v < n; ++v) {
    std::vector<bool> trial = mask;
    bool changed = false;
    for (std::size_t e : g.incident_edges(v)) {
      changed = changed || trial[e];
      trial[e] = false;
    }
    if (changed && at_least_m(trial)) mask = std::move(trial);
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!mask[e]) continue;
    mask[e] = false;
    if (!at_least_m(mask)) mask[e] = true;
  }

  Realization out;
  out.subgraph = SpanningSubgraph(g, mask);
  out.critical_value = chi_rel_direct(out.subgraph, options);
  out.chi_rel = out.critical_value;
  if (out.critical_value == m) return out;

  // Adding one edge moves chi_G by at most one, and the walk runs from the
  // null graph (value 2) to G (value chi), so it meets m.
  out.discrepancy = true;
  std::vector<bool> walk(g.edge_count(), false);
  out.subgraph = SpanningSubgraph(g, walk);
  out.chi_rel = chi_rel_direct(out.subgraph, options);
  for (std::size_t e = 0; e < g.edge_count() && out.chi_rel != m; ++e) {
    walk[e] = true;
    out.subgraph = SpanningSubgraph(g, walk);
    out.chi_rel = chi_rel_direct(out.subgraph, options);
  }
  return out;
}

int chi_rel_complete_multipartite(const SpanningSubgraph& h) {
  const Graph& g = h.parent();
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (g.edge_count() != n * (n - (n > 0 ? 1 : 0)) / 2) throw PreconditionError("parent graph is not complete");
  const Partition parts = components(complement_within(h).as_graph());
  for (const auto& block : parts.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        if (h.adjacent(block[i], block[j])) throw PreconditionError("subgraph is not complete multipartite");
      }
    }
  }
  if (parts.size() == 1 && n >= 2) throw PreconditionError("a single part on two or more vertices");
  return static_cast<int>(parts.size());
}

int chi_rel_complete_partite_complement(const SpanningSubgraph& h) {
  const Graph& g = h.parent();
  const Partition comps = components(h.as_graph());
  if (comps.size() < 2) throw PreconditionError("subgraph has fewer than two components");
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (comps.block_of(edge.u) == comps.block_of(edge.v) && !h.has_edge(e)) {
      throw PreconditionError("a component of the subgraph is not induced");
    }
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (comps.block_of(u) != comps.block_of(v) && !g.adjacent(u, v)) {
        throw PreconditionError("complement is not complete multipartite on the components");
      }
    }
  }
  struct Ranked {
    int chi;
    Vertex min_vertex;
  };
  std::vector<Ranked> ranked;
  const Graph hg = h.as_graph();
  for (const auto& block : comps.blocks()) {
    ranked.push_back({chromatic_number(induced_subgraph(hg, std::span<const Vertex>(block)).graph), block.front()});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    return a.chi != b.chi ? a.chi > b.chi : a.min_vertex < b.min_vertex;
  });
  return ranked[0].chi + ranked[1].chi;
}

}  // namespace dcover
