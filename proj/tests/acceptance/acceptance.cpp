// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dcover/bounds.hpp"
#include "dcover/catalog.hpp"
#include "dcover/chromatic.hpp"
#include "dcover/covering.hpp"
#include "dcover/oracle.hpp"
#include "dcover/switching.hpp"

namespace {

using namespace dcover;

struct Outcome {
  bool pass = true;
  std::size_t instances = 0;
  std::string detail;

  void check(bool ok, const std::function<std::string()>& why) {
    ++instances;
    if (!ok && pass) {
      pass = false;
      detail = why();
    }
  }
};

std::string describe(const SpanningSubgraph& h) {
  std::ostringstream out;
  out << "n=" << h.vertex_count() << " G{";
  for (const Edge& e : h.parent().edges()) out << ' ' << e.u + 1 << '-' << e.v + 1;
  out << " } H{";
  for (const Edge& e : h.edge_list()) out << ' ' << e.u + 1 << '-' << e.v + 1;
  out << " }";
  return out.str();
}

void for_each_corpus_subgraph(int max_vertices, const std::function<void(const SpanningSubgraph&)>& visit) {
  for (int n = 1; n <= max_vertices; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
        visit(SpanningSubgraph::from_bits(g, bits));
      }
    }
  }
}

SpanningSubgraph union_of_cliques(int n, const std::vector<int>& labels) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (labels[static_cast<std::size_t>(u)] == labels[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
    }
  }
  return SpanningSubgraph::from_edges(complete_graph(n), edges);
}

// Restricted growth strings: every set partition of {0..n-1}.
void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (v == n) {
      visit(labels, used);
      return;
    }
    for (int c = 0; c <= used && c < n; ++c) {
      labels[static_cast<std::size_t>(v)] = c;
      rec(v + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
}

void for_each_integer_partition(int n, int max_part, std::vector<int>& prefix,
                                const std::function<void(const std::vector<int>&)>& visit) {
  if (n == 0) {
    visit(prefix);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    for_each_integer_partition(n - p, p, prefix, visit);
    prefix.pop_back();
  }
}

Outcome criterion1() {
  Outcome o;
  for_each_corpus_subgraph(6, [&](const SpanningSubgraph& h) {
    const int direct = chi_rel_direct(h);
    const int cover = chi_rel_via_cover(h);
    o.check(direct == cover, [&] { return describe(h) + " direct=" + std::to_string(direct) + " cover=" + std::to_string(cover); });
  });
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  const SpanningSubgraph h1 = SpanningSubgraph::from_edges(g, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  const SpanningSubgraph h2 = SpanningSubgraph::from_edges(g, std::vector<Edge>{{0, 2}, {1, 2}, {2, 3}});
  const int chi = chromatic_number(g);
  o.check(chi == 3, [&] { return "chi(G)=" + std::to_string(chi); });
  const std::pair<const SpanningSubgraph*, int> cases[] = {{&h1, 3}, {&h2, 2}};
  for (const auto& [h, want] : cases) {
    const int direct = chi_rel_direct(*h);
    const int cover = chromatic_number(derive_double_cover(signing_from_cosupport(*h)).graph);
    o.check(direct == want && cover == want, [&] {
      return describe(*h) + " direct=" + std::to_string(direct) + " cover=" + std::to_string(cover) + " want=" + std::to_string(want);
    });
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int n = 2; n <= 7; ++n) {
    for (int m = 2; m <= n; ++m) {
      std::vector<int> labels(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = v < m - 1 ? 0 : v;
      const SpanningSubgraph h = union_of_cliques(n, labels);
      const int direct = chi_rel_direct(h);
      const int upper = upper_thm31(h);
      o.check(direct == m && upper == m, [&] {
        return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " direct=" + std::to_string(direct) + " upper=" + std::to_string(upper);
      });
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) {
    for_each_set_partition(n, [&](const std::vector<int>& labels, int m) {
      // One part on 2+ vertices is the null graph, not a complete 1-partite graph with chi 1.
      if (m == 1 && n >= 2) return;
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (labels[static_cast<std::size_t>(u)] != labels[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
        }
      }
      const SpanningSubgraph h = SpanningSubgraph::from_edges(complete_graph(n), edges);
      const int direct = chi_rel_direct(h);
      o.check(direct == m, [&] { return describe(h) + " m=" + std::to_string(m) + " direct=" + std::to_string(direct); });
    });
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> prefix;
    for_each_integer_partition(n, n, prefix, [&](const std::vector<int>& sizes) {
      std::vector<int> labels;
      for (std::size_t i = 0; i < sizes.size(); ++i) labels.insert(labels.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
      const SpanningSubgraph h = union_of_cliques(n, labels);
      const int want = sizes[0] + (sizes.size() > 1 ? sizes[1] : 0);
      const int direct = chi_rel_direct(h);
      o.check(direct == want, [&] { return describe(h) + " want=" + std::to_string(want) + " direct=" + std::to_string(direct); });
    });
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  for_each_corpus_subgraph(6, [&](const SpanningSubgraph& h) {
    if (h.parent().edge_count() == 0) return;
    const bool claim = characterize_chi2(h);
    const int direct = chi_rel_direct(h);
    o.check(claim == (direct == 2), [&] { return describe(h) + " claim=" + std::to_string(claim) + " direct=" + std::to_string(direct); });
  });
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<int> size(2, 9);
  std::bernoulli_distribution coin(0.5);
  for (int s = 0; s < 200; ++s) {
    const int n = size(rng);
    const Graph g = random_graph(n, 0.5, rng());
    std::vector<bool> mask(g.edge_count());
    for (std::size_t e = 0; e < mask.size(); ++e) mask[e] = coin(rng);
    const SpanningSubgraph h(g, mask);
    VertexSubset x(n);
    for (int v = 0; v < n; ++v) {
      if (coin(rng)) x.insert(v);
    }
    const int a = chi_rel_direct(h);
    const int b = chi_rel_direct(seidel_switch(h, x));
    o.check(a == b, [&] { return describe(h) + " chi_rel=" + std::to_string(a) + " switched=" + std::to_string(b); });
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for_each_corpus_subgraph(6, [&](const SpanningSubgraph& h) {
    const int x = chi_rel_direct(h);
    const BoundReport c = bounds_cor24(h);
    o.check(c.lower <= x && x <= c.upper, [&] { return describe(h) + " " + format_bound(c) + " chi_rel=" + std::to_string(x); });
    const int u = upper_thm31(h);
    o.check(x <= u, [&] { return describe(h) + " thm31 upper=" + std::to_string(u) + " chi_rel=" + std::to_string(x); });
    if (const auto p = induced_partition(h)) {
      const BoundReport t = bounds_thm34(h.parent(), *p);
      o.check(t.lower <= x && x <= t.upper, [&] { return describe(h) + " " + format_bound(t) + " chi_rel=" + std::to_string(x); });
    }
  });
  return o;
}

Outcome criterion9() {
  Outcome o;
  const Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  const std::vector<PermutationVoltage::DirectedEntry> entries{
      {0, 1, Permutation::from_cycles(4, {{1, 2}, {3, 4}})},
      {0, 3, Permutation::from_cycles(4, {{1, 2, 3, 4}})},
  };
  const PermutationVoltage fig4 = PermutationVoltage::from_directed(g, 4, entries);
  const NfoldResult r = chi_rel_nfold(fig4);
  const TupleReport tuple = check_compatible_tuple(fig4, r.tuple);
  o.check(r.value == 2 && tuple.valid, [&] { return "4-fold chi=" + std::to_string(r.value) + " tuple: " + tuple.message; });
  std::size_t connected = 0;
  for (const PermutationVoltage& phi : voltages_up_to_relabeling(g, 3)) {
    const CoveringGraph c = derive_nfold_cover(phi);
    if (!is_connected(c.graph)) continue;
    ++connected;
    const int chi = chromatic_number(c.graph);
    const bool valid = verify_covering(c).valid;
    o.check(chi == 3 && valid, [&] { return "3-fold cover chi=" + std::to_string(chi) + " valid=" + std::to_string(valid); });
  }
  o.check(connected > 0, [] { return std::string("no connected 3-fold covers enumerated"); });
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(500);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int s = 0; s < 500; ++s) {
    const Graph g = random_graph(size(rng), density(rng), rng());
    const int a = chromatic_number(g);
    const int b = oracle::brute_chromatic(g);
    o.check(a == b, [&] { return describe(SpanningSubgraph::whole(g)) + " solver=" + std::to_string(a) + " brute=" + std::to_string(b); });
  }
  for_each_corpus_subgraph(5, [&](const SpanningSubgraph& h) {
    const int a = chi_rel_direct(h);
    const int b = oracle::brute_chi_rel(h);
    o.check(a == b, [&] { return describe(h) + " direct=" + std::to_string(a) + " brute=" + std::to_string(b); });
  });
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
      {"cover equivalence on connected graphs up to 6 vertices", criterion1},
      {"kite regression", criterion2},
      {"clique plus isolated vertices in K_n, n <= 7", criterion3},
      {"complete multipartite subgraphs of K_n, n <= 7", criterion4},
      {"disjoint cliques in K_n, n <= 7", criterion5},
      {"value 2 characterization up to 6 vertices", criterion6},
      {"switching invariance, 200 seeded samples", criterion7},
      {"bounds bracket the exact value up to 6 vertices", criterion8},
      {"4-fold and 3-fold kite covers", criterion9},
      {"brute-force oracle agreement", criterion10},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << o.instances
              << " checks, " << secs << " s)";
    if (!o.pass) std::cout << " first failure: " << o.detail;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
