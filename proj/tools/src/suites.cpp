#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "dcover/bounds.hpp"
#include "dcover/catalog.hpp"
#include "dcover/chromatic.hpp"
#include "dcover/errors.hpp"
#include "dcover/switching.hpp"

namespace dcover::cli {

namespace {

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " {";
  for (std::size_t i = 0; i < g.edge_count(); ++i) out << (i ? " " : "") << g.edge(i).u + 1 << '-' << g.edge(i).v + 1;
  out << '}';
  return out.str();
}

std::string describe(const SpanningSubgraph& h) {
  return "G " + describe(h.parent()) + " H " + describe(h.as_graph());
}

class Tally {
 public:
  Tally(std::string name, std::ostream& out) : name_(std::move(name)), out_(out) {}

  void check(bool ok, const std::function<std::string()>& detail) {
    ++result_.checked;
    if (ok) return;
    ++result_.failures;
    out_ << "counterexample " << name_ << ": " << detail() << '\n';
  }

  SuiteResult finish() {
    if (result_.failures == 0) {
      out_ << name_ << ": pass, " << result_.checked << " instances\n";
    } else {
      out_ << name_ << ": FAIL, " << result_.failures << " of " << result_.checked << " instances\n";
    }
    return result_;
  }

 private:
  std::string name_;
  std::ostream& out_;
  SuiteResult result_;
};

/// Every spanning subgraph of every connected graph on 1..max_vertices.
void for_each_corpus_subgraph(int max_vertices, const std::function<void(const SpanningSubgraph&)>& visit) {
  for (int n = 1; n <= max_vertices; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
        visit(SpanningSubgraph::from_bits(g, bits));
      }
    }
  }
}

SpanningSubgraph disjoint_cliques(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  const Graph g = complete_graph(n);
  std::vector<Edge> inside;
  int start = 0;
  for (int s : sizes) {
    for (int u = start; u < start + s; ++u) {
      for (int v = u + 1; v < start + s; ++v) inside.emplace_back(u, v);
    }
    start += s;
  }
  return SpanningSubgraph::from_edges(g, inside);
}

/// Integer partitions of n, parts in non-increasing order.
void for_each_partition(int n, int max_part, std::vector<int>& prefix, const std::function<void(const std::vector<int>&)>& visit) {
  if (n == 0) {
    visit(prefix);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    for_each_partition(n - p, p, prefix, visit);
    prefix.pop_back();
  }
}

SuiteResult thm21(const SuiteOptions& o, std::ostream& out) {
  Tally t("thm21", out);
  for_each_corpus_subgraph(o.max_vertices, [&](const SpanningSubgraph& h) {
    const int direct = chi_rel_direct(h);
    const int cover = chi_rel_via_cover(h);
    t.check(direct == cover, [&] { return describe(h) + " direct=" + std::to_string(direct) + " cover=" + std::to_string(cover); });
  });
  return t.finish();
}

SuiteResult cor23(const SuiteOptions& o, std::ostream& out) {
  Tally t("cor23", out);
  std::mt19937_64 rng(o.seed);
  out << "seed " << o.seed << '\n';
  const int top = std::max(2, o.max_vertices);
  for (std::size_t s = 0; s < o.samples; ++s) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(top - 1));
    const Graph g = random_graph(n, 0.5, rng());
    std::vector<bool> mask(g.edge_count());
    for (std::size_t e = 0; e < mask.size(); ++e) mask[e] = (rng() & 1U) != 0;
    const SpanningSubgraph h(g, mask);
    VertexSubset x(n);
    for (int v = 0; v < n; ++v) {
      if (rng() & 1U) x.insert(v);
    }
    const SpanningSubgraph hx = seidel_switch(h, x);
    const int a = chi_rel_direct(h);
    const int b = chi_rel_direct(hx);
    t.check(a == b, [&] { return describe(h) + " chi_rel=" + std::to_string(a) + " switched=" + std::to_string(b); });
  }
  return t.finish();
}

SuiteResult cor24(const SuiteOptions& o, std::ostream& out) {
  Tally t("cor24", out);
  for_each_corpus_subgraph(o.max_vertices, [&](const SpanningSubgraph& h) {
    const BoundReport r = bounds_cor24(h, default_class_budget, o.seed);
    const int x = chi_rel_direct(h);
    t.check(r.lower <= x && x <= r.upper, [&] { return describe(h) + " " + format_bound(r) + " chi_rel=" + std::to_string(x); });
  });
  return t.finish();
}

SuiteResult thm27(const SuiteOptions& o, std::ostream& out) {
  Tally t("thm27", out);
  for_each_corpus_subgraph(o.max_vertices, [&](const SpanningSubgraph& h) {
    if (h.parent().edge_count() == 0) return;
    const bool claim = characterize_chi2(h);
    const int x = chi_rel_direct(h);
    t.check(claim == (x == 2), [&] { return describe(h) + " characterization=" + (claim ? "yes" : "no") + " chi_rel=" + std::to_string(x); });
  });
  return t.finish();
}

SuiteResult thm31(const SuiteOptions& o, std::ostream& out) {
  Tally t("thm31", out);
  for_each_corpus_subgraph(o.max_vertices, [&](const SpanningSubgraph& h) {
    const int u = upper_thm31(h);
    const int x = chi_rel_direct(h);
    t.check(x <= u, [&] { return describe(h) + " upper=" + std::to_string(u) + " chi_rel=" + std::to_string(x); });
  });
  // Sharpness on K_{m-1} plus isolated vertices inside K_n.
  for (int n = 2; n <= o.max_vertices; ++n) {
    for (int m = 2; m <= n; ++m) {
      std::vector<int> sizes{m - 1};
      sizes.insert(sizes.end(), static_cast<std::size_t>(n - m + 1), 1);
      const SpanningSubgraph h = disjoint_cliques(sizes);
      const int u = upper_thm31(h);
      const int x = chi_rel_direct(h);
      t.check(u == m && x == m, [&] {
        return "K_" + std::to_string(n) + " m=" + std::to_string(m) + " upper=" + std::to_string(u) + " chi_rel=" + std::to_string(x);
      });
    }
  }
  return t.finish();
}

SuiteResult thm34(const SuiteOptions& o, std::ostream& out) {
  Tally t("thm34", out);
  for_each_corpus_subgraph(o.max_vertices, [&](const SpanningSubgraph& h) {
    const auto p = induced_partition(h);
    if (!p) return;
    const BoundReport r = bounds_thm34(h.parent(), *p);
    const int x = chi_rel_direct(h);
    t.check(r.lower <= x && x <= r.upper, [&] { return describe(h) + " " + format_bound(r) + " chi_rel=" + std::to_string(x); });
  });
  return t.finish();
}

SuiteResult cor36(const SuiteOptions& o, std::ostream& out) {
  Tally t("cor36", out);
  for (int n = 2; n <= o.max_vertices; ++n) {
    std::vector<int> prefix;
    for_each_partition(n, n, prefix, [&](const std::vector<int>& sizes) {
      if (sizes.size() < 2) return;
      const SpanningSubgraph h = disjoint_cliques(sizes);
      const int x = chi_rel_direct(h);
      const int expected = sizes[0] + sizes[1];
      const int formula = chi_rel_complete_partite_complement(h);
      t.check(x == expected && formula == expected, [&] {
        return describe(h) + " expected=" + std::to_string(expected) + " chi_rel=" + std::to_string(x);
      });
    });
  }
  return t.finish();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm21", "cor23", "cor24", "thm27", "thm31", "thm34", "cor36"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options, std::ostream& out) {
  if (name == "thm21") return thm21(options, out);
  if (name == "cor23") return cor23(options, out);
  if (name == "cor24") return cor24(options, out);
  if (name == "thm27") return thm27(options, out);
  if (name == "thm31") return thm31(options, out);
  if (name == "thm34") return thm34(options, out);
  if (name == "cor36") return cor36(options, out);
  throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace dcover::cli
