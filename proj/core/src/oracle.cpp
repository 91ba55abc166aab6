#include "dcover/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "dcover/errors.hpp"

namespace dcover::oracle {

namespace {

void limit(int n, int max, const char* what) {
  if (n > max) throw SizeLimitError(std::string(what) + " limited to " + std::to_string(max) + " vertices");
}

/// Advances an odometer over {0..k-1}^n; false after the last map.
bool next_map(std::vector<int>& digits, int k) {
  for (int& d : digits) {
    if (++d < k) return true;
    d = 0;
  }
  return false;
}

bool proper(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& c) {
  for (const auto& [u, v] : edges) {
    if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> pairs_of(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace

int brute_chromatic(const Graph& g) {
  const int n = g.vertex_count();
  limit(n, 10, "brute_chromatic");
  if (n == 0) return 0;
  const auto edges = pairs_of(g);
  for (int k = 1;; ++k) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    do {
      if (proper(edges, c)) return k;
    } while (next_map(c, k));
  }
}

int brute_chi_rel(const SpanningSubgraph& h) {
  const Graph& g = h.parent();
  const int n = g.vertex_count();
  limit(n, 7, "brute_chi_rel");
  if (n == 0) return 0;
  std::vector<std::pair<int, int>> inside;
  std::vector<std::pair<int, int>> outside;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      (h.adjacent(u, v) ? inside : outside).emplace_back(u, v);
    }
  }
  for (int k = 1;; ++k) {
    std::vector<std::vector<int>> colorings;
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    do {
      if (proper(inside, c)) colorings.push_back(c);
    } while (next_map(c, k));
    for (const auto& f : colorings) {
      for (const auto& gc : colorings) {
        bool compatible = true;
        for (const auto& [u, v] : outside) {
          if (f[static_cast<std::size_t>(u)] == gc[static_cast<std::size_t>(v)] ||
              f[static_cast<std::size_t>(v)] == gc[static_cast<std::size_t>(u)]) {
            compatible = false;
            break;
          }
        }
        if (compatible) return k;
      }
    }
  }
}

std::optional<VertexSubset> brute_switch_equiv(const SpanningSubgraph& h, const SpanningSubgraph& k) {
  const Graph& g = h.parent();
  const int n = g.vertex_count();
  limit(n, 10, "brute_switch_equiv");
  if (!(g == k.parent())) throw MismatchError("spanning subgraphs of different graphs");
  const auto edges = pairs_of(g);
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    bool match = true;
    for (const auto& [u, v] : edges) {
      const bool crossing = ((bits >> u) & 1U) != ((bits >> v) & 1U);
      if ((h.adjacent(u, v) != crossing) != k.adjacent(u, v)) {
        match = false;
        break;
      }
    }
    if (match) {
      VertexSubset x(n);
      for (int v = 0; v < n; ++v) {
        if ((bits >> v) & 1U) x.insert(v);
      }
      return x;
    }
  }
  return std::nullopt;
}

}  // namespace dcover::oracle
