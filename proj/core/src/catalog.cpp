#include "dcover/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "dcover/errors.hpp"

namespace dcover {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  std::sort(edges.begin(), edges.end());
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  std::sort(edges.begin(), edges.end());
  return Graph(10, std::move(edges));
}

Graph complete_multipartite_graph(const std::vector<int>& parts) {
  std::vector<int> part;
  for (std::size_t i = 0; i < parts.size(); ++i) part.insert(part.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
  const int n = static_cast<int>(part.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

/// Bit index of pair (u, v), u < v, in lexicographic pair order.
int pair_bit(int n, int u, int v) { return u * (2 * n - u - 1) / 2 + (v - u - 1); }

bool mask_connected(int n, std::uint32_t mask) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((mask >> pair_bit(n, u, v)) & 1U) {
        adj[static_cast<std::size_t>(u)] |= 1U << v;
        adj[static_cast<std::size_t>(v)] |= 1U << u;
      }
    }
  }
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if ((frontier >> v) & 1U) next |= adj[static_cast<std::size_t>(v)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1U << n) - 1;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 6) throw SizeLimitError("connected graph enumeration supports 1..6 vertices");
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_list;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pair_list.emplace_back(u, v);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // permuted_bit[p][b]: where pair bit b lands under perms[p].
  std::vector<std::vector<int>> permuted_bit(perms.size(), std::vector<int>(static_cast<std::size_t>(pairs)));
  for (std::size_t p = 0; p < perms.size(); ++p) {
    for (int b = 0; b < pairs; ++b) {
      const int a = perms[p][static_cast<std::size_t>(pair_list[static_cast<std::size_t>(b)].first)];
      const int c = perms[p][static_cast<std::size_t>(pair_list[static_cast<std::size_t>(b)].second)];
      permuted_bit[p][static_cast<std::size_t>(b)] = pair_bit(n, std::min(a, c), std::max(a, c));
    }
  }
  std::vector<Graph> out;
  const std::uint32_t total = std::uint32_t{1} << pairs;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (!mask_connected(n, mask)) continue;
    bool minimal = true;
    for (std::size_t p = 1; p < perms.size() && minimal; ++p) {
      std::uint32_t image = 0;
      for (int b = 0; b < pairs; ++b) {
        if ((mask >> b) & 1U) image |= 1U << permuted_bit[p][static_cast<std::size_t>(b)];
      }
      if (image < mask) minimal = false;
    }
    if (!minimal) continue;
    std::vector<Edge> edges;
    for (int b = 0; b < pairs; ++b) {
      if ((mask >> b) & 1U) edges.emplace_back(pair_list[static_cast<std::size_t>(b)].first, pair_list[static_cast<std::size_t>(b)].second);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace dcover
