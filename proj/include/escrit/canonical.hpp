#pragma once

// Isomorphism-canonical graph6 string: the minimum encoding over all vertex
// relabelings. Exact and exhaustive, so deliberately bounded.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "escrit/graph.hpp"
#include "escrit/graph6.hpp"

namespace escrit {

inline constexpr int kCanonicalFormBound = 10;

inline std::string canonical_form(const Graph& g) {
  const int n = g.n();
  if (n > kCanonicalFormBound)
    throw bound_exceeded("canonical form bound exceeded: n=" + std::to_string(n) + " > " +
                         std::to_string(kCanonicalFormBound));
  if (n <= 1) return to_graph6(g);

  std::array<std::array<bool, kCanonicalFormBound>, kCanonicalFormBound> adj{};
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;

  // pack the upper triangle in encoding order; fewer than 45 bits for n <= 10
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~0ULL;
  do {
    uint64_t key = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) key = (key << 1) | (adj[perm[u]][perm[v]] ? 1u : 0u);
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<edge_t> edges;
  int bit = n * (n - 1) / 2;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if ((best >> --bit) & 1) edges.emplace_back(u, v);
  return to_graph6(Graph(n, std::move(edges)));
}

}  // namespace escrit
