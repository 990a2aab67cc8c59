#pragma once

// Exact vertex coloring by backtracking over a degree-descending vertex
// order, with first-fresh-color symmetry pruning.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "escrit/bipartite.hpp"
#include "escrit/graph.hpp"

namespace escrit {

inline constexpr int kChromaticNumberBound = 16;

// A proper coloring with colors in [0, k), or empty if none exists.
inline std::optional<std::vector<int>> k_coloring(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("color count must be nonnegative");
  const int n = g.n();
  if (n == 0) return std::vector<int>{};
  if (k == 0) return std::nullopt;
  if (k >= n) {
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    return c;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&g](int a, int b) { return g.degree(a) > g.degree(b); });

  std::vector<int> color(n, -1);
  auto rec = [&](auto&& self, int pos, int used) -> bool {
    if (pos == n) return true;
    const int u = order[pos];
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (int v : g.neighbors(u))
        if (color[v] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[u] = c;
      if (self(self, pos + 1, std::max(used, c + 1))) return true;
      color[u] = -1;
    }
    return false;
  };
  if (!rec(rec, 0, 0)) return std::nullopt;
  return color;
}

inline bool is_k_colorable(const Graph& g, int k) { return k_coloring(g, k).has_value(); }

// Exact chromatic number; bounded to keep the search tractable.
inline int chromatic_number(const Graph& g) {
  if (g.n() > kChromaticNumberBound)
    throw bound_exceeded("chromatic number bound exceeded: n=" + std::to_string(g.n()) +
                         " > " + std::to_string(kChromaticNumberBound));
  if (g.n() == 0) return 0;
  if (g.m() == 0) return 1;
  if (is_bipartite(g)) return 2;
  for (int k = 3; k < g.n(); ++k)
    if (is_k_colorable(g, k)) return k;
  return g.n();
}

}  // namespace escrit
