#pragma once

// Edge stability number: the size of a smallest edge set whose removal
// lowers the chromatic number, with the lexicographically least witness.
// Exact closed form for 2-chromatic inputs, bipartite-frustration search for
// 3-chromatic inputs, bounded subset search otherwise.

#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "escrit/bipartite.hpp"
#include "escrit/coloring.hpp"
#include "escrit/graph.hpp"

namespace escrit {

inline constexpr int kEsSearchBound = 4;

struct StabilityReport {
  int chi = 0;
  int es = 0;
  std::vector<edge_t> witness;  // lexicographically least removal set of size es
};

namespace stability_detail {

// Advances a strictly increasing index combination below m; false at the end.
inline bool next_combination(std::vector<int>& idx, int m) {
  const int s = static_cast<int>(idx.size());
  for (int i = s - 1; i >= 0; --i) {
    if (idx[i] < m - (s - i)) {
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace stability_detail

inline StabilityReport edge_stability_number(const Graph& g) {
  const int chi = chromatic_number(g);
  if (chi <= 1)
    throw std::invalid_argument("edge stability number undefined: chromatic number is " +
                                std::to_string(chi));
  const auto& E = g.edges();
  const int m = g.m();

  if (chi == 2) {
    // only removing every edge drops the chromatic number below 2
    return {chi, m, E};
  }

  if (chi == 3) {
    // bipartite frustration; every removal set must meet this odd cycle
    const auto odd = std::get<Cycle>(bipartition_or_odd_cycle(g));
    std::vector<bool> on_cycle(m, false);
    for (auto e : odd.edge_set()) on_cycle[g.edge_index(e)] = true;
    std::vector<int> scratch;
    for (int i = 0; i < m; ++i)
      if (on_cycle[i] && is_bipartite_skipping(g, E[i], kNoEdge, scratch))
        return {chi, 1, {E[i]}};
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if ((on_cycle[i] || on_cycle[j]) && is_bipartite_skipping(g, E[i], E[j], scratch))
          return {chi, 2, {E[i], E[j]}};
    for (int s = 3; s <= kEsSearchBound && s <= m; ++s) {
      std::vector<int> idx(s);
      std::iota(idx.begin(), idx.end(), 0);
      do {
        bool hits = false;
        for (int i : idx)
          if (on_cycle[i]) {
            hits = true;
            break;
          }
        if (!hits) continue;
        std::vector<edge_t> del;
        del.reserve(s);
        for (int i : idx) del.push_back(E[i]);
        if (is_bipartite(g.without_edges(del))) return {chi, s, del};
      } while (stability_detail::next_combination(idx, m));
    }
    throw bound_exceeded("edge stability search bound exceeded: no removal set of size <= " +
                         std::to_string(kEsSearchBound));
  }

  for (int s = 1; s <= kEsSearchBound && s <= m; ++s) {
    std::vector<int> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      std::vector<edge_t> del;
      del.reserve(s);
      for (int i : idx) del.push_back(E[i]);
      if (is_k_colorable(g.without_edges(del), chi - 1)) return {chi, s, del};
    } while (stability_detail::next_combination(idx, m));
  }
  throw bound_exceeded("edge stability search bound exceeded: no removal set of size <= " +
                       std::to_string(kEsSearchBound));
}

struct CoRemovalSet {
  edge_t edge;
  std::vector<edge_t> partners;  // ascending
};

// Partners f of e: removing {e, f} lowers the chromatic number.
inline CoRemovalSet co_removal_set(const Graph& g, edge_t e) {
  e = make_edge(e.first, e.second);
  if (g.edge_index(e) < 0)
    throw std::invalid_argument("edge not in graph: (" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + ")");
  const int chi = chromatic_number(g);
  if (chi <= 1)
    throw std::invalid_argument("co-removal set undefined: chromatic number is " +
                                std::to_string(chi));
  CoRemovalSet out{e, {}};
  std::vector<int> scratch;
  for (auto f : g.edges()) {
    if (f == e) continue;
    bool drops = false;
    if (chi == 2) drops = g.m() == 2;
    else if (chi == 3) drops = is_bipartite_skipping(g, e, f, scratch);
    else drops = is_k_colorable(g.without_edges({e, f}), chi - 1);
    if (drops) out.partners.push_back(f);
  }
  return out;
}

}  // namespace escrit
