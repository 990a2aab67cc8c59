#pragma once

// Exhaustive simple-cycle enumeration by rooted backtracking, plus the
// odd-cycle structure queries built on it. Cycles are visited in canonical
// form (smallest vertex first, lexicographically smaller direction) in
// lexicographic order.

#include <algorithm>
#include <optional>
#include <vector>

#include "escrit/bipartite.hpp"
#include "escrit/blocks.hpp"
#include "escrit/cycle.hpp"
#include "escrit/graph.hpp"

namespace escrit {

inline constexpr long long kDefaultCycleLimit = 1'000'000;

// Calls fn(path) for every simple cycle; the path is already canonical.
// fn returns false to stop the walk.
template <typename Fn>
inline void visit_cycles(const Graph& g, Fn&& fn) {
  const int n = g.n();
  std::vector<int> path;
  std::vector<bool> on_path(n, false);
  bool stop = false;

  auto dfs = [&](auto&& self, int u, int root) -> void {
    for (int v : g.neighbors(u)) {
      if (stop) return;
      if (v == root) {
        if (path.size() >= 3 && path[1] < path.back() && !fn(path)) {
          stop = true;
          return;
        }
      } else if (v > root && !on_path[v]) {
        path.push_back(v);
        on_path[v] = true;
        self(self, v, root);
        on_path[v] = false;
        path.pop_back();
      }
    }
  };

  for (int root = 0; root < n && !stop; ++root) {
    path.assign(1, root);
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[root] = true;
    dfs(dfs, root, root);
  }
}

struct CycleEnumeration {
  std::vector<Cycle> cycles;
  bool truncated = false;  // true when more than limit cycles exist
};

inline CycleEnumeration enumerate_cycles(const Graph& g, long long limit = kDefaultCycleLimit) {
  if (limit < 1) throw std::invalid_argument("cycle limit must be positive");
  CycleEnumeration out;
  visit_cycles(g, [&](const std::vector<int>& path) {
    if (static_cast<long long>(out.cycles.size()) == limit) {
      out.truncated = true;
      return false;
    }
    out.cycles.emplace_back(g, path);
    return true;
  });
  return out;
}

inline OddCycleCensus count_odd_cycles(const Graph& g, long long cap = 5) {
  if (cap < 1) throw std::invalid_argument("census cap must be positive");
  OddCycleCensus census{0, cap, false};
  visit_cycles(g, [&](const std::vector<int>& path) {
    if (path.size() % 2 == 0) return true;
    ++census.count;
    if (census.count == census.cap) {
      census.saturated = true;
      return false;
    }
    return true;
  });
  return census;
}

// Whether every two odd cycles share at least two vertices. Vacuously true
// with fewer than two odd cycles. Empty when the cycle walk exceeds limit
// before a definite answer (a found violation is definite regardless).
inline std::optional<bool> pairwise_intersection_property(
    const Graph& g, long long limit = kDefaultCycleLimit) {
  if (limit < 1) throw std::invalid_argument("cycle limit must be positive");
  std::vector<std::vector<int>> odd_vertex_sets;
  long long seen = 0;
  bool violated = false, truncated = false;
  visit_cycles(g, [&](const std::vector<int>& path) {
    if (seen == limit) {
      truncated = true;
      return false;
    }
    ++seen;
    if (path.size() % 2 == 0) return true;
    std::vector<int> vs = path;
    std::sort(vs.begin(), vs.end());
    for (const auto& prev : odd_vertex_sets) {
      int shared = 0;
      auto a = prev.begin();
      auto b = vs.begin();
      while (a != prev.end() && b != vs.end() && shared < 2) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else ++shared, ++a, ++b;
      }
      if (shared < 2) {
        violated = true;
        return false;
      }
    }
    odd_vertex_sets.push_back(std::move(vs));
    return true;
  });
  if (violated) return false;
  if (truncated) return std::nullopt;
  return true;
}

// Whether some single edge lies on every odd cycle. Vacuously true without
// odd cycles. Empty when the cycle walk exceeds limit before a definite
// answer (an emptied running intersection is definite regardless).
inline std::optional<bool> all_odd_cycles_share_edge(const Graph& g,
                                                     long long limit = kDefaultCycleLimit) {
  if (limit < 1) throw std::invalid_argument("cycle limit must be positive");
  std::vector<edge_t> common;
  bool any_odd = false, violated = false, truncated = false;
  long long seen = 0;
  visit_cycles(g, [&](const std::vector<int>& path) {
    if (seen == limit) {
      truncated = true;
      return false;
    }
    ++seen;
    if (path.size() % 2 == 0) return true;
    std::vector<edge_t> es;
    es.reserve(path.size());
    for (size_t i = 0; i < path.size(); ++i)
      es.push_back(make_edge(path[i], path[(i + 1) % path.size()]));
    std::sort(es.begin(), es.end());
    if (!any_odd) {
      any_odd = true;
      common = std::move(es);
    } else {
      std::vector<edge_t> next;
      std::set_intersection(common.begin(), common.end(), es.begin(), es.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
    if (common.empty()) {
      violated = true;
      return false;
    }
    return true;
  });
  if (violated) return false;
  if (truncated) return std::nullopt;
  return true;
}

// An edge lies on some odd cycle exactly when its block is nonbipartite.
inline bool edge_on_odd_cycle(const Graph& g, edge_t e) {
  e = make_edge(e.first, e.second);
  if (g.edge_index(e) < 0)
    throw std::invalid_argument("edge not in graph: (" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + ")");
  const auto dec = blocks_and_cut_vertices(g);
  for (const auto& blk : dec.blocks) {
    if (!std::binary_search(blk.begin(), blk.end(), e)) continue;
    std::vector<int> vs;
    for (auto [u, v] : blk) {
      vs.push_back(u);
      vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    auto index_of = [&vs](int v) {
      return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    std::vector<edge_t> mapped;
    mapped.reserve(blk.size());
    for (auto [u, v] : blk) mapped.emplace_back(index_of(u), index_of(v));
    return !is_bipartite(Graph(static_cast<int>(vs.size()), std::move(mapped)));
  }
  throw std::logic_error("edge missing from every block");
}

}  // namespace escrit
