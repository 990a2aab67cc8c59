#pragma once

// BFS two-coloring. On failure the certificate is a simple odd cycle built
// from the two tree paths to the endpoints of the conflicting edge.

#include <variant>
#include <vector>

#include "escrit/cycle.hpp"
#include "escrit/graph.hpp"

namespace escrit {

struct Bipartition {
  std::vector<int> side;  // 0/1 per vertex; every edge straddles
};

// Deterministic: components are rooted at their smallest vertex, neighbors
// scanned in ascending order.
inline std::variant<Bipartition, Cycle> bipartition_or_odd_cycle(const Graph& g) {
  const int n = g.n();
  std::vector<int> side(n, -1), parent(n, -1), depth(n, 0);
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    queue.assign(1, root);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for (int v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = side[u] ^ 1;
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          // walk both endpoints up to their lowest common ancestor
          std::vector<int> pu{u}, pv{v};
          int a = u, b = v;
          while (depth[a] > depth[b]) pu.push_back(a = parent[a]);
          while (depth[b] > depth[a]) pv.push_back(b = parent[b]);
          while (a != b) {
            pu.push_back(a = parent[a]);
            pv.push_back(b = parent[b]);
          }
          pv.pop_back();  // drop the duplicated ancestor
          for (auto it = pv.rbegin(); it != pv.rend(); ++it) pu.push_back(*it);
          return Cycle(g, std::move(pu));
        }
      }
    }
  }
  return Bipartition{std::move(side)};
}

// Two-colorability alone, ignoring up to two edges (kNoEdge = unused slot).
// side is scratch storage reused across calls.
inline bool is_bipartite_skipping(const Graph& g, edge_t skip1, edge_t skip2,
                                  std::vector<int>& side) {
  skip1 = skip1 == kNoEdge ? kNoEdge : make_edge(skip1.first, skip1.second);
  skip2 = skip2 == kNoEdge ? kNoEdge : make_edge(skip2.first, skip2.second);
  const int n = g.n();
  side.assign(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  for (int root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    queue.assign(1, root);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for (int v : g.neighbors(u)) {
        const edge_t e = make_edge(u, v);
        if (e == skip1 || e == skip2) continue;
        if (side[v] == -1) {
          side[v] = side[u] ^ 1;
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> scratch;
  return is_bipartite_skipping(g, kNoEdge, kNoEdge, scratch);
}

}  // namespace escrit
