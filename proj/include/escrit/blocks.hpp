#pragma once

// Biconnected components via iterative lowpoint DFS. Blocks are maximal
// subgraphs without a cut vertex, reported as sorted edge sets.

#include <algorithm>
#include <vector>

#include "escrit/graph.hpp"

namespace escrit {

struct BlockDecomposition {
  std::vector<std::vector<edge_t>> blocks;  // each sorted; blocks ordered by smallest edge
  std::vector<int> cut_vertices;            // sorted
};

inline BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<bool> is_cut(n, false);
  std::vector<edge_t> estack;
  std::vector<std::vector<edge_t>> blocks;
  int timer = 0;

  struct Frame {
    int v;
    size_t i;
  };
  std::vector<Frame> st;

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    disc[root] = low[root] = timer++;
    st.push_back({root, 0});
    while (!st.empty()) {
      const int u = st.back().v;
      const auto& nbrs = g.neighbors(u);
      if (st.back().i < nbrs.size()) {
        const int v = nbrs[st.back().i++];
        if (v == parent[u]) continue;
        if (disc[v] == -1) {
          parent[v] = u;
          if (u == root) ++root_children;
          estack.push_back(make_edge(u, v));
          disc[v] = low[v] = timer++;
          st.push_back({v, 0});
        } else if (disc[v] < disc[u]) {
          estack.push_back(make_edge(u, v));
          low[u] = std::min(low[u], disc[v]);
        }
      } else {
        st.pop_back();
        if (st.empty()) continue;
        const int p = st.back().v;
        low[p] = std::min(low[p], low[u]);
        if (low[u] >= disc[p]) {
          // p separates u's subtree: pop one block, up to the tree edge (p,u)
          std::vector<edge_t> blk;
          const edge_t top = make_edge(p, u);
          while (!estack.empty()) {
            const edge_t e = estack.back();
            estack.pop_back();
            blk.push_back(e);
            if (e == top) break;
          }
          std::sort(blk.begin(), blk.end());
          blocks.push_back(std::move(blk));
          if (p != root) is_cut[p] = true;
        }
      }
    }
    if (root_children >= 2) is_cut[root] = true;
  }

  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  BlockDecomposition out;
  out.blocks = std::move(blocks);
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

// Connected with no cut vertex (and at least one vertex).
inline bool is_nonseparable(const Graph& g) {
  if (g.n() < 1) return false;
  if (!is_connected(g)) return false;
  return blocks_and_cut_vertices(g).cut_vertices.empty();
}

}  // namespace escrit
