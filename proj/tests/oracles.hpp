#pragma once
// Slow reference implementations used to cross-check the library. Everything
// here favors obviousness over speed: natural-order backtracking, union-find
// parity, plain subset enumeration. Keep these independent of the algorithms
// under test.

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "escrit/graph.hpp"

namespace oracle {

inline bool colorable_rec(const escrit::Graph& g, int k, std::vector<int>& color, int v) {
  if (v == g.n()) return true;
  for (int c = 0; c < k; ++c) {
    bool clashes = false;
    for (int u : g.neighbors(v)) {
      if (u < v && color[u] == c) {
        clashes = true;
        break;
      }
    }
    if (clashes) continue;
    color[v] = c;
    if (colorable_rec(g, k, color, v + 1)) return true;
  }
  color[v] = -1;
  return false;
}

inline bool colorable(const escrit::Graph& g, int k) {
  if (k < 0) return false;
  std::vector<int> color(g.n(), -1);
  return colorable_rec(g, k, color, 0);
}

inline int chromatic(const escrit::Graph& g) {
  for (int k = 0;; ++k)
    if (colorable(g, k)) return k;
}

// union-find with parity relative to the root
struct ParityDsu {
  std::vector<int> parent;
  std::vector<int> parity;

  explicit ParityDsu(int n) : parent(n), parity(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::pair<int, int> find(int v) {
    if (parent[v] == v) return {v, 0};
    auto [root, p] = find(parent[v]);
    parent[v] = root;
    parity[v] ^= p;
    return {root, parity[v]};
  }

  bool join(int a, int b) {  // false on an odd-cycle conflict
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return pa != pb;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ 1;
    return true;
  }
};

inline bool bipartite_dsu(const escrit::Graph& g,
                          const std::vector<escrit::edge_t>& skipped = {}) {
  ParityDsu dsu(g.n());
  for (const auto& e : g.edges()) {
    bool skip = false;
    for (const auto& s : skipped) {
      if (escrit::make_edge(s.first, s.second) == e) skip = true;
    }
    if (!skip && !dsu.join(e.first, e.second)) return false;
  }
  return true;
}

// Every simple cycle, found by checking each vertex subset for Hamiltonian
// cycles over it. Output sequences start at the subset minimum with the
// smaller neighbor second, sorted lexicographically.
inline std::vector<std::vector<int>> cycles_by_subsets(const escrit::Graph& g) {
  std::vector<std::vector<int>> out;
  const int n = g.n();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 3) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) verts.push_back(v);
    std::vector<int> rest(verts.begin() + 1, verts.end());
    do {
      if (rest.front() > rest.back()) continue;
      std::vector<int> cyc;
      cyc.push_back(verts.front());
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      bool closed = true;
      for (size_t i = 0; i < cyc.size() && closed; ++i)
        closed = g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
      if (closed) out.push_back(cyc);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct EsResult {
  int es = 0;
  std::vector<escrit::edge_t> witness;
  bool operator==(const EsResult&) const = default;
};

namespace detail {

template <typename Accept>
inline std::optional<EsResult> first_subset(const escrit::Graph& g, int max_size, Accept accept) {
  const auto& edges = g.edges();
  const int m = g.m();
  for (int s = 1; s <= max_size && s <= m; ++s) {
    std::vector<int> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<escrit::edge_t> sub;
      for (int i : idx) sub.push_back(edges[i]);
      if (accept(sub)) return EsResult{s, sub};
      int i = s - 1;
      while (i >= 0 && idx[i] == m - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Smallest edge set (lexicographically first among the smallest) whose
// removal lowers the chromatic number, by plain subset search.
inline std::optional<EsResult> es_literal(const escrit::Graph& g) {
  const int chi = chromatic(g);
  if (chi <= 1) return std::nullopt;
  return detail::first_subset(g, g.m(), [&](const std::vector<escrit::edge_t>& sub) {
    return colorable(g.without_edges(sub), chi - 1);
  });
}

// Same search capped at a given size; lowering target is the graph's own chi.
inline std::optional<EsResult> es_up_to(const escrit::Graph& g, int max_size) {
  const int chi = chromatic(g);
  if (chi <= 1) return std::nullopt;
  if (chi == 3) {
    return detail::first_subset(g, max_size, [&](const std::vector<escrit::edge_t>& sub) {
      return bipartite_dsu(g, sub);
    });
  }
  return detail::first_subset(g, max_size, [&](const std::vector<escrit::edge_t>& sub) {
    return colorable(g.without_edges(sub), chi - 1);
  });
}

inline bool is_esc_literal(const escrit::Graph& g) {
  const auto base = es_literal(g);
  if (!base) throw std::invalid_argument("edge stability undefined");
  for (const auto& e : g.edges()) {
    const auto after = es_literal(g.without_edge(e));
    if (!after || after->es >= base->es) return false;
  }
  return true;
}

inline bool isomorphic(const escrit::Graph& a, const escrit::Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  std::vector<int> perm(a.n());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (const auto& [u, v] : a.edges()) {
      if (!b.has_edge(perm[u], perm[v])) {
        match = false;
        break;
      }
    }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<int> cut_vertices_brute(const escrit::Graph& g) {
  std::vector<int> cuts;
  const int base = escrit::component_count(g);
  for (int v = 0; v < g.n(); ++v) {
    // relabel g - v compactly and count components among the survivors
    std::vector<escrit::edge_t> edges;
    auto shift = [v](int x) { return x > v ? x - 1 : x; };
    for (const auto& [a, b] : g.edges())
      if (a != v && b != v) edges.push_back({shift(a), shift(b)});
    const escrit::Graph h = escrit::from_edge_list(g.n() - 1, edges);
    const int isolated_left = g.degree(v) == 0 ? 1 : 0;
    if (escrit::component_count(h) + isolated_left > base) cuts.push_back(v);
  }
  return cuts;
}

inline escrit::Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<escrit::edge_t> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng)) edges.push_back({u, v});
  return escrit::from_edge_list(n, edges);
}

inline escrit::Graph cycle_graph(int len) {
  std::vector<escrit::edge_t> edges;
  for (int i = 0; i < len; ++i) edges.push_back({i, (i + 1) % len});
  return escrit::from_edge_list(len, edges);
}

inline escrit::Graph path_graph(int n) {
  std::vector<escrit::edge_t> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return escrit::from_edge_list(n, edges);
}

inline escrit::Graph complete_graph(int n) {
  std::vector<escrit::edge_t> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) edges.push_back({u, v});
  return escrit::from_edge_list(n, edges);
}

inline escrit::Graph disjoint_union(const escrit::Graph& a, const escrit::Graph& b) {
  std::vector<escrit::edge_t> edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.push_back({u + a.n(), v + a.n()});
  return escrit::from_edge_list(a.n() + b.n(), edges);
}

inline escrit::Graph permuted(const escrit::Graph& g, const std::vector<int>& perm) {
  std::vector<escrit::edge_t> edges;
  for (const auto& [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
  return escrit::from_edge_list(g.n(), edges);
}

inline escrit::Graph petersen() {
  std::vector<escrit::edge_t> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});          // outer 5-cycle
    edges.push_back({i, i + 5});                // spokes
    edges.push_back({i + 5, (i + 2) % 5 + 5});  // inner 5-cycle, step 2
  }
  return escrit::from_edge_list(10, edges);
}

}  // namespace oracle
