#pragma once

// Open-ear search against a nonseparable host, and the ear decomposition it
// induces. The search is deterministic: a spanning host receives the smallest
// missing edge; otherwise the smallest boundary edge (x, y) with x inside is
// extended by a shortest y-to-host path avoiding x, ties broken by vertex
// order.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "escrit/blocks.hpp"
#include "escrit/cycle.hpp"
#include "escrit/graph.hpp"

namespace escrit {

struct Subgraph {
  std::vector<int> vertices;  // sorted, distinct
  std::vector<edge_t> edges;  // sorted, distinct, endpoints among vertices

  bool has_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
  bool has_edge(edge_t e) const {
    return std::binary_search(edges.begin(), edges.end(), make_edge(e.first, e.second));
  }

  // Union in a path: its vertices and consecutive edges.
  void add_path(const std::vector<int>& path) {
    for (int v : path) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
      if (it == vertices.end() || *it != v) vertices.insert(it, v);
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      const edge_t e = make_edge(path[i], path[i + 1]);
      auto it = std::lower_bound(edges.begin(), edges.end(), e);
      if (it == edges.end() || *it != e) edges.insert(it, e);
    }
  }
};

inline Subgraph subgraph_from_edges(const std::vector<edge_t>& es) {
  Subgraph s;
  for (auto e : es) {
    s.edges.push_back(make_edge(e.first, e.second));
    s.vertices.push_back(e.first);
    s.vertices.push_back(e.second);
  }
  std::sort(s.edges.begin(), s.edges.end());
  s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
  std::sort(s.vertices.begin(), s.vertices.end());
  s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
  return s;
}

inline Subgraph subgraph_of_cycle(const Cycle& c) {
  Subgraph s;
  s.vertices = c.vertices();
  std::sort(s.vertices.begin(), s.vertices.end());
  s.edges = c.edge_set();
  return s;
}

// Compact relabeling of a subgraph (sorted vertex order) as its own Graph.
inline Graph subgraph_as_graph(const Subgraph& s) {
  std::vector<edge_t> mapped;
  mapped.reserve(s.edges.size());
  auto index_of = [&s](int v) {
    return static_cast<int>(std::lower_bound(s.vertices.begin(), s.vertices.end(), v) -
                            s.vertices.begin());
  };
  for (auto [u, v] : s.edges) mapped.emplace_back(index_of(u), index_of(v));
  return Graph(static_cast<int>(s.vertices.size()), std::move(mapped));
}

inline void validate_subgraph(const Graph& g, const Subgraph& s) {
  if (!std::is_sorted(s.vertices.begin(), s.vertices.end()) ||
      std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end())
    throw std::invalid_argument("subgraph vertices must be sorted and distinct");
  if (!std::is_sorted(s.edges.begin(), s.edges.end()) ||
      std::adjacent_find(s.edges.begin(), s.edges.end()) != s.edges.end())
    throw std::invalid_argument("subgraph edges must be sorted and distinct");
  for (int v : s.vertices)
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("subgraph vertex out of range: " + std::to_string(v));
  for (auto [u, v] : s.edges) {
    if (u >= v) throw std::invalid_argument("subgraph edge not normalized");
    if (!g.has_edge(u, v))
      throw std::invalid_argument("subgraph edge not in graph: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    if (!s.has_vertex(u) || !s.has_vertex(v))
      throw std::invalid_argument("subgraph edge endpoint missing from vertex set");
  }
}

struct Ear {
  std::vector<int> path;  // endpoints in the host, interior outside it
  size_t length() const { return path.size() - 1; }
};

inline Ear find_open_ear(const Graph& g, const Subgraph& host) {
  if (!is_nonseparable(g)) throw std::invalid_argument("graph must be nonseparable");
  validate_subgraph(g, host);
  if (host.edges.empty()) throw std::invalid_argument("host must contain at least one edge");
  if (static_cast<int>(host.edges.size()) == g.m() &&
      static_cast<int>(host.vertices.size()) == g.n())
    throw std::invalid_argument("host already spans the whole graph");

  const bool spanning = static_cast<int>(host.vertices.size()) == g.n();
  if (spanning) {
    for (auto e : g.edges())
      if (!host.has_edge(e)) return Ear{{e.first, e.second}};
    throw std::logic_error("spanning host with no missing edge");
  }

  // smallest boundary edge (x inside, y outside)
  int x = -1, y = -1;
  for (auto [u, v] : g.edges()) {
    const bool iu = host.has_vertex(u), iv = host.has_vertex(v);
    if (iu == iv) continue;
    x = iu ? u : v;
    y = iu ? v : u;
    break;
  }
  if (x == -1) throw std::logic_error("non-spanning host with no boundary edge");

  // BFS from y in g - x until any host vertex other than x
  std::vector<int> parent(g.n(), -2);
  parent[y] = -1;
  parent[x] = -3;  // excluded
  std::vector<int> queue{y};
  int hit = -1;
  for (size_t qi = 0; qi < queue.size() && hit == -1; ++qi) {
    const int u = queue[qi];
    for (int v : g.neighbors(u)) {
      if (parent[v] != -2) continue;
      parent[v] = u;
      if (host.has_vertex(v)) {
        hit = v;
        break;
      }
      queue.push_back(v);
    }
  }
  if (hit == -1) throw std::logic_error("ear search found no return path to host");

  std::vector<int> tail;
  for (int v = hit; v != -1; v = parent[v]) tail.push_back(v);
  // tail is hit..y; the ear runs x, y, ..., hit
  Ear ear;
  ear.path.push_back(x);
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) ear.path.push_back(*it);
  return ear;
}

// Repeatedly attach open ears to a nonseparable seed until every edge of g is
// covered. The returned ears, applied in order, rebuild g from the seed.
inline std::vector<Ear> ear_decomposition(const Graph& g, const Subgraph& seed) {
  if (!is_nonseparable(g)) throw std::invalid_argument("graph must be nonseparable");
  validate_subgraph(g, seed);
  if (seed.edges.empty()) throw std::invalid_argument("seed must contain at least one edge");
  if (!is_nonseparable(subgraph_as_graph(seed)))
    throw std::invalid_argument("seed must be nonseparable");

  std::vector<Ear> ears;
  Subgraph cur = seed;
  while (static_cast<int>(cur.edges.size()) < g.m()) {
    Ear ear = find_open_ear(g, cur);
    cur.add_path(ear.path);
    ears.push_back(std::move(ear));
  }
  return ears;
}

}  // namespace escrit
