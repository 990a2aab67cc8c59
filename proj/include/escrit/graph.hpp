#pragma once

// Small dense simple-graph value type shared by the whole library.
// Vertices are 0..n-1; edges are kept sorted as pairs (u,v) with u < v.

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace escrit {

using edge_t = std::pair<int, int>;

// Thrown when an input exceeds a documented exact-solver bound.
class bound_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline edge_t make_edge(int u, int v) { return u < v ? edge_t{u, v} : edge_t{v, u}; }

// Sentinel for "no edge" parameters.
inline constexpr edge_t kNoEdge{-1, -1};

class Graph {
 public:
  Graph() = default;

  // Validating constructor: rejects self-loops and out-of-range endpoints,
  // normalizes orientation, drops duplicate edges.
  Graph(int n, std::vector<edge_t> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                    "," + std::to_string(v) + ") with n=" + std::to_string(n));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<edge_t>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int u) const {
    check_vertex(u);
    return adj_[u];
  }

  int degree(int u) const {
    check_vertex(u);
    return static_cast<int>(adj_[u].size());
  }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  // Position of e in the sorted edge list, -1 if absent.
  int edge_index(edge_t e) const {
    e = make_edge(e.first, e.second);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  Graph without_edge(edge_t e) const { return without_edges({e}); }

  Graph without_edges(const std::vector<edge_t>& del) const {
    std::vector<edge_t> d;
    d.reserve(del.size());
    for (auto e : del) d.push_back(make_edge(e.first, e.second));
    std::sort(d.begin(), d.end());
    std::vector<edge_t> kept;
    kept.reserve(edges_.size());
    for (auto e : edges_)
      if (!std::binary_search(d.begin(), d.end(), e)) kept.push_back(e);
    return Graph(n_, std::move(kept));
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  void check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::invalid_argument("vertex out of range: " + std::to_string(u));
  }

  int n_ = 0;
  std::vector<edge_t> edges_;
  std::vector<std::vector<int>> adj_;
};

inline Graph from_edge_list(int n, const std::vector<edge_t>& edges) { return Graph(n, edges); }

// Text format: "n m" header, then m lines "u v".
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: expected header \"n m\"");
  if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header field");
  std::vector<edge_t> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(i));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("edge list: trailing content after last edge");
  return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// BFS distance, empty when v is unreachable from u.
inline std::optional<int> shortest_distance(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
    throw std::invalid_argument("shortest_distance: vertex out of range");
  if (u == v) return 0;
  std::vector<int> dist(g.n(), -1);
  dist[u] = 0;
  std::vector<int> queue{u};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (int y : g.neighbors(x)) {
      if (dist[y] != -1) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

// Component id per vertex; ids are assigned in order of smallest contained vertex.
inline std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(g.n(), -1);
  int next = 0;
  std::vector<int> queue;
  for (int root = 0; root < g.n(); ++root) {
    if (label[root] != -1) continue;
    label[root] = next;
    queue.assign(1, root);
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int y : g.neighbors(queue[qi]))
        if (label[y] == -1) {
          label[y] = next;
          queue.push_back(y);
        }
    ++next;
  }
  return label;
}

inline int component_count(const Graph& g) {
  auto lab = component_labels(g);
  return lab.empty() ? 0 : 1 + *std::max_element(lab.begin(), lab.end());
}

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

inline bool has_isolated_vertex(const Graph& g) {
  for (int u = 0; u < g.n(); ++u)
    if (g.degree(u) == 0) return true;
  return false;
}

}  // namespace escrit
