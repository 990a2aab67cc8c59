#pragma once

// Simple-cycle value type stored in canonical orientation: the smallest
// vertex first, then the lexicographically smaller of the two directions.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "escrit/graph.hpp"

namespace escrit {

class Cycle {
 public:
  Cycle() = default;

  // Validates against g: >= 3 distinct vertices, consecutive pairs adjacent
  // (including last to first).
  Cycle(const Graph& g, std::vector<int> vs) : vertices_(std::move(vs)) {
    const size_t k = vertices_.size();
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<int> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("cycle has a repeated vertex");
    for (size_t i = 0; i < k; ++i) {
      const int a = vertices_[i], b = vertices_[(i + 1) % k];
      if (!g.has_edge(a, b))
        throw std::invalid_argument("cycle uses a missing edge: (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
    }
    canonicalize();
  }

  const std::vector<int>& vertices() const { return vertices_; }
  size_t length() const { return vertices_.size(); }
  bool odd() const { return vertices_.size() % 2 == 1; }

  std::vector<edge_t> edge_set() const {
    std::vector<edge_t> es;
    es.reserve(vertices_.size());
    for (size_t i = 0; i < vertices_.size(); ++i)
      es.push_back(make_edge(vertices_[i], vertices_[(i + 1) % vertices_.size()]));
    std::sort(es.begin(), es.end());
    return es;
  }

  bool operator==(const Cycle& o) const { return vertices_ == o.vertices_; }
  bool operator<(const Cycle& o) const { return vertices_ < o.vertices_; }

 private:
  void canonicalize() {
    const size_t k = vertices_.size();
    const size_t start = static_cast<size_t>(
        std::min_element(vertices_.begin(), vertices_.end()) - vertices_.begin());
    std::vector<int> fwd(k), rev(k);
    for (size_t i = 0; i < k; ++i) {
      fwd[i] = vertices_[(start + i) % k];
      rev[i] = vertices_[(start + k - i) % k];
    }
    vertices_ = std::min(fwd, rev);
  }

  std::vector<int> vertices_;
};

// Saturating odd-cycle count: count is exact when not saturated; when
// saturated, count == cap and at least cap odd cycles exist.
struct OddCycleCensus {
  long long count = 0;
  long long cap = 0;
  bool saturated = false;

  bool operator==(const OddCycleCensus&) const = default;
};

}  // namespace escrit
