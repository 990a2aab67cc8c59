#pragma once

// The five graph families whose union is exactly the class this library
// characterizes, plus the auxiliary ring family used as scaffolding.
// Each family has a spec type with validation, a deterministic builder,
// and a structural recognizer returning the normalized spec.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "escrit/graph.hpp"

namespace escrit {

enum class FamilyTag { A, B, C, D, E, EPrime };

inline const char* tag_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::A: return "A";
    case FamilyTag::B: return "B";
    case FamilyTag::C: return "C";
    case FamilyTag::D: return "D";
    case FamilyTag::E: return "E";
    case FamilyTag::EPrime: return "E'";
  }
  return "?";
}

// Two vertex-disjoint odd cycles.
struct FamilyA {
  int c1 = 3, c2 = 3;
  bool operator==(const FamilyA&) const = default;
};

// Two odd cycles sharing exactly one vertex.
struct FamilyB {
  int c1 = 3, c2 = 3;
  bool operator==(const FamilyB&) const = default;
};

// Four internally disjoint hub-to-hub paths; exactly two odd lengths, at
// most one length 1.
struct FamilyC {
  std::array<int, 4> paths{1, 1, 1, 1};
  bool operator==(const FamilyC&) const = default;
};

// Subdivision of the complete graph on four corners; branch lengths in the
// fixed corner-pair order (01, 02, 03, 12, 13, 23).
struct FamilyD {
  std::array<int, 6> branches{1, 1, 1, 1, 1, 1};
  bool operator==(const FamilyD&) const = default;
};

// Ring of even cycles, cyclically consecutive ones sharing one vertex; the
// two shared vertices of constituent i sit at distance dist along it, and
// the distances sum odd.
struct ERing {
  int cycle_len = 4;
  int dist = 1;
  auto operator<=>(const ERing&) const = default;
};

struct FamilyE {
  std::vector<ERing> rings;
  bool operator==(const FamilyE&) const = default;
};

// Ring of even cycles and paths (no two paths cyclically adjacent); for a
// path part, len is the path length and dist equals len.
struct EPart {
  bool is_path = false;
  int len = 4;
  int dist = 1;
  auto operator<=>(const EPart&) const = default;
};

struct FamilyEPrime {
  std::vector<EPart> parts;
  bool operator==(const FamilyEPrime&) const = default;
};

using FamilySpec = std::variant<FamilyA, FamilyB, FamilyC, FamilyD, FamilyE, FamilyEPrime>;

inline FamilyTag tag_of(const FamilySpec& s) {
  switch (s.index()) {
    case 0: return FamilyTag::A;
    case 1: return FamilyTag::B;
    case 2: return FamilyTag::C;
    case 3: return FamilyTag::D;
    case 4: return FamilyTag::E;
    default: return FamilyTag::EPrime;
  }
}

// Parity layout of the six branches; exactly these three yield the family.
enum class DCase { AllOdd, OddTriangle, OddMatching };

inline const char* d_case_label(DCase c) {
  switch (c) {
    case DCase::AllOdd: return "i";
    case DCase::OddTriangle: return "ii";
    case DCase::OddMatching: return "iii";
  }
  return "?";
}

namespace family_detail {

inline constexpr std::array<std::pair<int, int>, 6> kK4Pairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline int k4_pair_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int t = 0; t < 6; ++t)
    if (kK4Pairs[t] == std::pair<int, int>{a, b}) return t;
  return -1;
}

}  // namespace family_detail

inline std::optional<DCase> d_parity_case(const std::array<int, 6>& branches) {
  std::vector<int> odd;
  for (int t = 0; t < 6; ++t)
    if (branches[t] % 2 == 1) odd.push_back(t);
  if (odd.size() == 6) return DCase::AllOdd;
  if (odd.size() == 3) {
    std::vector<int> vs;
    for (int t : odd) {
      vs.push_back(family_detail::kK4Pairs[t].first);
      vs.push_back(family_detail::kK4Pairs[t].second);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() == 3) return DCase::OddTriangle;
    return std::nullopt;
  }
  if (odd.size() == 2) {
    const auto [a1, b1] = family_detail::kK4Pairs[odd[0]];
    const auto [a2, b2] = family_detail::kK4Pairs[odd[1]];
    if (a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2) return DCase::OddMatching;
    return std::nullopt;
  }
  return std::nullopt;
}

inline std::vector<std::string> validate_spec(const FamilySpec& spec) {
  std::vector<std::string> out;
  auto odd_cycle = [&out](int len, const char* which) {
    if (len < 3 || len % 2 == 0)
      out.push_back(std::string(which) + " must be an odd cycle length of at least 3, got " +
                    std::to_string(len));
  };
  auto even_ring = [&out](int len, int dist) {
    if (len < 4 || len % 2 == 1)
      out.push_back("constituent cycle length must be even and at least 4, got " +
                    std::to_string(len));
    else if (dist < 1 || dist > len / 2)
      out.push_back("hub distance must be between 1 and half the cycle length, got " +
                    std::to_string(dist) + " on a cycle of length " + std::to_string(len));
  };

  if (const auto* a = std::get_if<FamilyA>(&spec)) {
    odd_cycle(a->c1, "first cycle length");
    odd_cycle(a->c2, "second cycle length");
  } else if (const auto* b = std::get_if<FamilyB>(&spec)) {
    odd_cycle(b->c1, "first cycle length");
    odd_cycle(b->c2, "second cycle length");
  } else if (const auto* c = std::get_if<FamilyC>(&spec)) {
    int odd = 0, ones = 0;
    for (int q : c->paths) {
      if (q < 1) out.push_back("path length must be at least 1, got " + std::to_string(q));
      if (q % 2 == 1) ++odd;
      if (q == 1) ++ones;
    }
    if (odd != 2)
      out.push_back("exactly two of the four path lengths must be odd, got " +
                    std::to_string(odd));
    if (ones > 1)
      out.push_back("at most one path may have length 1, got " + std::to_string(ones));
  } else if (const auto* d = std::get_if<FamilyD>(&spec)) {
    bool positive = true;
    for (int q : d->branches)
      if (q < 1) {
        out.push_back("branch length must be at least 1, got " + std::to_string(q));
        positive = false;
      }
    if (positive) {
      if (std::all_of(d->branches.begin(), d->branches.end(), [](int q) { return q == 1; }))
        out.push_back("at least one branch must be longer than 1");
      if (!d_parity_case(d->branches))
        out.push_back(
            "odd branches must be all six, three forming a triangle, or two sharing no corner");
    }
  } else if (const auto* e = std::get_if<FamilyE>(&spec)) {
    if (e->rings.size() < 2)
      out.push_back("needs at least 2 constituent cycles, got " +
                    std::to_string(e->rings.size()));
    long long dist_sum = 0;
    for (const auto& r : e->rings) {
      even_ring(r.cycle_len, r.dist);
      dist_sum += r.dist;
    }
    if (dist_sum % 2 == 0)
      out.push_back("hub distances must sum odd, got " + std::to_string(dist_sum));
  } else if (const auto* ep = std::get_if<FamilyEPrime>(&spec)) {
    const auto& parts = ep->parts;
    if (parts.size() < 3)
      out.push_back("needs at least 3 parts, got " + std::to_string(parts.size()));
    int cycles = 0, paths = 0;
    long long dist_sum = 0;
    for (const auto& p : parts) {
      if (p.is_path) {
        ++paths;
        if (p.len < 1)
          out.push_back("path part length must be at least 1, got " + std::to_string(p.len));
        dist_sum += p.len;
      } else {
        ++cycles;
        even_ring(p.len, p.dist);
        dist_sum += p.dist;
      }
    }
    if (cycles < 2) out.push_back("needs at least 2 cycle parts, got " + std::to_string(cycles));
    if (paths < 1) out.push_back("needs at least 1 path part, got " + std::to_string(paths));
    for (size_t i = 0; i < parts.size() && parts.size() >= 2; ++i)
      if (parts[i].is_path && parts[(i + 1) % parts.size()].is_path) {
        out.push_back("path parts must not be cyclically adjacent");
        break;
      }
    if (dist_sum % 2 == 0)
      out.push_back("hub distances and path lengths must sum odd, got " +
                    std::to_string(dist_sum));
  }
  return out;
}

namespace family_detail {

inline void require_valid(const FamilySpec& spec) {
  const auto violations = validate_spec(spec);
  if (violations.empty()) return;
  std::string msg = "invalid family spec: ";
  for (size_t i = 0; i < violations.size(); ++i) {
    if (i) msg += "; ";
    msg += violations[i];
  }
  throw std::invalid_argument(msg);
}

}  // namespace family_detail

// Builder layout for the ring family: the constituent walks, their shared
// hub vertices, and each constituent's two hub-to-hub arcs.
struct ERingLayout {
  Graph graph;
  std::vector<int> hubs;  // hubs[i] joins constituent i-1 (cyclically) and i
  std::vector<std::array<std::vector<edge_t>, 2>> arcs;  // per constituent, sorted
};

inline ERingLayout build_e_layout(const FamilyE& spec) {
  family_detail::require_valid(spec);
  const int k = static_cast<int>(spec.rings.size());
  int total = 0;
  for (const auto& r : spec.rings) total += r.cycle_len;
  const int n = total - k;

  ERingLayout out;
  out.hubs.resize(k);
  out.arcs.resize(k);
  std::vector<edge_t> edges;
  edges.reserve(total);
  int next_label = 0, entry = 0;
  for (int i = 0; i < k; ++i) {
    const int len = spec.rings[i].cycle_len;
    const int d = spec.rings[i].dist;
    std::vector<int> walk(len);
    if (i == 0) {
      std::iota(walk.begin(), walk.end(), 0);
      next_label = len;
    } else {
      walk[0] = entry;
      for (int j = 1; j < len; ++j)
        walk[j] = (i == k - 1 && j == d) ? 0 : next_label++;
    }
    out.hubs[i] = walk[0];
    for (int j = 0; j < len; ++j) {
      const edge_t e = make_edge(walk[j], walk[(j + 1) % len]);
      edges.push_back(e);
      out.arcs[i][j < d ? 0 : 1].push_back(e);
    }
    std::sort(out.arcs[i][0].begin(), out.arcs[i][0].end());
    std::sort(out.arcs[i][1].begin(), out.arcs[i][1].end());
    entry = walk[d];
  }
  out.graph = Graph(n, std::move(edges));
  return out;
}

inline Graph build_family(const FamilySpec& spec) {
  family_detail::require_valid(spec);
  std::vector<edge_t> edges;

  if (const auto* a = std::get_if<FamilyA>(&spec)) {
    for (int i = 0; i < a->c1; ++i) edges.push_back(make_edge(i, (i + 1) % a->c1));
    for (int i = 0; i < a->c2; ++i)
      edges.push_back(make_edge(a->c1 + i, a->c1 + (i + 1) % a->c2));
    return Graph(a->c1 + a->c2, std::move(edges));
  }

  if (const auto* b = std::get_if<FamilyB>(&spec)) {
    for (int i = 0; i < b->c1; ++i) edges.push_back(make_edge(i, (i + 1) % b->c1));
    std::vector<int> walk{0};
    for (int i = 0; i < b->c2 - 1; ++i) walk.push_back(b->c1 + i);
    for (int i = 0; i < b->c2; ++i)
      edges.push_back(make_edge(walk[i], walk[(i + 1) % b->c2]));
    return Graph(b->c1 + b->c2 - 1, std::move(edges));
  }

  if (const auto* c = std::get_if<FamilyC>(&spec)) {
    const int y = c->paths[0];  // first path is laid out as 0..q1
    for (int i = 0; i < y; ++i) edges.push_back(make_edge(i, i + 1));
    int next = y + 1;
    for (int p = 1; p < 4; ++p) {
      std::vector<int> walk{0};
      for (int i = 0; i < c->paths[p] - 1; ++i) walk.push_back(next++);
      walk.push_back(y);
      for (size_t i = 0; i + 1 < walk.size(); ++i)
        edges.push_back(make_edge(walk[i], walk[i + 1]));
    }
    const int n = std::accumulate(c->paths.begin(), c->paths.end(), 0) - 2;
    return Graph(n, std::move(edges));
  }

  if (const auto* d = std::get_if<FamilyD>(&spec)) {
    int next = 4;
    for (int t = 0; t < 6; ++t) {
      const auto [a, b] = family_detail::kK4Pairs[t];
      std::vector<int> walk{a};
      for (int i = 0; i < d->branches[t] - 1; ++i) walk.push_back(next++);
      walk.push_back(b);
      for (size_t i = 0; i + 1 < walk.size(); ++i)
        edges.push_back(make_edge(walk[i], walk[i + 1]));
    }
    const int n = std::accumulate(d->branches.begin(), d->branches.end(), 0) - 2;
    return Graph(n, std::move(edges));
  }

  if (const auto* e = std::get_if<FamilyE>(&spec)) return build_e_layout(*e).graph;

  const auto& parts = std::get<FamilyEPrime>(spec).parts;
  const int k = static_cast<int>(parts.size());
  int n = -k;
  for (const auto& p : parts) n += p.is_path ? p.len + 1 : p.len;
  int next_label = 0, entry = 0;
  for (int i = 0; i < k; ++i) {
    const auto& p = parts[i];
    const int walk_len = p.is_path ? p.len + 1 : p.len;
    const int exit_idx = p.is_path ? p.len : p.dist;
    std::vector<int> walk(walk_len);
    if (i == 0) {
      std::iota(walk.begin(), walk.end(), 0);
      next_label = walk_len;
    } else {
      walk[0] = entry;
      for (int j = 1; j < walk_len; ++j)
        walk[j] = (i == k - 1 && j == exit_idx) ? 0 : next_label++;
    }
    for (int j = 0; j + 1 < walk_len; ++j) edges.push_back(make_edge(walk[j], walk[j + 1]));
    if (!p.is_path) edges.push_back(make_edge(walk[walk_len - 1], walk[0]));
    entry = walk[exit_idx];
  }
  return Graph(n, std::move(edges));
}

// ---- normalization ---------------------------------------------------------

inline std::array<int, 6> normalize_d_branches(const std::array<int, 6>& b) {
  std::array<int, 4> p{0, 1, 2, 3};
  std::array<int, 6> best = b;
  do {
    std::array<int, 6> cand;
    for (int t = 0; t < 6; ++t) {
      const auto [i, j] = family_detail::kK4Pairs[t];
      cand[t] = b[family_detail::k4_pair_index(p[i], p[j])];
    }
    best = std::min(best, cand);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

template <typename Part>
inline std::vector<Part> normalize_ring_order(const std::vector<Part>& r) {
  const int k = static_cast<int>(r.size());
  if (k == 0) return r;
  std::vector<Part> best = r, cand(k);
  for (int dir : {1, -1})
    for (int s = 0; s < k; ++s) {
      for (int j = 0; j < k; ++j) cand[j] = r[((s + dir * j) % k + k) % k];
      if (cand < best) best = cand;
    }
  return best;
}

inline FamilySpec normalize_spec(const FamilySpec& spec) {
  if (const auto* a = std::get_if<FamilyA>(&spec))
    return FamilyA{std::min(a->c1, a->c2), std::max(a->c1, a->c2)};
  if (const auto* b = std::get_if<FamilyB>(&spec))
    return FamilyB{std::min(b->c1, b->c2), std::max(b->c1, b->c2)};
  if (const auto* c = std::get_if<FamilyC>(&spec)) {
    auto q = c->paths;
    std::sort(q.begin(), q.end());
    return FamilyC{q};
  }
  if (const auto* d = std::get_if<FamilyD>(&spec)) return FamilyD{normalize_d_branches(d->branches)};
  if (const auto* e = std::get_if<FamilyE>(&spec)) return FamilyE{normalize_ring_order(e->rings)};
  return FamilyEPrime{normalize_ring_order(std::get<FamilyEPrime>(spec).parts)};
}

// ---- recognition ------------------------------------------------------------

namespace family_detail {

struct Chain {
  int a = -1, b = -1;      // endpoint hubs in discovery order
  int length = 0;          // edge count
};

// Maximal paths between hub vertices through degree-2 interiors. Empty when
// an edge is unreachable from any hub or an interior vertex has degree != 2.
inline std::optional<std::vector<Chain>> decompose_chains(const Graph& g,
                                                          const std::vector<bool>& is_hub) {
  std::vector<bool> edge_used(g.m(), false);
  std::vector<Chain> out;
  for (int h = 0; h < g.n(); ++h) {
    if (!is_hub[h]) continue;
    for (int nb : g.neighbors(h)) {
      if (edge_used[g.edge_index({h, nb})]) continue;
      edge_used[g.edge_index({h, nb})] = true;
      Chain c;
      c.a = h;
      c.length = 1;
      int prev = h, cur = nb;
      while (!is_hub[cur]) {
        const auto& ns = g.neighbors(cur);
        if (ns.size() != 2) return std::nullopt;
        const int nxt = ns[0] == prev ? ns[1] : ns[0];
        edge_used[g.edge_index({cur, nxt})] = true;
        ++c.length;
        prev = cur;
        cur = nxt;
      }
      c.b = cur;
      out.push_back(c);
    }
  }
  for (size_t i = 0; i < edge_used.size(); ++i)
    if (!edge_used[i]) return std::nullopt;
  return out;
}

// Degree census: hubs of the wanted degree, with every other vertex of
// degree 2. Empty when the shape does not hold.
inline std::optional<std::vector<int>> hubs_of_degree(const Graph& g, int hub_degree) {
  std::vector<int> hubs;
  for (int v = 0; v < g.n(); ++v) {
    const int d = g.degree(v);
    if (d == hub_degree) hubs.push_back(v);
    else if (d != 2) return std::nullopt;
  }
  return hubs;
}

}  // namespace family_detail

inline std::optional<FamilyA> recognize_a(const Graph& g) {
  if (g.n() < 6) return std::nullopt;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return std::nullopt;
  const auto lab = component_labels(g);
  const int comps = 1 + *std::max_element(lab.begin(), lab.end());
  if (comps != 2) return std::nullopt;
  std::array<int, 2> size{0, 0};
  for (int l : lab) ++size[l];
  if (size[0] % 2 == 0 || size[1] % 2 == 0) return std::nullopt;
  return FamilyA{std::min(size[0], size[1]), std::max(size[0], size[1])};
}

inline std::optional<FamilyB> recognize_b(const Graph& g) {
  if (g.n() < 5) return std::nullopt;
  const auto hubs = family_detail::hubs_of_degree(g, 4);
  if (!hubs || hubs->size() != 1) return std::nullopt;
  std::vector<bool> is_hub(g.n(), false);
  is_hub[hubs->front()] = true;
  const auto chains = family_detail::decompose_chains(g, is_hub);
  if (!chains || chains->size() != 2) return std::nullopt;
  for (const auto& c : *chains)
    if (c.a != c.b || c.length % 2 == 0 || c.length < 3) return std::nullopt;
  const int l1 = (*chains)[0].length, l2 = (*chains)[1].length;
  return FamilyB{std::min(l1, l2), std::max(l1, l2)};
}

inline std::optional<FamilyC> recognize_c(const Graph& g) {
  const auto hubs = family_detail::hubs_of_degree(g, 4);
  if (!hubs || hubs->size() != 2) return std::nullopt;
  std::vector<bool> is_hub(g.n(), false);
  for (int h : *hubs) is_hub[h] = true;
  const auto chains = family_detail::decompose_chains(g, is_hub);
  if (!chains || chains->size() != 4) return std::nullopt;
  std::array<int, 4> q{};
  int odd = 0, ones = 0;
  for (size_t i = 0; i < 4; ++i) {
    const auto& c = (*chains)[i];
    if (c.a == c.b) return std::nullopt;
    q[i] = c.length;
    if (c.length % 2 == 1) ++odd;
    if (c.length == 1) ++ones;
  }
  if (odd != 2 || ones > 1) return std::nullopt;
  std::sort(q.begin(), q.end());
  return FamilyC{q};
}

inline std::optional<FamilyD> recognize_d(const Graph& g) {
  const auto hubs = family_detail::hubs_of_degree(g, 3);
  if (!hubs || hubs->size() != 4) return std::nullopt;
  std::vector<bool> is_hub(g.n(), false);
  for (int h : *hubs) is_hub[h] = true;
  const auto chains = family_detail::decompose_chains(g, is_hub);
  if (!chains || chains->size() != 6) return std::nullopt;

  auto corner = [&](int v) {
    return static_cast<int>(std::lower_bound(hubs->begin(), hubs->end(), v) - hubs->begin());
  };
  std::array<int, 6> branches{};
  std::array<bool, 6> seen{};
  for (const auto& c : *chains) {
    if (c.a == c.b) return std::nullopt;
    const int t = family_detail::k4_pair_index(corner(c.a), corner(c.b));
    if (seen[t]) return std::nullopt;
    seen[t] = true;
    branches[t] = c.length;
  }
  if (std::all_of(branches.begin(), branches.end(), [](int q) { return q == 1; }))
    return std::nullopt;
  if (!d_parity_case(branches)) return std::nullopt;
  return FamilyD{normalize_d_branches(branches)};
}

inline std::optional<FamilyE> recognize_e(const Graph& g) {
  const auto hubs = family_detail::hubs_of_degree(g, 4);
  if (!hubs || hubs->size() < 2) return std::nullopt;
  const int k = static_cast<int>(hubs->size());
  std::vector<bool> is_hub(g.n(), false);
  for (int h : *hubs) is_hub[h] = true;
  const auto chains = family_detail::decompose_chains(g, is_hub);
  if (!chains || chains->size() != 2 * hubs->size()) return std::nullopt;
  for (const auto& c : *chains)
    if (c.a == c.b) return std::nullopt;

  if (k == 2) {
    std::array<int, 4> len{};
    for (size_t i = 0; i < 4; ++i) len[i] = (*chains)[i].length;
    static constexpr std::array<std::array<int, 4>, 3> kPairings{
        {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    std::optional<FamilyE> best;
    for (const auto& p : kPairings) {
      const int s1 = len[p[0]] + len[p[1]], s2 = len[p[2]] + len[p[3]];
      if (s1 % 2 == 1 || s2 % 2 == 1) continue;
      const int d1 = std::min(len[p[0]], len[p[1]]), d2 = std::min(len[p[2]], len[p[3]]);
      if ((d1 + d2) % 2 == 0) continue;
      FamilyE cand{normalize_ring_order(std::vector<ERing>{{s1, d1}, {s2, d2}})};
      if (!best || cand.rings < best->rings) best = cand;
    }
    return best;
  }

  // each hub must see exactly two distinct partners, each through two chains
  std::map<int, std::vector<int>> partners;
  std::map<std::pair<int, int>, std::vector<int>> pair_lengths;
  for (const auto& c : *chains) {
    partners[c.a].push_back(c.b);
    partners[c.b].push_back(c.a);
    pair_lengths[{std::min(c.a, c.b), std::max(c.a, c.b)}].push_back(c.length);
  }
  for (int h : *hubs) {
    auto& ps = partners[h];
    std::sort(ps.begin(), ps.end());
    if (ps.size() != 4 || ps[0] != ps[1] || ps[2] != ps[3] || ps[1] == ps[2])
      return std::nullopt;
  }

  // walk the hub ring
  std::vector<int> walk{(*hubs)[0]};
  {
    const auto& ps = partners[walk[0]];
    walk.push_back(std::min(ps[0], ps[2]));
  }
  while (static_cast<int>(walk.size()) < k) {
    const auto& ps = partners[walk.back()];
    const int nxt = ps[0] == walk[walk.size() - 2] ? ps[2] : ps[0];
    if (nxt == walk[0]) return std::nullopt;  // closed early: not one ring
    walk.push_back(nxt);
  }
  {
    const auto& ps = partners[walk.back()];
    const int closing = ps[0] == walk[walk.size() - 2] ? ps[2] : ps[0];
    if (closing != walk[0]) return std::nullopt;
  }

  std::vector<ERing> rings(k);
  long long dist_sum = 0;
  for (int i = 0; i < k; ++i) {
    const int a = walk[i], b = walk[(i + 1) % k];
    const auto it = pair_lengths.find({std::min(a, b), std::max(a, b)});
    if (it == pair_lengths.end() || it->second.size() != 2) return std::nullopt;
    const int p = std::min(it->second[0], it->second[1]);
    const int q = std::max(it->second[0], it->second[1]);
    if ((p + q) % 2 == 1) return std::nullopt;
    rings[i] = ERing{p + q, p};
    dist_sum += p;
  }
  if (dist_sum % 2 == 0) return std::nullopt;
  return FamilyE{normalize_ring_order(rings)};
}

// First matching family in the fixed order A, B, C, D, E.
inline std::optional<FamilySpec> recognize_family(const Graph& g) {
  if (auto a = recognize_a(g)) return FamilySpec{*a};
  if (auto b = recognize_b(g)) return FamilySpec{*b};
  if (auto c = recognize_c(g)) return FamilySpec{*c};
  if (auto d = recognize_d(g)) return FamilySpec{*d};
  if (auto e = recognize_e(g)) return FamilySpec{*e};
  return std::nullopt;
}

inline std::optional<FamilyTag> classify(const Graph& g) {
  const auto spec = recognize_family(g);
  if (!spec) return std::nullopt;
  return tag_of(*spec);
}

// Every matching family, for overlap analysis; only C and E may co-occur.
inline std::vector<FamilyTag> matching_tags(const Graph& g) {
  std::vector<FamilyTag> tags;
  if (recognize_a(g)) tags.push_back(FamilyTag::A);
  if (recognize_b(g)) tags.push_back(FamilyTag::B);
  if (recognize_c(g)) tags.push_back(FamilyTag::C);
  if (recognize_d(g)) tags.push_back(FamilyTag::D);
  if (recognize_e(g)) tags.push_back(FamilyTag::E);
  return tags;
}

// ---- compact text form ------------------------------------------------------

inline std::string format_family_spec(const FamilySpec& spec) {
  std::ostringstream out;
  if (const auto* a = std::get_if<FamilyA>(&spec)) {
    out << "A:" << a->c1 << ',' << a->c2;
  } else if (const auto* b = std::get_if<FamilyB>(&spec)) {
    out << "B:" << b->c1 << ',' << b->c2;
  } else if (const auto* c = std::get_if<FamilyC>(&spec)) {
    out << "C:";
    for (int i = 0; i < 4; ++i) out << (i ? "," : "") << c->paths[i];
  } else if (const auto* d = std::get_if<FamilyD>(&spec)) {
    out << "D:";
    for (int i = 0; i < 6; ++i) out << (i ? "," : "") << d->branches[i];
  } else if (const auto* e = std::get_if<FamilyE>(&spec)) {
    out << "E:";
    for (size_t i = 0; i < e->rings.size(); ++i)
      out << (i ? ";" : "") << e->rings[i].cycle_len << ',' << e->rings[i].dist;
  } else {
    const auto& parts = std::get<FamilyEPrime>(spec).parts;
    out << "E':";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out << ';';
      if (parts[i].is_path) out << 'p' << parts[i].len;
      else out << parts[i].len << ',' << parts[i].dist;
    }
  }
  return out.str();
}

namespace family_detail {

inline int parse_spec_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("family spec: empty number");
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("family spec: not a number: \"" + s + "\"");
  }
  if (used != s.size())
    throw std::invalid_argument("family spec: trailing characters in number: \"" + s + "\"");
  return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<int> parse_int_list(const std::string& s, size_t want, const char* family) {
  const auto parts = split(s, ',');
  if (parts.size() != want)
    throw std::invalid_argument(std::string("family spec: family ") + family + " needs " +
                                std::to_string(want) + " comma-separated lengths");
  std::vector<int> out;
  out.reserve(want);
  for (const auto& p : parts) out.push_back(parse_spec_int(p));
  return out;
}

}  // namespace family_detail

// Compact text form, e.g. "A:3,5", "C:1,2,2,3", "D:1,1,2,1,2,2",
// "E:4,1;4,1;4,1", "E':4,1;p2;6,3" ("Ep:" is accepted for E').
inline FamilySpec parse_family_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("family spec: expected \"<family>:<lengths>\"");
  const std::string head = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  using family_detail::parse_int_list;
  using family_detail::parse_spec_int;
  using family_detail::split;

  if (head == "A") {
    const auto v = parse_int_list(rest, 2, "A");
    return FamilyA{v[0], v[1]};
  }
  if (head == "B") {
    const auto v = parse_int_list(rest, 2, "B");
    return FamilyB{v[0], v[1]};
  }
  if (head == "C") {
    const auto v = parse_int_list(rest, 4, "C");
    return FamilyC{{v[0], v[1], v[2], v[3]}};
  }
  if (head == "D") {
    const auto v = parse_int_list(rest, 6, "D");
    return FamilyD{{v[0], v[1], v[2], v[3], v[4], v[5]}};
  }
  if (head == "E") {
    std::vector<ERing> rings;
    for (const auto& part : split(rest, ';')) {
      const auto v = parse_int_list(part, 2, "E");
      rings.push_back(ERing{v[0], v[1]});
    }
    return FamilyE{std::move(rings)};
  }
  if (head == "E'" || head == "Ep") {
    std::vector<EPart> parts;
    for (const auto& part : split(rest, ';')) {
      if (!part.empty() && part[0] == 'p') {
        const int len = parse_spec_int(part.substr(1));
        parts.push_back(EPart{true, len, len});
      } else {
        const auto v = parse_int_list(part, 2, "E'");
        parts.push_back(EPart{false, v[0], v[1]});
      }
    }
    return FamilyEPrime{std::move(parts)};
  }
  throw std::invalid_argument("family spec: unknown family \"" + head + "\"");
}

}  // namespace escrit
