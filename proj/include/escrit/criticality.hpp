#pragma once

// Edge-stability criticality. The literal test compares the edge stability
// number of each single-edge deletion (measured against the deleted graph's
// own chromatic number) with the original. is_k_l_critical additionally
// offers the l=2 characterization: chi stays at k after any deletion, and
// some second deletion then drops it to k-1.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "escrit/bipartite.hpp"
#include "escrit/blocks.hpp"
#include "escrit/coloring.hpp"
#include "escrit/cycle_analysis.hpp"
#include "escrit/graph.hpp"
#include "escrit/stability.hpp"

namespace escrit {

namespace criticality_detail {

// (3,2)-criticality check for a graph already known to be 3-chromatic,
// entirely through 2-coloring probes with skipped edges.
inline bool is_32_critical_given_chi3(const Graph& g) {
  const auto& E = g.edges();
  std::vector<int> scratch;
  // a frustration edge, if any, lies on this cycle; es == 1 rejects early
  const auto odd = std::get<Cycle>(bipartition_or_odd_cycle(g));
  for (auto e : odd.edge_set())
    if (is_bipartite_skipping(g, e, kNoEdge, scratch)) return false;
  for (auto e : E) {
    if (is_bipartite_skipping(g, e, kNoEdge, scratch)) return false;
    bool found = false;
    for (auto f : E) {
      if (f == e) continue;
      if (is_bipartite_skipping(g, e, f, scratch)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace criticality_detail

// Literal definition: es is defined for g and every single-edge deletion,
// and each deletion strictly lowers it.
inline bool is_edge_stability_critical(const Graph& g) {
  if (g.m() == 0)
    throw std::invalid_argument("edge-stability criticality needs at least one edge");
  const StabilityReport base = edge_stability_number(g);
  for (auto e : g.edges()) {
    const Graph h = g.without_edge(e);
    if (h.m() == 0) return false;  // es undefined after the deletion
    int es_h = 0;
    try {
      es_h = edge_stability_number(h).es;
    } catch (const bound_exceeded&) {
      if (base.es <= kEsSearchBound) return false;  // es(h) exceeds the bound, so >= es(g)
      throw;
    }
    if (es_h >= base.es) return false;
  }
  return true;
}

inline bool is_k_l_critical(const Graph& g, int k, int l) {
  if (k < 2) throw std::invalid_argument("criticality parameter k must be at least 2");
  if (l < 1) throw std::invalid_argument("criticality parameter l must be at least 1");

  if (l == 2) {
    if (chromatic_number(g) != k) return false;
    if (k == 3) return criticality_detail::is_32_critical_given_chi3(g);
    for (auto e : g.edges()) {
      const Graph h = g.without_edge(e);
      if (is_k_colorable(h, k - 1)) return false;
      bool found = false;
      for (auto f : h.edges()) {
        const Graph h2 = h.without_edge(f);
        if (is_k_colorable(h2, k - 1) && !is_k_colorable(h2, k - 2)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  StabilityReport base;
  try {
    base = edge_stability_number(g);
  } catch (const bound_exceeded&) {
    if (l <= kEsSearchBound) return false;  // es(g) exceeds the bound, so != l
    throw;
  }
  if (base.chi != k || base.es != l) return false;
  for (auto e : g.edges()) {
    const Graph h = g.without_edge(e);
    if (h.m() == 0) return false;
    int es_h = 0;
    try {
      es_h = edge_stability_number(h).es;
    } catch (const bound_exceeded&) {
      return false;  // es(h) exceeds the bound, so >= l
    }
    if (es_h >= l) return false;
  }
  return true;
}

struct PerEdgeStability {
  edge_t edge{};
  // empty when undefined after the deletion or beyond the search bound
  std::optional<int> es_after_removal;
  // 3-chromatic graphs: least f whose joint removal with edge 2-colors g
  std::optional<edge_t> partner;
};

struct CriticalityReport {
  int chi = 0;
  int es = 0;
  bool is_edge_stability_critical = false;
  std::optional<std::pair<int, int>> k_l;
  OddCycleCensus odd_cycle_census;
  bool nonseparable = false;
  std::vector<PerEdgeStability> per_edge;
  std::vector<std::string> internal_errors;
};

inline CriticalityReport criticality_report(const Graph& g, long long census_cap = 5) {
  if (g.m() == 0) throw std::invalid_argument("criticality report needs at least one edge");
  CriticalityReport r;
  const StabilityReport base = edge_stability_number(g);
  r.chi = base.chi;
  r.es = base.es;

  bool critical = true;
  std::vector<int> scratch;
  for (auto e : g.edges()) {
    PerEdgeStability pe;
    pe.edge = e;
    const Graph h = g.without_edge(e);
    if (h.m() > 0) {
      try {
        pe.es_after_removal = edge_stability_number(h).es;
      } catch (const bound_exceeded&) {
      }
    }
    if (r.chi == 3) {
      for (auto f : g.edges()) {
        if (f == e) continue;
        if (is_bipartite_skipping(g, e, f, scratch)) {
          pe.partner = f;
          break;
        }
      }
    }
    if (!pe.es_after_removal || *pe.es_after_removal >= r.es) critical = false;
    r.per_edge.push_back(pe);
  }
  r.is_edge_stability_critical = critical;
  if (critical) r.k_l = std::pair<int, int>{r.chi, r.es};
  r.odd_cycle_census = count_odd_cycles(g, census_cap);
  r.nonseparable = is_nonseparable(g);

  // Cross-checks: the two criticality routes must agree, and critical graphs
  // with three or more odd cycles must be nonseparable with pairwise
  // intersecting odd cycles.
  if (r.chi == 3 && r.es == 2) {
    if (is_k_l_critical(g, 3, 2) != critical)
      r.internal_errors.push_back("criticality routes disagree");
  }
  if (critical && r.chi == 3 && r.es == 2 && count_odd_cycles(g, 3).count >= 3) {
    const auto pi = pairwise_intersection_property(g);
    if (!pi.has_value())
      r.internal_errors.push_back("pairwise odd-cycle intersection indeterminate at cycle limit");
    else if (!*pi)
      r.internal_errors.push_back("pairwise odd-cycle intersection violated");
    if (!r.nonseparable) r.internal_errors.push_back("critical graph with a cut vertex");
  }
  return r;
}

}  // namespace escrit
