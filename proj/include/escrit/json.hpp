#pragma once

// JSON views of the library's report types. Everything uses ordered maps so
// serializations are byte-stable.

#include <json.hpp>

#include "escrit/criticality.hpp"
#include "escrit/ears.hpp"
#include "escrit/families.hpp"
#include "escrit/graph.hpp"
#include "escrit/graph6.hpp"
#include "escrit/scan.hpp"
#include "escrit/stability.hpp"

namespace escrit {

using json = nlohmann::ordered_json;

inline json edge_json(edge_t e) { return json::array({e.first, e.second}); }

inline json edges_json(const std::vector<edge_t>& es) {
  json a = json::array();
  for (auto e : es) a.push_back(edge_json(e));
  return a;
}

inline json graph_json(const Graph& g) {
  json j;
  j["n"] = g.n();
  j["m"] = g.m();
  j["graph6"] = to_graph6(g);
  j["edges"] = edges_json(g.edges());
  return j;
}

inline json census_json(const OddCycleCensus& c) {
  json j;
  j["count"] = c.count;
  j["cap"] = c.cap;
  j["saturated"] = c.saturated;
  return j;
}

inline json stability_json(const StabilityReport& r) {
  json j;
  j["chromatic_number"] = r.chi;
  j["edge_stability_number"] = r.es;
  j["witness"] = edges_json(r.witness);
  return j;
}

inline json co_removal_json(const CoRemovalSet& r) {
  json j;
  j["edge"] = edge_json(r.edge);
  j["partners"] = edges_json(r.partners);
  return j;
}

inline json family_spec_json(const FamilySpec& spec) {
  json j;
  j["family"] = tag_name(tag_of(spec));
  j["spec"] = format_family_spec(spec);
  if (const auto* a = std::get_if<FamilyA>(&spec)) {
    j["cycle_lengths"] = json::array({a->c1, a->c2});
  } else if (const auto* b = std::get_if<FamilyB>(&spec)) {
    j["cycle_lengths"] = json::array({b->c1, b->c2});
  } else if (const auto* c = std::get_if<FamilyC>(&spec)) {
    j["path_lengths"] = json(c->paths);
  } else if (const auto* d = std::get_if<FamilyD>(&spec)) {
    j["branch_lengths"] = json(d->branches);
    j["case"] = d_case_label(*d_parity_case(d->branches));
  } else if (const auto* e = std::get_if<FamilyE>(&spec)) {
    json rings = json::array();
    for (const auto& r : e->rings) {
      json rj;
      rj["cycle_length"] = r.cycle_len;
      rj["distance"] = r.dist;
      rings.push_back(rj);
    }
    j["rings"] = rings;
  } else {
    json parts = json::array();
    for (const auto& p : std::get<FamilyEPrime>(spec).parts) {
      json pj;
      if (p.is_path) {
        pj["path_length"] = p.len;
      } else {
        pj["cycle_length"] = p.len;
        pj["distance"] = p.dist;
      }
      parts.push_back(pj);
    }
    j["parts"] = parts;
  }
  return j;
}

inline json criticality_json(const CriticalityReport& r) {
  json j;
  j["chromatic_number"] = r.chi;
  j["edge_stability_number"] = r.es;
  j["is_edge_stability_critical"] = r.is_edge_stability_critical;
  j["criticality"] = r.k_l ? json::array({r.k_l->first, r.k_l->second}) : json(nullptr);
  j["odd_cycle_census"] = census_json(r.odd_cycle_census);
  j["nonseparable"] = r.nonseparable;
  json per_edge = json::array();
  for (const auto& pe : r.per_edge) {
    json pj;
    pj["edge"] = edge_json(pe.edge);
    pj["es_after_removal"] = pe.es_after_removal ? json(*pe.es_after_removal) : json(nullptr);
    pj["partner"] = pe.partner ? edge_json(*pe.partner) : json(nullptr);
    per_edge.push_back(pj);
  }
  j["per_edge"] = per_edge;
  j["internal_errors"] = json(r.internal_errors);
  return j;
}

inline json ear_json(const Ear& ear) {
  json j;
  j["path"] = json(ear.path);
  j["length"] = ear.length();
  return j;
}

inline json subgraph_json(const Subgraph& s) {
  json j;
  j["vertices"] = json(s.vertices);
  j["edges"] = edges_json(s.edges);
  return j;
}

inline json scan_json(const ScanReport& r) {
  json j;
  j["source"] = r.source;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["census_cap"] = r.census_cap;
  json totals;
  totals["graphs"] = r.total;
  totals["isolated_skipped"] = r.isolated_skipped;
  totals["bipartite_skipped"] = r.bipartite_skipped;
  totals["examined"] = r.examined;
  totals["three_chromatic"] = r.three_chromatic;
  totals["critical_labeled"] = r.critical_labeled;
  totals["critical_nonisomorphic"] = static_cast<long long>(r.records.size());
  j["totals"] = totals;
  json records = json::array();
  for (const auto& rec : r.records) {
    json rj;
    rj["n"] = rec.n;
    rj["graph6"] = rec.canonical;
    rj["labeled_count"] = rec.labeled_count;
    rj["family"] = rec.spec ? family_spec_json(*rec.spec) : json(nullptr);
    rj["odd_cycle_census"] = census_json(rec.census);
    rj["pairwise_intersection"] =
        rec.pairwise_intersection ? json(*rec.pairwise_intersection) : json(nullptr);
    rj["nonseparable"] = rec.nonseparable ? json(*rec.nonseparable) : json(nullptr);
    rj["odd_cycles_share_edge_after_each_deletion"] = rec.share_edge_after_each_deletion;
    records.push_back(rj);
  }
  j["records"] = records;
  json violations = json::array();
  for (const auto& v : r.violations) {
    json vj;
    vj["kind"] = v.kind;
    vj["graph6"] = v.graph6;
    vj["detail"] = v.detail;
    violations.push_back(vj);
  }
  j["violations"] = violations;
  json errors = json::array();
  for (const auto& e : r.errors) {
    json ej;
    ej["where"] = e.where;
    ej["message"] = e.message;
    errors.push_back(ej);
  }
  j["errors"] = errors;
  return j;
}

}  // namespace escrit
