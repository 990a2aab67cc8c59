#pragma once

// Exhaustive sweep over labeled graphs (or a stream of graph6 lines)
// checking that the criticality verdict and the family classification agree
// on every graph, then auditing the structure claims on each nonisomorphic
// critical graph found. Workers process contiguous chunks and results are
// merged in chunk order, so reports are identical for any thread count.

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "escrit/bipartite.hpp"
#include "escrit/blocks.hpp"
#include "escrit/canonical.hpp"
#include "escrit/coloring.hpp"
#include "escrit/criticality.hpp"
#include "escrit/cycle_analysis.hpp"
#include "escrit/families.hpp"
#include "escrit/graph.hpp"
#include "escrit/graph6.hpp"

namespace escrit {

inline constexpr int kMaxExhaustiveN = 7;

class LabeledGraphStream {
 public:
  explicit LabeledGraphStream(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (n > kMaxExhaustiveN)
      throw bound_exceeded("exhaustive enumeration bound exceeded: n=" + std::to_string(n) +
                           " > " + std::to_string(kMaxExhaustiveN));
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) pairs_.emplace_back(u, v);
    total_ = 1ULL << pairs_.size();
  }

  uint64_t total() const { return total_; }

  // bit t of the mask switches pairs in the encoding's column order
  Graph graph_for_mask(uint64_t mask) const {
    std::vector<edge_t> edges;
    for (size_t t = 0; t < pairs_.size(); ++t)
      if ((mask >> t) & 1) edges.push_back(pairs_[t]);
    return Graph(n_, std::move(edges));
  }

  std::optional<Graph> next() {
    if (cursor_ == total_) return std::nullopt;
    return graph_for_mask(cursor_++);
  }

 private:
  int n_ = 0;
  std::vector<edge_t> pairs_;
  uint64_t total_ = 1;
  uint64_t cursor_ = 0;
};

inline LabeledGraphStream enumerate_labeled_graphs(int n) { return LabeledGraphStream{n}; }

struct ScanOptions {
  long long census_cap = 5;
  long long cycle_limit = kDefaultCycleLimit;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

struct ScanRecord {
  int n = 0;
  std::string canonical;  // canonical graph6
  long long labeled_count = 0;
  std::optional<FamilyTag> tag;
  std::optional<FamilySpec> spec;
  OddCycleCensus census;
  std::optional<bool> pairwise_intersection;  // audited when >= 3 odd cycles
  std::optional<bool> nonseparable;           // audited when >= 3 odd cycles
  bool share_edge_after_each_deletion = false;
};

struct ScanViolation {
  std::string kind;
  std::string graph6;
  std::string detail;
};

struct ScanError {
  std::string where;
  std::string message;
};

struct ScanReport {
  std::string source;  // "exhaustive" or "stream"
  int n_min = 0, n_max = 0;
  long long census_cap = 5;
  long long total = 0;
  long long isolated_skipped = 0;
  long long bipartite_skipped = 0;
  long long examined = 0;
  long long three_chromatic = 0;
  long long critical_labeled = 0;
  std::vector<ScanRecord> records;  // sorted by (n, canonical)
  std::vector<ScanViolation> violations;
  std::vector<ScanError> errors;
};

namespace scan_detail {

struct Slot {
  long long total = 0, isolated = 0, bipartite = 0, examined = 0, chi3 = 0, critical = 0;
  std::map<std::string, long long> by_canonical;
  std::vector<ScanViolation> violations;
  std::vector<ScanError> errors;
};

inline void examine(const Graph& g, Slot& slot) {
  ++slot.total;
  if (has_isolated_vertex(g)) {
    ++slot.isolated;
    return;
  }
  if (is_bipartite(g)) {
    ++slot.bipartite;
    return;
  }
  ++slot.examined;
  try {
    const bool chi3 = is_k_colorable(g, 3);
    if (chi3) ++slot.chi3;
    const bool critical = chi3 && criticality_detail::is_32_critical_given_chi3(g);
    const auto tags = matching_tags(g);
    std::string tag_list;
    for (auto t : tags) {
      if (!tag_list.empty()) tag_list += ",";
      tag_list += tag_name(t);
    }
    if (critical != !tags.empty())
      slot.violations.push_back({"classification_mismatch", to_graph6(g),
                                 critical ? "critical but matches no family"
                                          : "matches " + tag_list + " but is not critical"});
    if (tags.size() > 1 &&
        !(tags.size() == 2 && tags[0] == FamilyTag::C && tags[1] == FamilyTag::E))
      slot.violations.push_back({"family_overlap", to_graph6(g), "matches " + tag_list});
    if (critical) {
      ++slot.critical;
      slot.by_canonical[canonical_form(g)] += 1;
    }
  } catch (const std::exception& ex) {
    slot.errors.push_back({"graph " + to_graph6(g), ex.what()});
  }
}

inline void audit_record(const std::string& canon, long long labeled, const ScanOptions& opts,
                         ScanReport& report) {
  ScanRecord rec;
  rec.canonical = canon;
  rec.labeled_count = labeled;
  try {
    const Graph rep = parse_graph6(canon);
    rec.n = rep.n();
    if (auto spec = recognize_family(rep)) {
      rec.spec = spec;
      rec.tag = tag_of(*spec);
    }
    rec.census = count_odd_cycles(rep, opts.census_cap);

    if (count_odd_cycles(rep, 3).count >= 3) {
      const auto pi = pairwise_intersection_property(rep, opts.cycle_limit);
      rec.pairwise_intersection = pi;
      if (!pi)
        report.errors.push_back(
            {"graph " + canon, "pairwise intersection indeterminate at cycle limit"});
      else if (!*pi)
        report.violations.push_back(
            {"pairwise_intersection", canon, "two odd cycles share at most one vertex"});
      const bool ns = is_nonseparable(rep);
      rec.nonseparable = ns;
      if (!ns)
        report.violations.push_back(
            {"nonseparable", canon, "three or more odd cycles but a cut vertex"});
    }

    bool share_all = true;
    for (auto e : rep.edges()) {
      const auto sh = all_odd_cycles_share_edge(rep.without_edge(e), opts.cycle_limit);
      if (!sh) {
        share_all = false;
        report.errors.push_back(
            {"graph " + canon, "shared-edge audit indeterminate at cycle limit"});
        break;
      }
      if (!*sh) {
        share_all = false;
        report.violations.push_back(
            {"shared_edge_after_deletion", canon,
             "deleting (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                 ") leaves odd cycles with no common edge"});
        break;
      }
    }
    rec.share_edge_after_each_deletion = share_all;

    // at most four odd cycles outside the ring family, at least eight inside
    const auto c5 = count_odd_cycles(rep, 5);
    if (rec.tag) {
      const bool ring_family = *rec.tag == FamilyTag::E;
      if (c5.saturated && !ring_family)
        report.violations.push_back(
            {"census_threshold", canon, "five or more odd cycles outside the ring family"});
      if (!c5.saturated && ring_family)
        report.violations.push_back({"census_threshold", canon,
                                     "ring family graph with only " +
                                         std::to_string(c5.count) + " odd cycles"});
    }
  } catch (const std::exception& ex) {
    report.errors.push_back({"graph " + canon, ex.what()});
  }
  report.records.push_back(std::move(rec));
}

inline ScanReport merge(std::vector<Slot>&& slots, ScanReport report, const ScanOptions& opts) {
  std::map<std::string, long long> by_canonical;
  for (auto& s : slots) {
    report.total += s.total;
    report.isolated_skipped += s.isolated;
    report.bipartite_skipped += s.bipartite;
    report.examined += s.examined;
    report.three_chromatic += s.chi3;
    report.critical_labeled += s.critical;
    for (const auto& [key, cnt] : s.by_canonical) by_canonical[key] += cnt;
    report.violations.insert(report.violations.end(), s.violations.begin(), s.violations.end());
    report.errors.insert(report.errors.end(), s.errors.begin(), s.errors.end());
  }
  for (const auto& [canon, cnt] : by_canonical) audit_record(canon, cnt, opts, report);
  std::sort(report.records.begin(), report.records.end(), [](const auto& a, const auto& b) {
    return std::pair{a.n, a.canonical} < std::pair{b.n, b.canonical};
  });
  return report;
}

inline void validate_options(const ScanOptions& opts) {
  if (opts.census_cap < 1) throw std::invalid_argument("census cap must be positive");
  if (opts.cycle_limit < 1) throw std::invalid_argument("cycle limit must be positive");
}

template <typename ChunkFn>
inline void run_chunks(size_t chunk_count, unsigned threads, ChunkFn&& fn) {
  if (threads <= 1 || chunk_count <= 1) {
    for (size_t i = 0; i < chunk_count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next.fetch_add(1); i < chunk_count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  const unsigned count = std::min<size_t>(threads, chunk_count);
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

}  // namespace scan_detail

inline ScanReport characterization_scan(int n_min, int n_max, const ScanOptions& opts = {}) {
  if (n_min < 0 || n_max < n_min)
    throw std::invalid_argument("vertex range must satisfy 0 <= n_min <= n_max");
  if (n_max > kMaxExhaustiveN)
    throw bound_exceeded("exhaustive enumeration bound exceeded: n=" + std::to_string(n_max) +
                         " > " + std::to_string(kMaxExhaustiveN));
  scan_detail::validate_options(opts);
  const unsigned threads =
      opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());

  struct Chunk {
    int n;
    uint64_t lo, hi;
  };
  std::vector<Chunk> chunks;
  for (int n = n_min; n <= n_max; ++n) {
    const uint64_t total = 1ULL << (n * (n - 1) / 2);
    const uint64_t want = static_cast<uint64_t>(threads) * 4;
    const uint64_t step = std::max<uint64_t>(1024, (total + want - 1) / want);
    for (uint64_t lo = 0; lo < total; lo += step) chunks.push_back({n, lo, std::min(total, lo + step)});
  }

  std::vector<scan_detail::Slot> slots(chunks.size());
  scan_detail::run_chunks(chunks.size(), threads, [&](size_t i) {
    const auto& c = chunks[i];
    const LabeledGraphStream stream(c.n);
    for (uint64_t mask = c.lo; mask < c.hi; ++mask)
      scan_detail::examine(stream.graph_for_mask(mask), slots[i]);
  });

  ScanReport report;
  report.source = "exhaustive";
  report.n_min = n_min;
  report.n_max = n_max;
  report.census_cap = opts.census_cap;
  return scan_detail::merge(std::move(slots), std::move(report), opts);
}

// Scan graphs given as graph6 lines; blank lines are ignored, malformed
// lines become error entries.
inline ScanReport scan_graph6_lines(const std::vector<std::string>& lines,
                                    const ScanOptions& opts = {}) {
  scan_detail::validate_options(opts);
  const unsigned threads =
      opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());

  struct Chunk {
    size_t lo, hi;
  };
  std::vector<Chunk> chunks;
  const size_t step =
      std::max<size_t>(64, (lines.size() + threads * 4 - 1) / std::max<size_t>(1, threads * 4));
  for (size_t lo = 0; lo < lines.size(); lo += step)
    chunks.push_back({lo, std::min(lines.size(), lo + step)});

  std::vector<scan_detail::Slot> slots(chunks.size());
  scan_detail::run_chunks(chunks.size(), threads, [&](size_t i) {
    for (size_t line = chunks[i].lo; line < chunks[i].hi; ++line) {
      std::string text = lines[line];
      while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
      if (text.empty()) continue;
      Graph g;
      try {
        g = parse_graph6(text);
      } catch (const std::exception& ex) {
        slots[i].errors.push_back({"line " + std::to_string(line + 1), ex.what()});
        continue;
      }
      scan_detail::examine(g, slots[i]);
    }
  });

  ScanReport report;
  report.source = "stream";
  report.census_cap = opts.census_cap;
  return scan_detail::merge(std::move(slots), std::move(report), opts);
}

}  // namespace escrit
