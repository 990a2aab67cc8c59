// Command-line front end: analyze graphs for edge-stability criticality,
// compute stability numbers, build and classify family members, run the
// characterization scan, and extract open ears. JSON on stdout, human
// summaries and diagnostics on stderr.
//
// Exit codes: 0 success, 1 negative domain verdict (--expect-critical unmet,
// scan with violations), 2 usage or input errors and exceeded bounds.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "escrit/json.hpp"

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open file: " + path);
  return slurp(file);
}

std::string first_nonblank_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = line;
    while (!t.empty() && (t.back() == '\r' || t.back() == ' ' || t.back() == '\t')) t.pop_back();
    if (!t.empty()) return t;
  }
  throw std::invalid_argument("empty graph input");
}

// --g6 wins, then --edges; otherwise stdin, where a leading digit means the
// "n m" edge-list format and anything else is read as one graph6 line.
escrit::Graph load_graph(const std::string& g6, const std::string& edges_path) {
  if (!g6.empty() && !edges_path.empty())
    throw std::invalid_argument("pass at most one of --g6 and --edges");
  if (!g6.empty()) return escrit::parse_graph6(g6);
  if (!edges_path.empty()) return escrit::parse_edge_list(read_input(edges_path));
  const std::string text = slurp(std::cin);
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw std::invalid_argument("empty graph input");
  if (std::isdigit(static_cast<unsigned char>(text[i]))) return escrit::parse_edge_list(text);
  return escrit::parse_graph6(first_nonblank_line(text));
}

std::vector<escrit::edge_t> parse_edge_pairs(const std::string& text) {
  std::vector<escrit::edge_t> edges;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("expected u-v in edge list item: \"" + item + "\"");
    try {
      edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad edge list item: \"" + item + "\"");
    }
  }
  if (edges.empty()) throw std::invalid_argument("empty edge list");
  return edges;
}

void print_json(const escrit::json& j) { std::cout << j.dump(2) << "\n"; }

long long default_cycle_limit() {
  if (const char* env = std::getenv("ESCRIT_MAX_CYCLES")) {
    try {
      const long long v = std::stoll(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("ESCRIT_MAX_CYCLES must be a positive integer");
  }
  return escrit::kDefaultCycleLimit;
}

void analyze_summary(const escrit::CriticalityReport& r) {
  std::ostringstream out;
  out << "chromatic number      " << r.chi << "\n";
  out << "edge stability        " << r.es << "\n";
  out << "critical              " << (r.is_edge_stability_critical ? "yes" : "no") << "\n";
  if (r.k_l) out << "criticality           (" << r.k_l->first << "," << r.k_l->second << ")\n";
  out << "odd cycles            " << (r.odd_cycle_census.saturated ? ">= " : "")
      << r.odd_cycle_census.count << "\n";
  out << "nonseparable          " << (r.nonseparable ? "yes" : "no") << "\n";
  std::cerr << out.str();
}

void scan_summary(const escrit::ScanReport& r) {
  std::ostringstream out;
  out << "graphs " << r.total << ", isolated skipped " << r.isolated_skipped
      << ", bipartite skipped " << r.bipartite_skipped << ", examined " << r.examined
      << ", 3-chromatic " << r.three_chromatic << ", critical " << r.critical_labeled << " ("
      << r.records.size() << " nonisomorphic)\n";
  for (const auto& rec : r.records) {
    out << "  n=" << rec.n << "  " << rec.canonical << "  "
        << (rec.spec ? escrit::format_family_spec(*rec.spec) : std::string("unclassified"))
        << "  odd cycles " << (rec.census.saturated ? ">= " : "") << rec.census.count << "\n";
  }
  if (!r.violations.empty()) out << "violations: " << r.violations.size() << "\n";
  if (!r.errors.empty()) out << "errors: " << r.errors.size() << "\n";
  std::cerr << out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-stability criticality toolkit"};
  app.require_subcommand(1);

  std::string g6, edges_path, stream_path, spec_text, seed_text;
  long long cap = 5;
  long long cycle_limit = -1;
  unsigned threads = 0;
  int scan_n = -1;
  bool expect_critical = false, summary = false, decompose = false;
  int exit_code = 0;

  auto add_graph_opts = [&](CLI::App* cmd) {
    cmd->add_option("--g6", g6, "graph6 string");
    cmd->add_option("--edges", edges_path, "edge list file (\"n m\" header), - for stdin");
  };

  auto* analyze = app.add_subcommand("analyze", "full criticality report");
  add_graph_opts(analyze);
  analyze->add_option("--cap", cap, "odd cycle census cap (default 5)");
  analyze->add_flag("--expect-critical", expect_critical, "exit 1 unless critical");
  analyze->add_flag("--summary", summary, "human summary on stderr");
  analyze->callback([&] {
    const auto g = load_graph(g6, edges_path);
    const auto r = escrit::criticality_report(g, cap);
    escrit::json j = escrit::json::object();
    j["graph"] = escrit::graph_json(g);
    j.update(escrit::criticality_json(r));
    print_json(j);
    if (summary) analyze_summary(r);
    if (expect_critical && !r.is_edge_stability_critical) exit_code = 1;
  });

  auto* es = app.add_subcommand("es", "edge stability number and witness");
  add_graph_opts(es);
  es->callback([&] {
    const auto g = load_graph(g6, edges_path);
    const auto r = escrit::edge_stability_number(g);
    escrit::json j = escrit::json::object();
    j["graph"] = escrit::graph_json(g);
    j.update(escrit::stability_json(r));
    print_json(j);
  });

  auto* build = app.add_subcommand("build", "construct a family member");
  build->add_option("spec", spec_text, "family spec, e.g. A:3,5 or E:4,1;4,1;4,1")->required();
  build->callback([&] {
    const auto spec = escrit::parse_family_spec(spec_text);
    const auto g = escrit::build_family(spec);
    escrit::json j = escrit::json::object();
    j["spec"] = escrit::family_spec_json(spec);
    j["graph"] = escrit::graph_json(g);
    print_json(j);
  });

  auto* classify = app.add_subcommand("classify", "recognize family membership");
  add_graph_opts(classify);
  classify->callback([&] {
    const auto g = load_graph(g6, edges_path);
    const auto spec = escrit::recognize_family(g);
    escrit::json j = escrit::json::object();
    j["graph"] = escrit::graph_json(g);
    j["family"] = spec ? escrit::family_spec_json(*spec) : escrit::json(nullptr);
    print_json(j);
  });

  auto* scan = app.add_subcommand("scan", "characterization scan");
  scan->add_option("--n", scan_n, "exhaustive scan over 1..N vertices (N <= 7)");
  scan->add_option("--stream", stream_path, "graph6 lines file, - for stdin");
  scan->add_option("--cap", cap, "odd cycle census cap (default 5)");
  scan->add_option("--threads", threads, "worker threads (default: hardware)");
  scan->add_option("--cycle-limit", cycle_limit,
                   "cycle enumeration limit (default ESCRIT_MAX_CYCLES or 1000000)");
  scan->add_flag("--summary", summary, "human summary on stderr");
  scan->callback([&] {
    if ((scan_n < 0) == stream_path.empty())
      throw std::invalid_argument("pass exactly one of --n and --stream");
    escrit::ScanOptions opts;
    opts.census_cap = cap;
    opts.cycle_limit = cycle_limit >= 1 ? cycle_limit : default_cycle_limit();
    opts.threads = threads;
    escrit::ScanReport report;
    if (scan_n >= 0) {
      report = escrit::characterization_scan(1, scan_n, opts);
    } else {
      std::istringstream lines_in(read_input(stream_path));
      std::vector<std::string> lines;
      std::string line;
      while (std::getline(lines_in, line)) lines.push_back(line);
      report = escrit::scan_graph6_lines(lines, opts);
    }
    print_json(escrit::scan_json(report));
    if (summary) scan_summary(report);
    if (!report.violations.empty() || !report.errors.empty()) exit_code = 1;
  });

  auto* ear = app.add_subcommand("ear", "open ear against a host subgraph");
  add_graph_opts(ear);
  ear->add_option("--seed", seed_text, "host edges as u-v pairs, e.g. 0-1,1-2,2-0")->required();
  ear->add_flag("--all", decompose, "full ear decomposition");
  ear->callback([&] {
    const auto g = load_graph(g6, edges_path);
    const auto seed = escrit::subgraph_from_edges(parse_edge_pairs(seed_text));
    escrit::json j = escrit::json::object();
    j["graph"] = escrit::graph_json(g);
    j["seed"] = escrit::subgraph_json(seed);
    escrit::json ears = escrit::json::array();
    if (decompose) {
      for (const auto& e : escrit::ear_decomposition(g, seed)) ears.push_back(escrit::ear_json(e));
    } else {
      ears.push_back(escrit::ear_json(escrit::find_open_ear(g, seed)));
    }
    j["ears"] = ears;
    print_json(j);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const escrit::bound_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
