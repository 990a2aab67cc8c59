#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "escrit/canonical.hpp"
#include "escrit/criticality.hpp"
#include "escrit/cycle_analysis.hpp"
#include "escrit/families.hpp"
#include "oracles.hpp"

using escrit::edge_t;
using escrit::FamilySpec;
using escrit::Graph;

namespace {

std::vector<FamilySpec> sample_specs() {
  return {
      escrit::FamilyA{3, 3},
      escrit::FamilyA{3, 7},
      escrit::FamilyA{5, 5},
      escrit::FamilyB{3, 3},
      escrit::FamilyB{3, 5},
      escrit::FamilyB{5, 7},
      escrit::FamilyC{{1, 2, 2, 3}},
      escrit::FamilyC{{2, 2, 3, 3}},
      escrit::FamilyC{{1, 3, 4, 4}},
      escrit::FamilyC{{2, 3, 3, 4}},
      escrit::FamilyD{{1, 1, 1, 1, 1, 3}},
      escrit::FamilyD{{1, 3, 1, 1, 3, 3}},
      escrit::FamilyD{{1, 1, 2, 1, 2, 2}},
      escrit::FamilyD{{1, 2, 1, 2, 1, 2}},
      escrit::FamilyD{{1, 2, 2, 2, 2, 1}},
      escrit::FamilyE{{{4, 1}, {4, 2}}},
      escrit::FamilyE{{{4, 1}, {6, 2}}},
      escrit::FamilyE{{{4, 1}, {4, 1}, {4, 1}}},
      escrit::FamilyE{{{4, 1}, {4, 2}, {6, 2}}},
      escrit::FamilyE{{{4, 2}, {4, 2}, {4, 1}, {4, 2}}},
  };
}

}  // namespace

TEST_CASE("spec validation accepts the sample grid") {
  for (const auto& spec : sample_specs()) {
    INFO(escrit::format_family_spec(spec));
    CHECK(escrit::validate_spec(spec).empty());
  }
}

TEST_CASE("spec validation rejects malformed parameters") {
  CHECK_FALSE(escrit::validate_spec(escrit::FamilyA{4, 3}).empty());
  CHECK_FALSE(escrit::validate_spec(escrit::FamilyA{3, 1}).empty());
  CHECK_FALSE(escrit::validate_spec(escrit::FamilyB{2, 5}).empty());
  CHECK_FALSE(escrit::validate_spec(escrit::FamilyC{{1, 1, 2, 3}}).empty());  // two unit paths
  CHECK_FALSE(escrit::validate_spec(escrit::FamilyC{{1, 2, 3, 3}}).empty());  // odd count off
  CHECK_FALSE(escrit::validate_spec(escrit::FamilyC{{0, 2, 2, 3}}).empty());
  CHECK_FALSE(escrit::validate_spec(escrit::FamilyD{{1, 1, 1, 1, 1, 2}}).empty());  // parity case
  CHECK_FALSE(
      escrit::validate_spec(escrit::FamilyD{{1, 1, 1, 1, 1, 1}}).empty());  // unsubdivided
  CHECK_FALSE(escrit::validate_spec(escrit::FamilyD{{2, 2, 2, 2, 2, 2}}).empty());  // no odd pair
  CHECK_FALSE(escrit::validate_spec(escrit::FamilyD{{1, 1, 2, 2, 2, 1}}).empty());  // odd path form
  CHECK_FALSE(escrit::validate_spec(escrit::FamilyE{{{4, 1}}}).empty());            // one ring
  CHECK_FALSE(escrit::validate_spec(escrit::FamilyE{{{4, 1}, {5, 2}}}).empty());    // odd ring
  CHECK_FALSE(escrit::validate_spec(escrit::FamilyE{{{4, 1}, {4, 3}}}).empty());    // distance high
  CHECK_FALSE(escrit::validate_spec(escrit::FamilyE{{{4, 1}, {4, 1}}}).empty());    // even sum
  CHECK_FALSE(escrit::validate_spec(escrit::FamilyE{{{2, 1}, {4, 2}}}).empty());    // short ring
}

TEST_CASE("parity case of branch sextuples") {
  using escrit::DCase;
  CHECK(escrit::d_parity_case({1, 1, 1, 1, 1, 1}) == DCase::AllOdd);
  CHECK(escrit::d_parity_case({1, 1, 1, 1, 1, 3}) == DCase::AllOdd);
  CHECK(escrit::d_parity_case({1, 1, 2, 1, 2, 2}) == DCase::OddTriangle);
  CHECK(escrit::d_parity_case({1, 2, 2, 2, 2, 1}) == DCase::OddMatching);
  CHECK_FALSE(escrit::d_parity_case({1, 1, 2, 2, 2, 1}).has_value());  // three odd on a path
  CHECK_FALSE(escrit::d_parity_case({1, 1, 2, 2, 2, 2}).has_value());  // two odd share a corner
  CHECK_FALSE(escrit::d_parity_case({2, 2, 2, 2, 2, 2}).has_value());
  CHECK(std::string(escrit::d_case_label(DCase::AllOdd)) == "i");
  CHECK(std::string(escrit::d_case_label(DCase::OddTriangle)) == "ii");
  CHECK(std::string(escrit::d_case_label(DCase::OddMatching)) == "iii");
}

TEST_CASE("frozen constructions") {
  CHECK(escrit::build_family(escrit::FamilyA{3, 3}) ==
        oracle::disjoint_union(oracle::cycle_graph(3), oracle::cycle_graph(3)));

  const Graph b33 = escrit::build_family(escrit::FamilyB{3, 3});
  const Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(escrit::canonical_form(b33) == escrit::canonical_form(bowtie));

  const Graph c = escrit::build_family(escrit::FamilyC{{1, 2, 2, 3}});
  CHECK(c == Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {4, 5}}));

  const Graph d = escrit::build_family(escrit::FamilyD{{1, 1, 1, 1, 1, 3}});
  CHECK(d == Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}}));

  CHECK_THROWS_AS(escrit::build_family(escrit::FamilyD{{1, 1, 1, 1, 1, 1}}),
                  std::invalid_argument);

  const Graph e = escrit::build_family(escrit::FamilyE{{{4, 1}, {4, 2}}});
  CHECK(e.n() == 6);
  CHECK(e.m() == 8);
  CHECK(escrit::canonical_form(e) ==
        escrit::canonical_form(escrit::build_family(escrit::FamilyC{{1, 2, 2, 3}})));

  CHECK_THROWS_AS(escrit::build_family(escrit::FamilyA{4, 3}), std::invalid_argument);
}

TEST_CASE("necklace layout geometry") {
  const escrit::FamilyE spec{{{4, 1}, {6, 2}, {4, 2}}};
  const auto layout = escrit::build_e_layout(spec);
  CHECK(layout.graph.n() == 11);
  CHECK(layout.graph.m() == 14);
  REQUIRE(layout.hubs.size() == 3);
  REQUIRE(layout.arcs.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    const int len = spec.rings[i].cycle_len;
    const int d = spec.rings[i].dist;
    CHECK(static_cast<int>(layout.arcs[i][0].size()) == d);
    CHECK(static_cast<int>(layout.arcs[i][1].size()) == len - d);
    const int next_hub = layout.hubs[(i + 1) % 3];
    CHECK(escrit::shortest_distance(layout.graph, layout.hubs[i], next_hub) == d);
  }
}

TEST_CASE("recognition round trip over the sample grid") {
  std::mt19937 rng(34512);
  for (const auto& spec : sample_specs()) {
    INFO(escrit::format_family_spec(spec));
    const Graph g = escrit::build_family(spec);
    const auto expected = escrit::normalize_spec(spec);

    const auto direct = escrit::recognize_family(g);
    REQUIRE(direct.has_value());
    const bool e_pair = tag_of(spec) == escrit::FamilyTag::E &&
                        std::get<escrit::FamilyE>(spec).rings.size() == 2;
    if (e_pair) {
      CHECK(tag_of(*direct) == escrit::FamilyTag::C);  // two-ring necklaces are theta graphs
    } else {
      CHECK(*direct == expected);
    }

    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto relabeled = escrit::recognize_family(oracle::permuted(g, perm));
    REQUIRE(relabeled.has_value());
    if (!e_pair) CHECK(*relabeled == expected);
  }
}

TEST_CASE("two-ring necklaces and theta graphs coincide") {
  const Graph g = escrit::build_family(escrit::FamilyE{{{4, 1}, {6, 2}}});
  const auto tags = escrit::matching_tags(g);
  CHECK(tags == std::vector<escrit::FamilyTag>{escrit::FamilyTag::C, escrit::FamilyTag::E});

  const auto as_c = escrit::recognize_family(g);
  REQUIRE(as_c.has_value());
  const auto& cpaths = std::get<escrit::FamilyC>(*as_c).paths;
  std::vector<int> arcs{1, 4 - 1, 2, 6 - 2};
  std::sort(arcs.begin(), arcs.end());
  std::vector<int> paths(cpaths.begin(), cpaths.end());
  std::sort(paths.begin(), paths.end());
  CHECK(paths == arcs);

  const Graph theta = escrit::build_family(escrit::FamilyC{{2, 2, 3, 3}});
  const auto ttags = escrit::matching_tags(theta);
  CHECK(ttags == std::vector<escrit::FamilyTag>{escrit::FamilyTag::C, escrit::FamilyTag::E});

  const Graph bowtie = escrit::build_family(escrit::FamilyB{3, 3});
  CHECK(escrit::matching_tags(bowtie) == std::vector<escrit::FamilyTag>{escrit::FamilyTag::B});
}

TEST_CASE("recognition rejects near misses") {
  CHECK_FALSE(escrit::recognize_family(oracle::cycle_graph(5)).has_value());
  CHECK_FALSE(escrit::recognize_family(oracle::cycle_graph(4)).has_value());
  CHECK_FALSE(escrit::recognize_family(oracle::petersen()).has_value());
  CHECK_FALSE(escrit::recognize_family(oracle::path_graph(5)).has_value());
  CHECK_FALSE(escrit::recognize_family(Graph(1, {})).has_value());

  // an even and an odd cycle, disjoint: not family A
  CHECK_FALSE(
      escrit::recognize_family(oracle::disjoint_union(oracle::cycle_graph(3), oracle::cycle_graph(4)))
          .has_value());

  // K4 subdivision whose three odd branches form a path: outside family D
  const Graph d_path(7, {{0, 1}, {0, 2}, {0, 4}, {3, 4}, {1, 5}, {2, 5}, {1, 6}, {3, 6}, {2, 3}});
  CHECK_FALSE(escrit::recognize_family(d_path).has_value());
  CHECK_FALSE(escrit::is_edge_stability_critical(d_path));

  // theta with three paths from the same hub pair: not family C (degree 3 hubs)
  const Graph theta3(5, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}});
  CHECK_FALSE(escrit::recognize_family(theta3).has_value());
}

TEST_CASE("branch normalization is corner-relabeling invariant") {
  const escrit::FamilyD a{{1, 1, 2, 1, 2, 2}};  // odd triangle on corners 0,1,2
  const escrit::FamilyD b{{1, 2, 1, 2, 1, 2}};  // same shape, triangle on corners 0,1,3
  REQUIRE(escrit::validate_spec(a).empty());
  REQUIRE(escrit::validate_spec(b).empty());
  CHECK(escrit::normalize_spec(a) == escrit::normalize_spec(b));
  CHECK(oracle::isomorphic(escrit::build_family(a), escrit::build_family(b)));

  const escrit::FamilyD m1{{1, 2, 2, 2, 2, 3}};  // odd pair on disjoint corner pairs
  const escrit::FamilyD m2{{3, 2, 2, 2, 2, 1}};
  REQUIRE(escrit::validate_spec(m1).empty());
  REQUIRE(escrit::validate_spec(m2).empty());
  CHECK(escrit::normalize_spec(m1) == escrit::normalize_spec(m2));

  std::mt19937 rng(55528);
  for (int iter = 0; iter < 40; ++iter) {
    std::array<int, 6> branches;
    for (auto& x : branches) x = 1 + static_cast<int>(rng() % 3);
    const escrit::FamilyD spec{branches};
    if (!escrit::validate_spec(spec).empty()) continue;
    const Graph g = escrit::build_family(spec);
    const auto rec = escrit::recognize_family(g);
    REQUIRE(rec.has_value());
    CHECK(*rec == escrit::normalize_spec(spec));
  }
}

TEST_CASE("ring order normalization") {
  const escrit::FamilyE a{{{4, 1}, {4, 2}, {6, 2}}};
  const escrit::FamilyE b{{{6, 2}, {4, 1}, {4, 2}}};   // rotated
  const escrit::FamilyE c{{{6, 2}, {4, 2}, {4, 1}}};   // reflected
  CHECK(escrit::normalize_spec(a) == escrit::normalize_spec(b));
  CHECK(escrit::normalize_spec(a) == escrit::normalize_spec(c));

  const auto rec = escrit::recognize_family(escrit::build_family(b));
  REQUIRE(rec.has_value());
  CHECK(*rec == escrit::normalize_spec(a));
}

TEST_CASE("scaffolding family builds to a one-step reducible graph") {
  const escrit::FamilyEPrime spec{
      {escrit::EPart{false, 4, 1}, escrit::EPart{true, 1, 1}, escrit::EPart{false, 6, 3}}};
  REQUIRE(escrit::validate_spec(spec).empty());
  const Graph g = escrit::build_family(spec);
  CHECK(escrit::chromatic_number(g) == 3);
  CHECK(escrit::edge_stability_number(g).es == 1);
  CHECK_FALSE(escrit::is_edge_stability_critical(g));

  // trailing path adjacent to the leading path around the ring
  const escrit::FamilyEPrime bad{
      {escrit::EPart{true, 1, 1}, escrit::EPart{false, 4, 1}, escrit::EPart{true, 1, 1}}};
  CHECK_FALSE(escrit::validate_spec(bad).empty());

  const escrit::FamilyEPrime even_sum{
      {escrit::EPart{false, 4, 1}, escrit::EPart{true, 2, 2}, escrit::EPart{false, 6, 3}}};
  CHECK_FALSE(escrit::validate_spec(even_sum).empty());

  const escrit::FamilyEPrime no_cycle{
      {escrit::EPart{true, 1, 1}, escrit::EPart{false, 4, 2}, escrit::EPart{true, 2, 2}}};
  CHECK_FALSE(escrit::validate_spec(no_cycle).empty());
}

TEST_CASE("spec text round trip") {
  const std::vector<std::string> texts{
      "A:3,5", "B:3,3", "C:1,2,2,3", "D:1,1,2,1,2,2", "E:4,1;4,1;4,1", "E':4,1;p1;6,3",
  };
  for (const auto& t : texts) {
    INFO(t);
    const auto spec = escrit::parse_family_spec(t);
    CHECK(escrit::format_family_spec(spec) == t);
  }
  CHECK(escrit::format_family_spec(escrit::parse_family_spec("Ep:4,1;p1;6,3")) == "E':4,1;p1;6,3");

  CHECK_THROWS_AS(escrit::parse_family_spec("Q:3,5"), std::invalid_argument);
  CHECK_THROWS_AS(escrit::parse_family_spec("A3,5"), std::invalid_argument);
  CHECK_THROWS_AS(escrit::parse_family_spec("A:3,x"), std::invalid_argument);
  CHECK_THROWS_AS(escrit::parse_family_spec("A:3"), std::invalid_argument);
  CHECK_THROWS_AS(escrit::parse_family_spec("C:1,2,2"), std::invalid_argument);
  CHECK_THROWS_AS(escrit::parse_family_spec("D:1,1,1,1,1"), std::invalid_argument);
  CHECK_THROWS_AS(escrit::parse_family_spec("E:4;4,1"), std::invalid_argument);
  CHECK_THROWS_AS(escrit::parse_family_spec(""), std::invalid_argument);
}

TEST_CASE("every sample member is verdict-critical") {
  for (const auto& spec : sample_specs()) {
    INFO(escrit::format_family_spec(spec));
    const Graph g = escrit::build_family(spec);
    CHECK(escrit::is_k_l_critical(g, 3, 2));
    CHECK(escrit::is_edge_stability_critical(g));
  }
}
