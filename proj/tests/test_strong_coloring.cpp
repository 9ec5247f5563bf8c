#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "chordless/corpus.hpp"
#include "chordless/generators.hpp"
#include "chordless/strong_coloring.hpp"
#include "oracles.hpp"

using namespace chordless;

namespace {

StrongEdgeColoring coloring_of(std::vector<int> color) {
  StrongEdgeColoring c;
  c.colors_used = distinct_colors(color);
  c.color = std::move(color);
  return c;
}

bool is_complete(const Graph& g) { return g.size() == g.order() * (g.order() - 1) / 2; }

}  // namespace

TEST_CASE("conflict_graph") {
  SUBCASE("P3: one conflict") {
    const Graph c = conflict_graph(path_graph(3));
    CHECK(c.order() == 2);
    CHECK(c.size() == 1);
  }
  SUBCASE("C5 is complete") {
    const Graph c = conflict_graph(cycle_graph(5));
    CHECK(c.order() == 5);
    CHECK(is_complete(c));
  }
  SUBCASE("far apart edges do not conflict") {
    const std::vector<Edge> e{{0, 1}, {2, 3}};
    CHECK(conflict_graph(Graph(4, e)).size() == 0);
    const Graph p5 = path_graph(5);
    const Graph c = conflict_graph(p5);
    CHECK_FALSE(c.has_edge(0, 3));
    CHECK(c.has_edge(0, 2));
  }
  SUBCASE("matches the definition") {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 40; ++t) {
      const Graph g = random_graph(8, 0.3, rng);
      const Graph c = conflict_graph(g);
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
          CHECK(c.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ==
                oracle::edges_conflict(g, g.edges()[i], g.edges()[j]));
        }
      }
    }
  }
}

TEST_CASE("tightness conflict graphs are complete for delta 2..8") {
  for (int delta = 2; delta <= 8; ++delta) {
    const Graph c = conflict_graph(tightness_graph(delta));
    CHECK(c.order() == static_cast<std::size_t>(3 * delta - 2));
    CHECK(is_complete(c));
  }
}

TEST_CASE("verify_strong") {
  SUBCASE("C5 rainbow") { CHECK_FALSE(verify_strong(cycle_graph(5), coloring_of({1, 2, 3, 4, 5}))); }
  SUBCASE("C4 opposite edges share a colour") {
    // Edges in order: 01, 03, 12, 23. Opposite pairs: 01/23 and 03/12.
    const Graph g = cycle_graph(4);
    const auto v = verify_strong(g, coloring_of({1, 2, 2, 1}));
    REQUIRE(v.has_value());
    CHECK(v->reason == Violation::Reason::kLinkingEdge);
    CHECK(v->first == 0);
    CHECK(v->second == 3);
    REQUIRE(v->link.has_value());
    CHECK(oracle::edges_conflict(g, g.edges()[v->first], g.edges()[v->second]));
  }
  SUBCASE("shared endpoint") {
    const auto v = verify_strong(path_graph(3), coloring_of({4, 4}));
    REQUIRE(v.has_value());
    CHECK(v->reason == Violation::Reason::kSharedEndpoint);
  }
  SUBCASE("single edge") { CHECK_FALSE(verify_strong(path_graph(2), coloring_of({1}))); }
  SUBCASE("missing colour") {
    CHECK_THROWS_AS(verify_strong(cycle_graph(5), coloring_of({1, 2, 3, 0, 5})), UncoloredEdge);
    CHECK_THROWS_AS(verify_strong(cycle_graph(5), coloring_of({1, 2, 3})), UncoloredEdge);
  }
  SUBCASE("agrees with the conflict graph and the brute check") {
    std::mt19937_64 rng(107);
    int violations = 0;
    for (int t = 0; t < 300; ++t) {
      const Graph g = random_graph(7, 0.35, rng);
      if (g.size() == 0) continue;
      std::vector<int> color(g.size());
      const int k = 1 + static_cast<int>(rng() % (g.size() + 1));
      for (int& c : color) c = 1 + static_cast<int>(rng() % static_cast<unsigned>(k));
      const Graph conflict = conflict_graph(g);
      bool clash = false;
      for (const Edge& e : conflict.edges()) clash = clash || color[e.u] == color[e.v];
      const auto v = verify_strong(g, coloring_of(color));
      CHECK(v.has_value() == clash);
      CHECK(v.has_value() == !oracle::is_strong(g, color));
      violations += v.has_value();
    }
    CHECK(violations > 50);
  }
}

TEST_CASE("strong_color_paths_cycles") {
  SUBCASE("C5 needs five") { CHECK(strong_color_paths_cycles(cycle_graph(5)).colors_used == 5); }
  SUBCASE("C6 takes three") {
    const Graph g = cycle_graph(6);
    const auto c = strong_color_paths_cycles(g);
    CHECK(c.colors_used == 3);
    CHECK_FALSE(verify_strong(g, c));
  }
  SUBCASE("P4 takes three") { CHECK(strong_color_paths_cycles(path_graph(4)).colors_used == 3); }
  SUBCASE("C4 takes four") { CHECK(strong_color_paths_cycles(cycle_graph(4)).colors_used == 4); }
  SUBCASE("rejects delta 3") { CHECK_THROWS_AS(strong_color_paths_cycles(star_graph(3)), std::invalid_argument); }
  SUBCASE("optimal on every path and cycle up to 12 edges") {
    for (int n = 2; n <= 13; ++n) {
      const Graph p = path_graph(n);
      const auto cp = strong_color_paths_cycles(p);
      CHECK_FALSE(verify_strong(p, cp));
      CHECK(cp.colors_used == oracle::strong_chromatic_index(p));
      if (n >= 3 && n <= 12) {
        CAPTURE(n);
        const Graph c = cycle_graph(n);
        const auto cc = strong_color_paths_cycles(c);
        CHECK_FALSE(verify_strong(c, cc));
        CHECK(cc.colors_used == oracle::strong_chromatic_index(c));
        CHECK(cc.colors_used <= 5);
      }
    }
  }
  SUBCASE("long cycles stay within four colours unless n = 5") {
    for (int n = 13; n <= 60; ++n) {
      const Graph c = cycle_graph(n);
      const auto cc = strong_color_paths_cycles(c);
      CHECK_FALSE(verify_strong(c, cc));
      CHECK(cc.colors_used == (n % 3 == 0 ? 3 : 4));
    }
  }
}

TEST_CASE("strong_color_chordless") {
  SUBCASE("tightness(3)") {
    const Graph g = tightness_graph(3);
    const auto r = strong_color_chordless(g);
    CHECK_FALSE(verify_strong(g, r.coloring));
    CHECK(r.coloring.colors_used <= 9);
    CHECK(r.coloring.colors_used >= 7);
    CHECK(r.path == StrongPath::kExact);
    CHECK(r.bound_claimed == 9);
  }
  SUBCASE("C6") {
    const auto r = strong_color_chordless(cycle_graph(6));
    CHECK(r.coloring.colors_used <= 5);
    CHECK(r.path == StrongPath::kPathsCycles);
  }
  SUBCASE("full-subdivision(K4)") {
    const Graph g = full_subdivision(complete_graph(4));
    const auto r = strong_color_chordless(g);
    CHECK_FALSE(verify_strong(g, r.coloring));
    CHECK(r.coloring.colors_used <= 9);
  }
  SUBCASE("K4 is refused with a chord") {
    try {
      strong_color_chordless(complete_graph(4));
      FAIL("expected refusal");
    } catch (const NotChordless& e) {
      CHECK(is_chord_edge(complete_graph(4), e.witness().chord));
    }
  }
  SUBCASE("edgeless input") { CHECK_THROWS_AS(strong_color_chordless(Graph(3)), std::invalid_argument); }
  SUBCASE("mixed components share colours") {
    // C5 next to a star with 3 leaves.
    const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {5, 6}, {5, 7}, {5, 8}};
    const Graph g(9, e);
    const auto r = strong_color_chordless(g);
    CHECK_FALSE(verify_strong(g, r.coloring));
    CHECK(r.coloring.colors_used <= 9);
  }
  SUBCASE("pairs flatten to the colours") {
    const Graph g = tightness_graph(5);
    const auto r = strong_color_chordless(g);
    REQUIRE(r.coloring.pair.size() == g.size());
    std::set<std::pair<int, int>> pairs;
    std::set<int> flats;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto [a, b] = r.coloring.pair[i];
      CHECK(flatten_pair(a, b) == r.coloring.color[i]);
      CHECK(unflatten(r.coloring.color[i]) == r.coloring.pair[i]);
      CHECK((b >= 1 && b <= 3));
      pairs.insert(r.coloring.pair[i]);
      flats.insert(r.coloring.color[i]);
    }
    CHECK(pairs.size() == flats.size());
  }
}

TEST_CASE("pipeline on a chordless corpus") {
  CorpusConfig config;
  config.count = 80;
  config.seed = 109;
  config.max_base = 16;
  for (const NamedGraph& item : chordless_corpus(config)) {
    CAPTURE(item.name);
    const Graph& g = item.graph;
    const auto r = strong_color_chordless(g);
    CHECK_FALSE(verify_strong(g, r.coloring));
    CHECK(oracle::is_strong(g, r.coloring.color));
    const int delta = max_degree(g);
    if (delta >= 3) {
      CHECK(r.coloring.colors_used <= 3 * delta);
    } else {
      CHECK(r.coloring.colors_used <= 5);
    }
    CHECK(r.coloring.colors_used <= r.bound_claimed);
  }
}

TEST_CASE("exact_chi_s") {
  SUBCASE("C5") { CHECK(exact_chi_s(cycle_graph(5)).value() == 5); }
  SUBCASE("tightness(3)") { CHECK(exact_chi_s(tightness_graph(3)).value() == 7); }
  SUBCASE("C7") { CHECK(exact_chi_s(cycle_graph(7)).value() == 4); }
  SUBCASE("P4") { CHECK(exact_chi_s(path_graph(4)).value() == 3); }
  SUBCASE("edgeless") { CHECK(exact_chi_s(Graph(2)).value() == 0); }
  SUBCASE("cap exceeded gives bounds only") {
    const Graph g = full_subdivision(complete_graph(5));
    const auto r = exact_chi_s(g, kDefaultSearchNodes, 10);
    CHECK(r.status == OracleResult::Status::kCapExceeded);
    CHECK_FALSE(r.value().has_value());
    CHECK(r.lower_bound <= r.upper_bound);
    CHECK(r.lower_bound >= 1);
  }
  SUBCASE("budget exceeded gives bounds only") {
    const auto r = exact_chi_s(cycle_graph(11), 1);
    if (r.status == OracleResult::Status::kBudgetExceeded) {
      CHECK_FALSE(r.value().has_value());
      CHECK(r.lower_bound <= 4);
      CHECK(r.upper_bound >= 4);
    } else {
      CHECK(r.value() == 4);
    }
  }
  SUBCASE("agrees with brute force") {
    std::mt19937_64 rng(113);
    for (int t = 0; t < 60; ++t) {
      const Graph g = random_graph(6, 0.4, rng);
      if (g.size() > 9) continue;
      const auto r = exact_chi_s(g);
      REQUIRE(r.value().has_value());
      CHECK(*r.value() == oracle::strong_chromatic_index(g));
      REQUIRE(r.coloring.has_value());
      CHECK(oracle::is_strong(g, r.coloring->color));
      CHECK(r.coloring->colors_used == *r.value());
    }
  }
}

TEST_CASE("tightness_audit") {
  SUBCASE("delta 3") {
    const auto a = tightness_audit(3);
    CHECK(a.conflict_complete);
    REQUIRE(a.oracle.has_value());
    CHECK(a.oracle->value() == 7);
    CHECK(a.passed);
  }
  SUBCASE("delta 2") {
    const auto a = tightness_audit(2);
    CHECK(a.edges == 4);
    CHECK(a.oracle->value() == 4);
    CHECK(a.passed);
  }
  SUBCASE("delta 5 without oracle") {
    const auto a = tightness_audit(5, kDefaultSearchNodes, 10);
    CHECK(a.edges == 13);
    CHECK(a.conflict_complete);
    CHECK_FALSE(a.oracle.has_value());
    CHECK(a.passed);
  }
}

TEST_CASE("coloring JSON") {
  const Graph g = tightness_graph(3);
  const auto j = to_json(g, strong_color_chordless(g));
  CHECK(j["edges"].size() == 7);
  CHECK(j["edges"][0].size() == 4);
  CHECK(j["edge_coloring_path"] == "exact");
  CHECK(j.dump() == to_json(g, strong_color_chordless(g)).dump());
  const auto c5 = to_json(cycle_graph(5), strong_color_chordless(cycle_graph(5)));
  CHECK(c5["edges"][0][2].is_null());
}
