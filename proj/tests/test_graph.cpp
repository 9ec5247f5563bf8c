#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chordless/edge_list.hpp"
#include "chordless/generators.hpp"
#include "chordless/graph.hpp"
#include "oracles.hpp"

using namespace chordless;

namespace {

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) d.push_back(g.degree(v));
  return d;
}

bool bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("graph construction canonicalizes and rejects bad input") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 1}};
  const Graph g(3, edges);
  CHECK(g.size() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.edge_id(2, 1) == std::optional<std::size_t>(1));
  CHECK_THROWS_AS(Edge::of(2, 2), std::invalid_argument);
  const std::vector<Edge> out_of_range{{0, 5}};
  CHECK_THROWS_AS(Graph(3, out_of_range), std::invalid_argument);
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and degrees sum to twice the size") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_graph(12, 0.3, rng);
    int sum = 0;
    for (Vertex v = 0; v < 12; ++v) {
      sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) CHECK(g.has_edge(w, v));
    }
    CHECK(sum == 2 * static_cast<int>(g.size()));
  }
}

TEST_CASE("load_edge_list") {
  SUBCASE("two-edge path") {
    const auto r = load_edge_list("0 1\n1 2");
    CHECK(r.graph.order() == 3);
    CHECK(r.graph.size() == 2);
    CHECK(degrees(r.graph) == std::vector<int>{1, 2, 1});
  }
  SUBCASE("duplicate collapses and is counted") {
    const auto r = load_edge_list("a b\nb a");
    CHECK(r.graph.order() == 2);
    CHECK(r.graph.size() == 1);
    CHECK(r.duplicate_edges == 1);
    CHECK(r.graph.label(0) == "a");
  }
  SUBCASE("self-loop is a parse error") {
    CHECK_THROWS_AS(load_edge_list("0 0"), ParseError);
  }
  SUBCASE("malformed line reports its number") {
    try {
      load_edge_list("0 1\n# note\n2\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("comments and blank lines are skipped") {
    const auto r = load_edge_list("# header\n\nx y\n   \ny z\n");
    CHECK(r.graph.size() == 2);
  }
  SUBCASE("vertex directive keeps isolated vertices") {
    const auto r = load_edge_list("#@ vertices p q r\nq r\n");
    CHECK(r.graph.order() == 3);
    CHECK(r.graph.has_edge(1, 2));
    CHECK(r.graph.degree(0) == 0);
  }
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const Graph g = random_graph(2 + t % 9, 0.4, rng);
    const Graph once = load_edge_list(to_edge_list(g)).graph;
    CHECK(once == g);
    const Graph twice = load_edge_list(to_edge_list(once)).graph;
    CHECK(twice == once);
    CHECK(twice.labels() == once.labels());
  }
  const Graph labelled = load_edge_list("u v\nv w\nw u\n").graph;
  const Graph back = load_edge_list(to_edge_list(labelled)).graph;
  CHECK(back == labelled);
  CHECK(back.labels() == labelled.labels());
}

TEST_CASE("max_degree") {
  CHECK(max_degree(cycle_graph(5)) == 2);
  CHECK(max_degree(star_graph(4)) == 4);
  CHECK(max_degree(Graph(3)) == 0);
  CHECK(max_degree(Graph()) == 0);
}

TEST_CASE("generate examples") {
  SUBCASE("tightness(3)") {
    const Graph g = tightness_graph(3);
    CHECK(g.order() == 6);
    CHECK(g.size() == 7);
    const auto d = degrees(g);
    CHECK(std::count(d.begin(), d.end(), 3) == 3);
  }
  SUBCASE("full-subdivision(K4)") {
    const Graph g = full_subdivision(complete_graph(4));
    CHECK(g.order() == 10);
    CHECK(g.size() == 12);
  }
  SUBCASE("cycle(5)") {
    GeneratorSpec spec;
    spec.family = Family::kCycle;
    spec.n = 5;
    const Graph g = generate(spec);
    CHECK(g.order() == 5);
    CHECK(g.size() == 5);
    CHECK(degrees(g) == std::vector<int>(5, 2));
    CHECK(is_connected(g));
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(tightness_graph(1), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    GeneratorSpec spec;
    spec.family = Family::kFullSubdivision;
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
  }
}

TEST_CASE("tightness family shape for delta 2..10") {
  for (int delta = 2; delta <= 10; ++delta) {
    CAPTURE(delta);
    const Graph g = tightness_graph(delta);
    const auto d = degrees(g);
    CHECK(std::count(d.begin(), d.end(), delta) == (delta == 2 ? 4 : 3));
    CHECK(g.size() == static_cast<std::size_t>(3 * delta - 2));
    CHECK(g.order() == static_cast<std::size_t>(2 * delta));
    // a, b and c carry the maximum degree.
    CHECK(g.degree(0) == delta);
    CHECK(g.degree(1) == delta);
    CHECK(g.degree(delta + 1) == delta);
  }
}

TEST_CASE("full subdivision counts and even cycles") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 25; ++t) {
    const Graph base = random_graph(3 + t % 10, 0.5, rng);
    const Graph g = full_subdivision(base);
    CHECK(g.order() == base.order() + base.size());
    CHECK(g.size() == 2 * base.size());
    CHECK(bipartite(g));
  }
}

TEST_CASE("generators are deterministic in the seed") {
  for (Family f : {Family::kRandomTree, Family::kRandomGraph, Family::kEarTree}) {
    GeneratorSpec spec;
    spec.family = f;
    spec.n = 15;
    spec.ears = 4;
    spec.seed = 42;
    CHECK(generate(spec) == generate(spec));
  }
  GeneratorSpec spec;
  spec.family = Family::kRandomTree;
  spec.n = 20;
  spec.seed = 1;
  const Graph tree = generate(spec);
  CHECK(tree.size() == 19);
  CHECK(is_connected(tree));
}

TEST_CASE("family names round trip") {
  for (Family f : {Family::kPath, Family::kCycle, Family::kStar, Family::kComplete, Family::kWheel,
                   Family::kTightness, Family::kFullSubdivision, Family::kRandomTree, Family::kRandomGraph,
                   Family::kEarTree}) {
    CHECK(parse_family(family_name(f)) == f);
  }
  CHECK_FALSE(parse_family("petersen").has_value());
}

TEST_CASE("induced_subgraph") {
  SUBCASE("C5 on {0,1,2} is a path") {
    const std::vector<Vertex> keep{0, 1, 2};
    const auto s = induced_subgraph(cycle_graph(5), keep);
    CHECK(s.graph == path_graph(3));
    CHECK(s.to_host == keep);
  }
  SUBCASE("full vertex set is an identical copy") {
    const Graph g = wheel_graph(7);
    std::vector<Vertex> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
    const auto s = induced_subgraph(g, all);
    CHECK(s.graph == g);
    CHECK(induced_subgraph(s.graph, all).graph == s.graph);
  }
  SUBCASE("K4 on {0,1} is one edge") {
    const std::vector<Vertex> keep{1, 0};
    const auto s = induced_subgraph(complete_graph(4), keep);
    CHECK(s.graph.order() == 2);
    CHECK(s.graph.size() == 1);
  }
  SUBCASE("unknown vertex") {
    const std::vector<Vertex> keep{0, 9};
    CHECK_THROWS_AS(induced_subgraph(path_graph(3), keep), std::out_of_range);
  }
  SUBCASE("remap table") {
    const std::vector<Vertex> keep{4, 2};
    const auto s = induced_subgraph(path_graph(5), keep);
    CHECK(s.to_host == std::vector<Vertex>{2, 4});
    CHECK(s.from_host(4) == std::optional<Vertex>(1));
    CHECK_FALSE(s.from_host(3).has_value());
  }
}

TEST_CASE("remove and add edges") {
  const Graph c = cycle_graph(4);
  const Graph p = remove_edge(c, Edge::of(3, 0));
  CHECK(p.size() == 3);
  CHECK(add_edge(p, Edge::of(0, 3)) == c);
  CHECK_THROWS_AS(remove_edge(p, Edge::of(0, 3)), std::invalid_argument);
  CHECK_THROWS_AS(add_edge(c, Edge::of(0, 1)), std::invalid_argument);
}

TEST_CASE("components and shortest paths") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {3, 4}};
  const Graph g(6, edges);
  std::vector<int> comp;
  CHECK(connected_components(g, comp) == 3);
  CHECK(comp[0] == comp[2]);
  CHECK(comp[0] != comp[3]);
  CHECK(shortest_path(g, 0, 2) == std::vector<Vertex>{0, 1, 2});
  CHECK(shortest_path(g, 0, 4).empty());
  CHECK_FALSE(is_connected(g));
}

TEST_CASE("graph JSON") {
  const auto j = to_json(load_edge_list("a b\n").graph);
  CHECK(j["n"] == 2);
  CHECK(j["edges"].size() == 1);
  CHECK(j["labels"][1] == "b");
}
