#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chordless/contraction.hpp"
#include "chordless/corpus.hpp"
#include "chordless/degeneracy.hpp"
#include "chordless/generators.hpp"

using namespace chordless;

namespace {

// Every vertex has at most k neighbours later in the order.
bool is_k_ordering(const Graph& g, const std::vector<Vertex>& order, int k) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    if (pos[v] < 0) return false;
    int later = 0;
    for (Vertex w : g.neighbors(v)) later += pos[w] > pos[v];
    if (later > k) return false;
  }
  return order.size() == g.order();
}

}  // namespace

TEST_CASE("degeneracy_ordering") {
  SUBCASE("C5, k = 2") {
    const auto r = degeneracy_ordering(cycle_graph(5), 2);
    REQUIRE(std::holds_alternative<DegeneracyOrdering>(r));
    const auto& ord = std::get<DegeneracyOrdering>(r);
    CHECK(ord.order == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(is_k_ordering(cycle_graph(5), ord.order, 2));
  }
  SUBCASE("K4, k = 2 fails on all of K4") {
    const auto r = degeneracy_ordering(complete_graph(4), 2);
    REQUIRE(std::holds_alternative<StuckCore>(r));
    CHECK(std::get<StuckCore>(r).vertices == std::vector<Vertex>{0, 1, 2, 3});
  }
  SUBCASE("trees are 1-degenerate") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 30; ++t) {
      const Graph tree = random_tree(2 + t, rng);
      const auto r = degeneracy_ordering(tree, 1);
      REQUIRE(std::holds_alternative<DegeneracyOrdering>(r));
      CHECK(is_k_ordering(tree, std::get<DegeneracyOrdering>(r).order, 1));
    }
  }
  SUBCASE("lowest id breaks ties") {
    const auto r = degeneracy_ordering(path_graph(4), 1);
    CHECK(std::get<DegeneracyOrdering>(r).order == std::vector<Vertex>{0, 1, 2, 3});
  }
  SUBCASE("empty graph") {
    const auto r = degeneracy_ordering(Graph(), 2);
    CHECK(std::get<DegeneracyOrdering>(r).order.empty());
  }
}

TEST_CASE("stuck cores really have minimum degree above k") {
  std::mt19937_64 rng(73);
  int stuck = 0;
  for (int t = 0; t < 80; ++t) {
    const Graph g = random_graph(6 + t % 8, 0.5, rng);
    const int k = t % 4;
    const auto r = degeneracy_ordering(g, k);
    if (const auto* core = std::get_if<StuckCore>(&r)) {
      ++stuck;
      const Graph h = induced_subgraph(g, core->vertices).graph;
      REQUIRE(h.order() > 0);
      for (Vertex v = 0; v < static_cast<Vertex>(h.order()); ++v) CHECK(h.degree(v) > k);
    } else {
      CHECK(is_k_ordering(g, std::get<DegeneracyOrdering>(r).order, k));
    }
  }
  CHECK(stuck > 10);
}

TEST_CASE("greedy_color") {
  SUBCASE("C5") {
    const Graph g = cycle_graph(5);
    const auto c = greedy_color(g, std::get<DegeneracyOrdering>(degeneracy_ordering(g, 2)));
    CHECK(is_proper(g, c));
    CHECK(c.colors <= 3);
  }
  SUBCASE("edgeless") {
    const Graph g(4);
    const auto c = greedy_color(g, std::get<DegeneracyOrdering>(degeneracy_ordering(g, 2)));
    CHECK(c.colors == 1);
  }
  SUBCASE("triangle quotient of C6") {
    const Graph g = cycle_graph(6);
    const auto q = contract(g, Matching(g, {Edge{0, 1}, Edge{2, 3}, Edge{4, 5}})).quotient;
    const auto c = greedy_color(q, std::get<DegeneracyOrdering>(degeneracy_ordering(q, 2)));
    CHECK(c.colors == 3);
    CHECK(is_proper(q, c));
  }
  SUBCASE("rejects a non-permutation") {
    const DegeneracyOrdering bad{{0, 0, 1}, 2};
    CHECK_THROWS_AS(greedy_color(path_graph(3), bad), std::invalid_argument);
  }
  SUBCASE("proper for any permutation") {
    std::mt19937_64 rng(79);
    for (int t = 0; t < 50; ++t) {
      const Graph g = random_graph(10, 0.4, rng);
      DegeneracyOrdering ord{{}, 0};
      for (Vertex v = 0; v < 10; ++v) ord.order.push_back(v);
      std::shuffle(ord.order.begin(), ord.order.end(), rng);
      const auto c = greedy_color(g, ord);
      CHECK(is_proper(g, c));
      CHECK(c.colors <= max_degree(g) + 1);
    }
  }
}

TEST_CASE("is_proper detects clashes") {
  const Graph g = path_graph(3);
  CHECK(is_proper(g, VertexColoring{{0, 1, 0}, 2}));
  CHECK_FALSE(is_proper(g, VertexColoring{{0, 0, 1}, 2}));
}

TEST_CASE("min_degree_witness") {
  const auto c5 = min_degree_witness(cycle_graph(5));
  CHECK(c5.size() == 5);
  CHECK(min_degree_witness(complete_graph(4)).empty());
  const auto p4 = min_degree_witness(path_graph(4));
  CHECK(p4 == std::vector<std::pair<Vertex, int>>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
}

TEST_CASE("quotients of chordless graphs are 2-degenerate") {
  std::mt19937_64 rng(83);
  CorpusConfig config;
  config.count = 60;
  config.seed = 83;
  config.max_base = 14;
  std::size_t pairs = 0;
  std::size_t subsets = 0;
  for (const NamedGraph& item : chordless_corpus(config)) {
    std::vector<Matching> ms = coloring_matchings(item.graph);
    ms.push_back(random_matching(item.graph, rng));
    for (const Matching& m : ms) {
      const Graph q = contract(item.graph, m).quotient;
      const auto r = degeneracy_ordering(q, 2);
      REQUIRE(std::holds_alternative<DegeneracyOrdering>(r));
      const auto c = greedy_color(q, std::get<DegeneracyOrdering>(r));
      CHECK(c.colors <= 3);
      CHECK(is_proper(q, c));
      ++pairs;
      for (int s = 0; s < 4 && q.order() >= 2; ++s) {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < static_cast<Vertex>(q.order()); ++v) {
          if (rng() % 2) keep.push_back(v);
        }
        if (keep.size() < 2) continue;
        CHECK(min_degree_witness(induced_subgraph(q, keep).graph).size() >= 2);
        ++subsets;
      }
    }
  }
  CHECK(pairs > 150);
  CHECK(subsets > 200);
}
