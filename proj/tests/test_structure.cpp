#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "chordless/audit.hpp"
#include "chordless/contraction.hpp"
#include "chordless/generators.hpp"
#include "chordless/structure.hpp"
#include "oracles.hpp"

using namespace chordless;

namespace {

Graph two_triangles() {
  // Shared vertex 2.
  const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
  return Graph(5, e);
}


bool is_path(const Graph& g, const std::vector<Vertex>& p) {
  std::set<Vertex> seen(p.begin(), p.end());
  if (seen.size() != p.size() || p.empty()) return false;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!g.has_edge(p[i - 1], p[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("blocks") {
  SUBCASE("path 0-1-2") {
    const auto d = blocks(path_graph(3));
    CHECK(d.blocks.size() == 2);
    CHECK(d.cutvertices == std::vector<Vertex>{1});
  }
  SUBCASE("C5") {
    const auto d = blocks(cycle_graph(5));
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].edges.size() == 5);
    CHECK(d.cutvertices.empty());
  }
  SUBCASE("two triangles sharing a vertex") {
    const auto d = blocks(two_triangles());
    CHECK(d.blocks.size() == 2);
    CHECK(d.cutvertices == std::vector<Vertex>{2});
    CHECK(d.cutvertex_blocks[0].size() == 2);
  }
  SUBCASE("isolated vertices belong to no block") {
    const auto d = blocks(Graph(3));
    CHECK(d.blocks.empty());
    CHECK(d.vertex_blocks[1].empty());
  }
}

TEST_CASE("block decomposition invariants on random graphs") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_graph(4 + t % 9, 0.25 + 0.05 * (t % 6), rng);
    const auto d = blocks(g);
    // Blocks partition the edges.
    std::vector<int> hits(g.size(), 0);
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
      const auto& block = d.blocks[b];
      for (const Edge& e : block.edges) {
        const auto id = *g.edge_id(e.u, e.v);
        ++hits[id];
        CHECK(d.edge_block[id] == static_cast<int>(b));
      }
      // Each block is 2-connected (single edges included).
      CHECK(oracle::is_two_connected(induced_subgraph(Graph(g.order(), block.edges), block.vertices).graph));
    }
    for (int h : hits) CHECK(h == 1);
    // A vertex is a cutvertex iff removing it adds a component.
    std::vector<int> comp;
    const int base = connected_components(g, comp);
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
      const std::vector<Vertex> drop{v};
      std::vector<int> rc;
      const bool cut = connected_components(remove_vertices(g, drop).graph, rc) > base;
      CHECK(cut == d.is_cutvertex(v));
      CHECK(cut == std::binary_search(d.cutvertices.begin(), d.cutvertices.end(), v));
    }
    // Block-cut forest: nodes - edges = number of non-trivial components.
    std::size_t incidences = 0;
    for (const auto& cbs : d.cutvertex_blocks) incidences += cbs.size();
    int nontrivial = 0;
    for (int c = 0; c < base; ++c) {
      if (std::count(comp.begin(), comp.end(), c) > 1) ++nontrivial;
    }
    CHECK(static_cast<int>(d.blocks.size() + d.cutvertices.size()) - static_cast<int>(incidences) == nontrivial);
  }
}

TEST_CASE("is_two_connected") {
  CHECK(is_two_connected(path_graph(2)));
  CHECK_FALSE(is_two_connected(path_graph(1)));
  CHECK_FALSE(is_two_connected(Graph()));
  CHECK(is_two_connected(cycle_graph(6)));
  CHECK_FALSE(is_two_connected(path_graph(3)));
  CHECK_FALSE(is_two_connected(two_triangles()));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_graph(3 + t % 7, 0.5, rng);
    CHECK(is_two_connected(g) == oracle::is_two_connected(g));
  }
}

TEST_CASE("leafblocks") {
  SUBCASE("path 0-1-2-3") {
    const Graph g = path_graph(4);
    const auto d = blocks(g);
    const auto leaves = leafblocks(d);
    REQUIRE(leaves.size() == 2);
    std::set<std::vector<Edge>> got;
    for (const auto& l : leaves) got.insert(d.blocks[l.block].edges);
    CHECK(got == std::set<std::vector<Edge>>{{Edge{0, 1}}, {Edge{2, 3}}});
  }
  SUBCASE("C5 has none") { CHECK(leafblocks(blocks(cycle_graph(5))).empty()); }
  SUBCASE("two triangles") {
    const auto d = blocks(two_triangles());
    const auto leaves = leafblocks(d);
    REQUIRE(leaves.size() == 2);
    for (const auto& l : leaves) CHECK(l.cutvertex == 2);
  }
}

TEST_CASE("leafblock claims on random connected graphs") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int t = 0; t < 80; ++t) {
    const Graph g = ear_tree(6 + t % 10, t % 4, rng);
    if (is_two_connected(g)) continue;
    const auto d = blocks(g);
    const auto leaves = leafblocks(d);
    CHECK(leaves.size() >= 2);
    for (const auto& l : leaves) {
      const std::vector<Vertex> drop{l.cutvertex};
      const auto rest = remove_vertices(g, drop);
      std::vector<int> comp;
      connected_components(rest.graph, comp);
      std::set<int> seen;
      std::size_t interior = 0;
      for (Vertex v : d.blocks[l.block].vertices) {
        if (v == l.cutvertex) continue;
        seen.insert(comp[*rest.from_host(v)]);
        ++interior;
      }
      REQUIRE(seen.size() == 1);
      CHECK(static_cast<std::size_t>(std::count(comp.begin(), comp.end(), *seen.begin())) == interior);
    }
    CHECK(is_connected(remove_leafblock_interiors(g, leaves).graph));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("in_common_cycle") {
  SUBCASE("C5, 0 and 2") { CHECK(in_common_cycle(cycle_graph(5), 0, 2).on_common_cycle); }
  SUBCASE("path 0-1-2") {
    const auto r = in_common_cycle(path_graph(3), 0, 2);
    CHECK_FALSE(r.on_common_cycle);
    CHECK(r.separator == std::optional<Vertex>(1));
  }
  SUBCASE("two triangles") {
    const auto r = in_common_cycle(two_triangles(), 0, 4);
    CHECK_FALSE(r.on_common_cycle);
    CHECK(r.separator == std::optional<Vertex>(2));
  }
  SUBCASE("adjacent endpoints of a bridge") {
    const auto r = in_common_cycle(path_graph(2), 0, 1);
    CHECK_FALSE(r.on_common_cycle);
    CHECK_FALSE(r.separator.has_value());
  }
  SUBCASE("different components") {
    const std::vector<Edge> e{{0, 1}, {2, 3}};
    const auto r = in_common_cycle(Graph(4, e), 0, 3);
    CHECK_FALSE(r.on_common_cycle);
    CHECK(r.disconnected);
  }
  SUBCASE("a == b") { CHECK_THROWS_AS(in_common_cycle(cycle_graph(4), 1, 1), std::invalid_argument); }
}

TEST_CASE("in_common_cycle against cycle enumeration and block membership") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_graph(4 + t % 6, 0.35, rng);
    const auto d = blocks(g);
    for (Vertex a = 0; a < static_cast<Vertex>(g.order()); ++a) {
      for (Vertex b = a + 1; b < static_cast<Vertex>(g.order()); ++b) {
        const auto r = in_common_cycle(g, a, b);
        CHECK(r.on_common_cycle == oracle::on_common_cycle(g, a, b));
        bool shared_big_block = false;
        for (const Block& blk : d.blocks) {
          const bool both = std::binary_search(blk.vertices.begin(), blk.vertices.end(), a) &&
                            std::binary_search(blk.vertices.begin(), blk.vertices.end(), b);
          shared_big_block = shared_big_block || (both && blk.vertices.size() >= 3);
        }
        CHECK(r.on_common_cycle == shared_big_block);
        CHECK(r.on_common_cycle == common_cycle_by_separators(g, a, b));
        if (r.separator) {
          const std::vector<Vertex> drop{*r.separator};
          const auto rest = remove_vertices(g, drop);
          std::vector<int> comp;
          connected_components(rest.graph, comp);
          CHECK(comp[*rest.from_host(a)] != comp[*rest.from_host(b)]);
        }
        const auto cyc = cycle_through(g, a, b);
        CHECK(cyc.has_value() == r.on_common_cycle);
        if (cyc) {
          CHECK(is_path(g, *cyc));
          CHECK(g.has_edge(cyc->front(), cyc->back()));
          CHECK(cyc->size() >= 3);
          CHECK(std::count(cyc->begin(), cyc->end(), b) == 1);
        }
      }
    }
  }
}

TEST_CASE("is_chord_edge") {
  const Graph k4 = complete_graph(4);
  for (const Edge& e : k4.edges()) CHECK(is_chord_edge(k4, e));
  const Graph c5 = cycle_graph(5);
  for (const Edge& e : c5.edges()) CHECK_FALSE(is_chord_edge(c5, e));
  const Graph t3 = tightness_graph(3);
  for (const Edge& e : t3.edges()) CHECK_FALSE(is_chord_edge(t3, e));
  CHECK_THROWS_AS(is_chord_edge(c5, Edge::of(0, 2)), std::invalid_argument);
}

TEST_CASE("is_chordless") {
  CHECK(is_chordless(cycle_graph(5)).chordless);
  const auto k4 = is_chordless(complete_graph(4));
  CHECK_FALSE(k4.chordless);
  REQUIRE(k4.witness.has_value());
  CHECK(is_valid_chord_witness(complete_graph(4), *k4.witness));
  CHECK(is_chordless(full_subdivision(complete_graph(5))).chordless);
  const auto w6 = is_chordless(wheel_graph(6));
  CHECK_FALSE(w6.chordless);
  CHECK(is_valid_chord_witness(wheel_graph(6), *w6.witness));
}

TEST_CASE("is_chordless agrees with cycle enumeration") {
  std::mt19937_64 rng(31);
  int chordless = 0;
  for (int t = 0; t < 150; ++t) {
    const Graph g = t % 2 == 0 ? random_graph(4 + t % 5, 0.4, rng) : ear_tree(5 + t % 6, 1 + t % 3, rng);
    const auto r = is_chordless(g);
    CHECK(r.chordless == !oracle::has_chord(g));
    if (r.chordless) {
      ++chordless;
      CHECK_FALSE(r.witness.has_value());
    } else {
      REQUIRE(r.witness.has_value());
      CHECK(is_valid_chord_witness(g, *r.witness));
    }
  }
  CHECK(chordless > 10);
}

TEST_CASE("full subdivisions are chordless") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 40; ++t) CHECK(is_chordless(full_subdivision(random_graph(3 + t % 12, 0.5, rng))).chordless);
}

TEST_CASE("is_minimally_2connected") {
  CHECK(is_minimally_2connected(cycle_graph(5)));
  CHECK_FALSE(is_minimally_2connected(complete_graph(4)));
  CHECK_FALSE(is_minimally_2connected(tightness_graph(3)));
  CHECK(is_minimally_2connected(path_graph(2)));
  CHECK(is_minimally_2connected(full_subdivision(complete_graph(4))));
}

TEST_CASE("menger_pair") {
  SUBCASE("C5 arcs") {
    const auto p = menger_pair(cycle_graph(5), 0, 2, 3);
    CHECK(p.to_y == std::vector<Vertex>{0, 1, 2});
    CHECK(p.to_z == std::vector<Vertex>{0, 4, 3});
  }
  SUBCASE("x equals y") {
    const auto p = menger_pair(cycle_graph(5), 0, 0, 1);
    CHECK(p.to_y == std::vector<Vertex>{0});
    CHECK(p.to_z == std::vector<Vertex>{0, 1});
  }
  SUBCASE("K4") {
    const auto p = menger_pair(complete_graph(4), 0, 1, 2);
    CHECK(p.to_y == std::vector<Vertex>{0, 1});
    CHECK(p.to_z == std::vector<Vertex>{0, 2});
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(menger_pair(path_graph(3), 0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(menger_pair(cycle_graph(5), 0, 2, 2), std::invalid_argument);
  }
  SUBCASE("random 2-connected graphs") {
    std::mt19937_64 rng(41);
    int checked = 0;
    for (int t = 0; t < 100 && checked < 40; ++t) {
      const Graph g = random_graph(5 + t % 5, 0.6, rng);
      if (!is_two_connected(g)) continue;
      ++checked;
      const auto n = g.order();
      const auto x = static_cast<Vertex>(rng() % n);
      const auto y = static_cast<Vertex>(rng() % n);
      const auto z = static_cast<Vertex>((y + 1 + rng() % (n - 1)) % n);
      const auto p = menger_pair(g, x, y, z);
      CHECK(is_path(g, p.to_y));
      CHECK(is_path(g, p.to_z));
      CHECK(p.to_y.front() == x);
      CHECK(p.to_y.back() == y);
      CHECK(p.to_z.back() == z);
      std::set<Vertex> a(p.to_y.begin(), p.to_y.end());
      for (Vertex v : p.to_z) CHECK((v == x || a.count(v) == 0));
    }
    CHECK(checked >= 20);
  }
}

TEST_CASE("check_property_P") {
  SUBCASE("C6 with a perfect matching") {
    const Graph g = cycle_graph(6);
    const Matching m(g, {Edge{0, 1}, Edge{2, 3}, Edge{4, 5}});
    CHECK(check_property_P(g, m).holds);
  }
  SUBCASE("K4 with two matched edges") {
    const Graph g = complete_graph(4);
    const Matching m(g, {Edge{0, 1}, Edge{2, 3}});
    const auto r = check_property_P(g, m);
    CHECK_FALSE(r.holds);
    CHECK(r.violation == PropertyPReport::Violation::kChord);
    REQUIRE(r.chord.has_value());
    CHECK(r.chord->chord == Edge{0, 2});
    CHECK(is_valid_chord_witness(g, *r.chord));
  }
  SUBCASE("path with K2 quotient") {
    const Graph g = path_graph(4);
    CHECK(check_property_P(g, Matching(g, {Edge{0, 1}, Edge{2, 3}})).holds);
  }
  SUBCASE("quotient not 2-connected") {
    const Graph g = path_graph(6);
    const auto r = check_property_P(g, Matching(g, {Edge{0, 1}, Edge{2, 3}, Edge{4, 5}}));
    CHECK_FALSE(r.holds);
    CHECK(r.violation == PropertyPReport::Violation::kQuotientNotTwoConnected);
  }
}

TEST_CASE("remove_leafblock_interiors") {
  SUBCASE("path, both leafblocks") {
    const Graph g = path_graph(4);
    const auto r = remove_leafblock_interiors(g, leafblocks(blocks(g)));
    CHECK(r.to_host == std::vector<Vertex>{1, 2});
    CHECK(r.graph.size() == 1);
  }
  SUBCASE("two triangles, both leafblocks") {
    const Graph g = two_triangles();
    const auto r = remove_leafblock_interiors(g, leafblocks(blocks(g)));
    CHECK(r.to_host == std::vector<Vertex>{2});
  }
  SUBCASE("path 0-1-2, leafblock 01 only") {
    const Graph g = path_graph(3);
    const auto d = blocks(g);
    std::vector<LeafblockReport> chosen;
    for (const auto& l : leafblocks(d)) {
      if (d.blocks[l.block].edges.front() == Edge{0, 1}) chosen.push_back(l);
    }
    REQUIRE(chosen.size() == 1);
    const auto r = remove_leafblock_interiors(g, chosen);
    CHECK(r.to_host == std::vector<Vertex>{1, 2});
    CHECK(r.graph.size() == 1);
  }
  SUBCASE("rejects bad input") {
    const Graph c = cycle_graph(5);
    CHECK_THROWS_AS(remove_leafblock_interiors(c, std::vector<LeafblockReport>{}), std::invalid_argument);
    const Graph g = path_graph(4);
    const std::vector<LeafblockReport> bogus{{0, 3}};
    CHECK_THROWS_AS(remove_leafblock_interiors(g, bogus), std::invalid_argument);
  }
}

TEST_CASE("edge removal in minimally 2-connected blocks") {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    const Graph g = full_subdivision(random_graph(4 + t % 6, 0.6, rng));
    for (const Block& b : blocks(g).blocks) {
      if (b.vertices.size() < 3) continue;
      const Graph h = induced_subgraph(g, b.vertices).graph;
      for (const Edge& e : h.edges()) {
        const Graph he = remove_edge(h, e);
        CHECK_FALSE(is_two_connected(he));
        const auto d = blocks(he);
        CHECK_FALSE(d.is_cutvertex(e.u));
        CHECK_FALSE(d.is_cutvertex(e.v));
        CHECK_FALSE(oracle::on_common_cycle(he, e.u, e.v));
        const auto leaves = leafblocks(d);
        REQUIRE(leaves.size() == 2);
        for (const auto& l : leaves) {
          int hits = 0;
          for (Vertex v : d.blocks[l.block].vertices) hits += v != l.cutvertex && (v == e.u || v == e.v);
          CHECK(hits == 1);
        }
        for (Vertex u : d.cutvertices) {
          const std::vector<Vertex> drop{u};
          const auto rest = remove_vertices(he, drop);
          std::vector<int> comp;
          CHECK(connected_components(rest.graph, comp) == 2);
          CHECK(comp[*rest.from_host(e.u)] != comp[*rest.from_host(e.v)]);
        }
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}
