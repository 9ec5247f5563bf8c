#include "chordless/audit.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <set>

#include "chordless/corpus.hpp"
#include "chordless/degeneracy.hpp"
#include "chordless/edge_list.hpp"
#include "chordless/generators.hpp"
#include "chordless/strong_coloring.hpp"

namespace chordless {
namespace {

using json = nlohmann::ordered_json;

json edge_json(Edge e) { return json::array({e.u, e.v}); }

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e));
  return out;
}

json vertices_json(const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(v);
  return out;
}

json witness(const Graph& g, json detail) {
  json w;
  w["graph"] = to_json(g);
  w["detail"] = std::move(detail);
  return w;
}

json witness(const Graph& g, const Matching& m, json detail) {
  json w;
  w["graph"] = to_json(g);
  w["matching"] = edges_json(m.edges());
  w["detail"] = std::move(detail);
  return w;
}

int component_count(const Graph& g) {
  std::vector<int> comp;
  return connected_components(g, comp);
}

bool same_component(const Graph& g, Vertex a, Vertex b) {
  std::vector<int> comp;
  connected_components(g, comp);
  return comp[ix(a)] == comp[ix(b)];
}

std::vector<Vertex> random_subset(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (uniform_below(rng, 2) == 0) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<Vertex> random_subset_of_size(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<Vertex> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
  for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + uniform_below(rng, n - i)]);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

// A walk that never revisits a vertex, of up to max_len vertices.
std::vector<Vertex> random_path(const Graph& g, std::size_t max_len, std::mt19937_64& rng) {
  std::vector<Vertex> path{static_cast<Vertex>(uniform_below(rng, g.order()))};
  std::vector<char> seen(g.order(), 0);
  seen[ix(path[0])] = 1;
  const std::size_t len = 1 + uniform_below(rng, max_len);
  while (path.size() < len) {
    std::vector<Vertex> next;
    for (Vertex w : g.neighbors(path.back())) {
      if (!seen[ix(w)]) next.push_back(w);
    }
    if (next.empty()) break;
    const Vertex w = next[uniform_below(rng, next.size())];
    seen[ix(w)] = 1;
    path.push_back(w);
  }
  return path;
}

bool is_path_in(const Graph& g, const std::vector<Vertex>& path) {
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!g.contains(path[i]) || !seen.insert(path[i]).second) return false;
    if (i > 0 && !g.has_edge(path[i - 1], path[i])) return false;
  }
  return !path.empty();
}

int low_degree_count(const Graph& g) {
  int count = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) <= 2) ++count;
  }
  return count;
}

// Returns a description of the first failed claim about H - e for a
// 2-connected H, or an empty string. `low` marks vertices that must count as
// low-degree witnesses (degree <= 2 in the graph the lemma talks about).
std::string check_edge_removal(const Graph& h, Edge e, const std::vector<char>* low) {
  const Graph he = remove_edge(h, e);
  if (is_two_connected(he)) return "H - e is 2-connected";
  if (!is_connected(he)) return "H - e is disconnected";
  const BlockDecomposition d = blocks(he);
  if (d.is_cutvertex(e.u) || d.is_cutvertex(e.v)) return "an endpoint of e is a cutvertex of H - e";
  if (in_common_cycle(he, d, e.u, e.v).on_common_cycle) return "endpoints of e lie on a common cycle of H - e";
  const auto leaves = leafblocks(d);
  if (leaves.size() != 2) return "H - e has " + std::to_string(leaves.size()) + " leafblocks";
  for (const LeafblockReport& leaf : leaves) {
    const Block& b = d.blocks[static_cast<std::size_t>(leaf.block)];
    int hits = 0;
    bool has_low = false;
    for (Vertex v : b.vertices) {
      if (v == leaf.cutvertex) continue;
      if (v == e.u || v == e.v) ++hits;
      if (low != nullptr && (*low)[ix(v)] && !d.is_cutvertex(v)) has_low = true;
    }
    if (hits != 1) return "a leafblock interior holds " + std::to_string(hits) + " endpoints of e";
    if (low != nullptr && !has_low) return "a leafblock has no low-degree non-cutvertex";
  }
  for (Vertex u : d.cutvertices) {
    const std::vector<Vertex> drop{u};
    if (component_count(remove_vertices(he, drop).graph) != 2) {
      return "removing cutvertex " + std::to_string(u) + " does not leave two components";
    }
  }
  return {};
}

std::string check_menger(const Graph& h, Vertex x, Vertex y, Vertex z, const MengerPathPair& p) {
  if (p.shared != x) return "shared vertex differs from x";
  if (!is_path_in(h, p.to_y) || p.to_y.front() != x || p.to_y.back() != y) return "to_y is not an x-y path";
  if (!is_path_in(h, p.to_z) || p.to_z.front() != x || p.to_z.back() != z) return "to_z is not an x-z path";
  std::set<Vertex> on_y(p.to_y.begin(), p.to_y.end());
  for (Vertex v : p.to_z) {
    if (v != x && on_y.count(v) != 0) return "paths meet outside x";
  }
  return {};
}

std::optional<RedWitness> red_by_definition(const Graph& g, const Matching& m, Edge a, Edge b) {
  for (int side = 0; side < 2; ++side) {
    const Edge pq = side == 0 ? a : b;
    const Edge rs = side == 0 ? b : a;
    for (Vertex p : {pq.u, pq.v}) {
      const Vertex q = pq.other(p);
      if (degree_in_matched(g, m, p) != 2 || degree_in_matched(g, m, q) <= 2) continue;
      for (Vertex r : {rs.u, rs.v}) {
        if (g.has_edge(p, r)) return RedWitness{p, q, r, rs.other(r)};
      }
    }
  }
  return std::nullopt;
}

bool valid_red_witness(const Graph& g, const Matching& m, Edge a, Edge b, const RedWitness& w) {
  const Edge pq = Edge::of(w.p, w.q);
  const Edge rs = Edge::of(w.r, w.s);
  const bool pairs_ok = (pq == a && rs == b) || (pq == b && rs == a);
  return pairs_ok && g.has_edge(w.p, w.r) && degree_in_matched(g, m, w.p) == 2 &&
         degree_in_matched(g, m, w.q) > 2;
}

std::string check_expanded_path(const Graph& g, const ContractedGraph& cg, const std::vector<Vertex>& qpath,
                                const std::vector<Vertex>& path) {
  if (path.empty()) return "empty host path";
  std::set<Vertex> seen;
  std::vector<int> pos(g.order(), -1);  // index along qpath of the pair holding a vertex
  for (std::size_t i = 0; i < qpath.size(); ++i) {
    const Edge pair = cg.pairs[ix(qpath[i])];
    pos[ix(pair.u)] = pos[ix(pair.v)] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!g.contains(path[i]) || !seen.insert(path[i]).second) return "host path repeats or leaves the graph";
    if (pos[ix(path[i])] < 0) return "host vertex outside the listed pairs";
    if (i == 0) continue;
    if (!g.has_edge(path[i - 1], path[i])) return "consecutive host vertices are not adjacent";
    const int pa = pos[ix(path[i - 1])];
    const int pb = pos[ix(path[i])];
    if (pa == pb) {
      if (cg.pairs[ix(qpath[static_cast<std::size_t>(pa)])] != Edge::of(path[i - 1], path[i])) {
        return "edge inside a pair is not the matched edge";
      }
    } else if (std::abs(pa - pb) != 1) {
      return "edge joins pairs that are not consecutive";
    }
  }
  if (pos[ix(path.front())] != 0) return "host path does not start in the first pair";
  if (pos[ix(path.back())] != static_cast<int>(qpath.size()) - 1) return "host path does not end in the last pair";
  return {};
}

}  // namespace

CheckResult& AuditLog::check(std::string_view name) {
  auto it = checks_.find(name);
  if (it == checks_.end()) {
    it = checks_.emplace(std::string(name), CheckResult{}).first;
    it->second.name = std::string(name);
  }
  return it->second;
}

void AuditLog::record(std::string_view name, bool ok, const json& w) {
  CheckResult& c = check(name);
  ++c.instances;
  if (ok) return;
  ++c.failures;
  if (c.witnesses.size() < kMaxWitnesses) c.witnesses.push_back(w);
}

bool AuditLog::passed() const { return failures() == 0; }

std::size_t AuditLog::failures() const {
  std::size_t total = 0;
  for (const auto& [name, c] : checks_) total += c.failures;
  return total;
}

json AuditLog::to_json() const {
  json checks = json::array();
  std::size_t instances = 0;
  for (const auto& [name, c] : checks_) {
    instances += c.instances;
    json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed();
    entry["instances"] = c.instances;
    entry["failures"] = c.failures;
    entry["witnesses"] = c.witnesses;
    checks.push_back(std::move(entry));
  }
  json out;
  out["checks"] = std::move(checks);
  out["totals"] = {{"checks", checks_.size()}, {"instances", instances}, {"failures", failures()}};
  return out;
}

int degree_in_matched(const Graph& g, const Matching& m, Vertex v) {
  std::vector<char> matched(g.order(), 0);
  for (const Edge& e : m.edges()) matched[ix(e.u)] = matched[ix(e.v)] = 1;
  int d = 0;
  for (Vertex w : g.neighbors(v)) d += matched[ix(w)];
  return d;
}

bool common_cycle_by_separators(const Graph& g, Vertex a, Vertex b) {
  if (g.has_edge(a, b)) return same_component(remove_edge(g, Edge::of(a, b)), a, b);
  if (!same_component(g, a, b)) return false;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto xv = static_cast<Vertex>(x);
    if (xv == a || xv == b) continue;
    const std::vector<Vertex> drop{xv};
    const InducedSubgraph rest = remove_vertices(g, drop);
    if (!same_component(rest.graph, *rest.from_host(a), *rest.from_host(b))) return false;
  }
  return true;
}

bool is_valid_chord_witness(const Graph& g, const ChordWitness& w) {
  const Edge c = w.chord;
  if (!g.contains(c.u) || !g.contains(c.v) || !g.has_edge(c.u, c.v)) return false;
  const auto& cyc = w.cycle;
  if (cyc.size() < 3) return false;
  if (std::set<Vertex>(cyc.begin(), cyc.end()).size() != cyc.size()) return false;
  bool has_u = false;
  bool has_v = false;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const Vertex a = cyc[i];
    const Vertex b = cyc[(i + 1) % cyc.size()];
    if (!g.contains(a) || !g.contains(b) || !g.has_edge(a, b)) return false;
    if (Edge::of(a, b) == c) return false;
    has_u = has_u || a == c.u;
    has_v = has_v || a == c.v;
  }
  return has_u && has_v;
}

void audit_structure(const Graph& g, std::mt19937_64& rng, AuditLog& log, const SamplingConfig& sampling) {
  const BlockDecomposition d = blocks(g);

  {
    std::vector<int> seen(g.size(), 0);
    bool ok = d.edge_block.size() == g.size();
    for (const Block& b : d.blocks) {
      for (const Edge& e : b.edges) {
        const auto id = g.edge_id(e.u, e.v);
        if (!id) {
          ok = false;
        } else {
          ++seen[*id];
        }
      }
      if (b.vertices.size() >= 3) {
        const Graph bg(g.order(), b.edges);
        ok = ok && is_two_connected(induced_subgraph(bg, b.vertices).graph);
        ok = ok && induced_subgraph(g, b.vertices).graph.size() == b.edges.size();
      }
    }
    ok = ok && std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
    log.expect("structure.block-partition", ok, [&] { return witness(g, "blocks do not partition the edges"); });
  }

  {
    const int base = component_count(g);
    for (std::size_t v = 0; v < g.order(); ++v) {
      const std::vector<Vertex> drop{static_cast<Vertex>(v)};
      const bool cut = component_count(remove_vertices(g, drop).graph) > base;
      log.expect("structure.cutvertices", cut == d.is_cutvertex(static_cast<Vertex>(v)),
                 [&] { return witness(g, {{"vertex", v}, {"expected_cutvertex", cut}}); });
    }
  }

  {
    const ChordlessReport r = is_chordless(g);
    log.expect("structure.chordless", r.chordless, [&] {
      json detail = "chord reported";
      if (r.witness) detail = {{"chord", edge_json(r.witness->chord)}, {"cycle", vertices_json(r.witness->cycle)}};
      return witness(g, detail);
    });
  }

  // Leafblock propositions, per non-trivial component.
  std::vector<int> comp;
  const int ncomp = connected_components(g, comp);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<Vertex> members;
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (comp[v] == c) members.push_back(static_cast<Vertex>(v));
    }
    if (members.size() < 2) continue;
    const Graph sub = induced_subgraph(g, members).graph;
    if (is_two_connected(sub)) continue;
    const BlockDecomposition sd = blocks(sub);
    const auto leaves = leafblocks(sd);
    log.expect("structure.leafblock-count", leaves.size() >= 2,
               [&] { return witness(sub, {{"leafblocks", leaves.size()}}); });
    for (const LeafblockReport& leaf : leaves) {
      const Block& b = sd.blocks[static_cast<std::size_t>(leaf.block)];
      const std::vector<Vertex> drop{leaf.cutvertex};
      const InducedSubgraph rest = remove_vertices(sub, drop);
      std::vector<int> rc;
      connected_components(rest.graph, rc);
      std::set<int> comps_in_block;
      std::size_t interior = 0;
      for (Vertex v : b.vertices) {
        if (v == leaf.cutvertex) continue;
        comps_in_block.insert(rc[ix(*rest.from_host(v))]);
        ++interior;
      }
      bool ok = comps_in_block.size() == 1;
      if (ok) {
        const int target = *comps_in_block.begin();
        ok = static_cast<std::size_t>(std::count(rc.begin(), rc.end(), target)) == interior;
      }
      log.expect("structure.leafblock-component", ok, [&] {
        return witness(sub, {{"block", vertices_json(b.vertices)}, {"cutvertex", leaf.cutvertex}});
      });
    }
    std::vector<LeafblockReport> some;
    for (const LeafblockReport& leaf : leaves) {
      if (uniform_below(rng, 2) == 0) some.push_back(leaf);
    }
    for (const std::vector<LeafblockReport>& chosen : {leaves, some}) {
      const InducedSubgraph rest = remove_leafblock_interiors(sub, chosen);
      log.expect("structure.leafblock-removal-connected", is_connected(rest.graph),
                 [&] { return witness(sub, {{"kept", vertices_json(rest.to_host)}}); });
    }
  }

  // Blocks of a chordless graph are minimally 2-connected; edge removal and
  // Menger paths inside each block.
  for (const Block& b : d.blocks) {
    if (b.vertices.size() < 3) continue;
    const Graph h = induced_subgraph(g, b.vertices).graph;
    log.expect("structure.block-minimally-2-connected", is_minimally_2connected(h),
               [&] { return witness(h, "block is not minimally 2-connected"); });
    std::vector<Edge> edges = h.edges();
    for (std::size_t t = 0; t < sampling.edge_removals && !edges.empty(); ++t) {
      const std::size_t pick = uniform_below(rng, edges.size());
      const Edge e = edges[pick];
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick));
      const std::string why = check_edge_removal(h, e, nullptr);
      log.expect("structure.edge-removal-leafblocks", why.empty(),
                 [&] { return witness(h, {{"edge", edge_json(e)}, {"failure", why}}); });
    }
    const auto n = h.order();
    const auto x = static_cast<Vertex>(uniform_below(rng, n));
    const auto y = static_cast<Vertex>(uniform_below(rng, n));
    auto z = static_cast<Vertex>(uniform_below(rng, n - 1));
    if (z >= y) ++z;
    std::string why;
    try {
      why = check_menger(h, x, y, z, menger_pair(h, x, y, z));
    } catch (const std::exception& ex) {
      why = ex.what();
    }
    log.expect("structure.menger-pair", why.empty(),
               [&] { return witness(h, {{"x", x}, {"y", y}, {"z", z}, {"failure", why}}); });
  }

  if (g.order() >= 2) {
    for (std::size_t t = 0; t < sampling.common_cycle_pairs; ++t) {
      const auto a = static_cast<Vertex>(uniform_below(rng, g.order()));
      auto b = static_cast<Vertex>(uniform_below(rng, g.order() - 1));
      if (b >= a) ++b;
      const CommonCycleResult r = in_common_cycle(g, d, a, b);
      const bool expected = common_cycle_by_separators(g, a, b);
      bool ok = r.on_common_cycle == expected;
      if (ok && r.separator) {
        const std::vector<Vertex> drop{*r.separator};
        const InducedSubgraph rest = remove_vertices(g, drop);
        ok = *r.separator != a && *r.separator != b &&
             !same_component(rest.graph, *rest.from_host(a), *rest.from_host(b));
      }
      if (ok && r.disconnected) ok = !same_component(g, a, b);
      const auto cycle = cycle_through(g, a, b);
      if (ok) ok = cycle.has_value() == expected;
      if (ok && cycle) {
        ok = is_path_in(g, *cycle) && cycle->size() >= 3 && g.has_edge(cycle->back(), cycle->front()) &&
             cycle->front() == a && std::find(cycle->begin(), cycle->end(), b) != cycle->end();
      }
      log.expect("structure.common-cycle", ok,
                 [&] { return witness(g, {{"a", a}, {"b", b}, {"expected", expected}}); });
    }
  }
}

void audit_contraction(const Graph& g, const Matching& m, std::mt19937_64& rng, AuditLog& log,
                       const SamplingConfig& sampling) {
  const ContractedGraph cg = contract(g, m);
  const Graph& q = cg.quotient;
  const std::size_t k = m.size();

  {
    bool ok = q.order() == k && cg.pairs == m.edges() && cg.witness.size() == q.size();
    ok = ok && cg.matched.to_host == m.vertices() &&
         cg.matched.graph == induced_subgraph(g, m.vertices()).graph;
    for (std::size_t i = 0; ok && i < k; ++i) {
      for (std::size_t j = i + 1; ok && j < k; ++j) {
        const Edge a = cg.pairs[i];
        const Edge b = cg.pairs[j];
        const bool linked = g.has_edge(a.u, b.u) || g.has_edge(a.u, b.v) || g.has_edge(a.v, b.u) ||
                            g.has_edge(a.v, b.v);
        ok = linked == q.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
    log.expect("contraction.quotient", ok, [&] { return witness(g, m, to_json(cg)); });
  }

  for (std::size_t id = 0; id < q.size(); ++id) {
    const Edge qe = q.edges()[id];
    const Edge a = cg.pairs[ix(qe.u)];
    const Edge b = cg.pairs[ix(qe.v)];
    const auto expected = red_by_definition(g, m, a, b);
    const auto& got = cg.witness[id];
    const bool ok = expected.has_value() == got.has_value() && (!got || valid_red_witness(g, m, a, b, *got));
    log.expect("contraction.classification", ok, [&] {
      return witness(g, m, {{"quotient_edge", edge_json(qe)}, {"expected_red", expected.has_value()}});
    });
  }

  // Red-only subgraphs; vertex set is the endpoints of the chosen edges.
  std::vector<Edge> red;
  for (std::size_t id = 0; id < q.size(); ++id) {
    if (cg.is_red(id)) red.push_back(q.edges()[id]);
  }
  if (!red.empty()) {
    for (std::size_t t = 0; t <= sampling.red_samples; ++t) {
      std::vector<Edge> chosen;
      if (t == 0) {
        chosen = red;
      } else {
        const std::uint64_t keep = 1 + uniform_below(rng, 4);  // keep probability keep/4
        for (const Edge& e : red) {
          if (uniform_below(rng, 4) < keep) chosen.push_back(e);
        }
      }
      if (chosen.empty()) continue;
      std::vector<int> deg(q.order(), 0);
      for (const Edge& e : chosen) {
        ++deg[ix(e.u)];
        ++deg[ix(e.v)];
      }
      std::size_t vertices = 0;
      int low = 0;
      for (int dv : deg) {
        if (dv == 0) continue;
        ++vertices;
        if (dv <= 2) ++low;
      }
      auto make = [&] { return witness(g, m, {{"red_subgraph", edges_json(chosen)}}); };
      log.expect("contraction.red-edge-count", chosen.size() <= vertices, make);
      log.expect("contraction.red-low-degree", chosen.size() == 1 || low >= 3, make);
    }
  }

  {
    const DegeneracyResult r = degeneracy_ordering(q, 2);
    const auto* ord = std::get_if<DegeneracyOrdering>(&r);
    log.expect("degeneracy.two-degenerate", ord != nullptr, [&] {
      return witness(g, m, {{"stuck_core", vertices_json(std::get<StuckCore>(r).vertices)}});
    });
    if (ord != nullptr) {
      const VertexColoring c = greedy_color(q, *ord);
      log.expect("degeneracy.three-colorable", is_proper(q, c) && c.colors <= 3,
                 [&] { return witness(g, m, {{"colors", c.colors}}); });
    }
  }

  if (q.order() >= 2) {
    for (std::size_t t = 0; t <= sampling.induced_samples; ++t) {
      const std::size_t size = t == 0 ? q.order() : 2 + uniform_below(rng, q.order() - 1);
      const std::vector<Vertex> subset = random_subset_of_size(q.order(), size, rng);
      const Graph h = induced_subgraph(q, subset).graph;
      log.expect("degeneracy.two-low-degree-vertices", low_degree_count(h) >= 2,
                 [&] { return witness(g, m, {{"quotient_subset", vertices_json(subset)}}); });
    }
  }

  // Blue-edge lemma on every 2-connected block of the quotient that is not a
  // single edge: H = G_{M'} for the pairs M' of the block.
  const BlockDecomposition qd = blocks(q);
  for (const Block& b : qd.blocks) {
    if (b.vertices.size() < 3) continue;
    std::vector<Edge> sub_pairs;
    for (Vertex v : b.vertices) sub_pairs.push_back(cg.pairs[ix(v)]);
    const Matching sub(g, sub_pairs);
    const PropertyPReport p = check_property_P(g, sub);
    log.expect("contraction.block-property-p", p.holds,
               [&] { return witness(g, sub, "property P fails on a 2-connected quotient block"); });
    if (!p.holds) continue;
    const ContractedGraph h = contracted_induced(cg, b.vertices);
    const Graph& hq = h.quotient;
    std::vector<char> low(hq.order(), 0);
    for (std::size_t v = 0; v < hq.order(); ++v) low[v] = hq.degree(static_cast<Vertex>(v)) <= 2;
    std::size_t blue = 0;
    for (std::size_t id = 0; id < hq.size(); ++id) {
      if (h.is_red(id)) continue;
      ++blue;
      const Edge e = hq.edges()[id];
      const std::string why = check_edge_removal(hq, e, &low);
      log.expect("contraction.blue-edge-removal", why.empty(), [&] {
        return witness(g, sub, {{"quotient_edge", edge_json(e)}, {"failure", why}});
      });
    }
    if (blue == 0) {
      log.expect("contraction.blue-free-low-degree", low_degree_count(hq) >= 3,
                 [&] { return witness(g, sub, "no blue edges and fewer than 3 low-degree vertices"); });
    }
    log.expect("contraction.blue-lemma-instance", true, [] { return json(); });
  }

  {
    const std::vector<Vertex> subset = random_subset(q.order(), rng);
    std::vector<Edge> sub_pairs;
    for (Vertex v : subset) sub_pairs.push_back(cg.pairs[ix(v)]);
    const Matching sub(g, sub_pairs);
    log.expect("contraction.induced-equals-fresh", contracted_induced(cg, subset) == contract(g, sub),
               [&] { return witness(g, m, {{"subset", vertices_json(subset)}}); });
  }

  if (q.order() > 0) {
    const std::vector<Vertex> qpath = random_path(q, 6, rng);
    std::string why;
    std::vector<Vertex> path;
    try {
      path = expand_path(cg, qpath);
      why = check_expanded_path(g, cg, qpath, path);
    } catch (const std::exception& ex) {
      why = ex.what();
    }
    log.expect("contraction.expand-path", why.empty(), [&] {
      return witness(g, m, {{"quotient_path", vertices_json(qpath)}, {"host_path", vertices_json(path)},
                            {"failure", why}});
    });
  }
}

void audit_coloring(const Graph& g, std::mt19937_64& rng, AuditLog& log, const ColoringAuditConfig& config) {
  if (g.size() == 0) return;
  const int delta = max_degree(g);

  std::optional<StrongColoringReport> report;
  std::string error;
  try {
    report = strong_color_chordless(g, config.budget);
  } catch (const std::exception& ex) {
    error = ex.what();
  }
  log.expect("coloring.pipeline-valid", report && !verify_strong(g, report->coloring),
             [&] { return witness(g, {{"error", error}}); });
  if (!report) return;
  const int used = report->coloring.colors_used;
  log.expect("coloring.pipeline-bound", used <= report->bound_claimed && used <= std::max(3 * delta, 5), [&] {
    return witness(g, {{"colors_used", used}, {"bound_claimed", report->bound_claimed}, {"delta", delta}});
  });
  if (delta >= 3) {
    log.expect("coloring.pipeline-3delta", used <= 3 * delta,
               [&] { return witness(g, {{"colors_used", used}, {"delta", delta}}); });
  }

  {
    const Graph conflict = conflict_graph(g);
    StrongEdgeColoring c = report->coloring;
    for (int round = 0; round < 2; ++round) {
      if (round == 1) {
        c.color[uniform_below(rng, c.color.size())] = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(used)));
      }
      bool clash = false;
      for (const Edge& e : conflict.edges()) clash = clash || c.color[ix(e.u)] == c.color[ix(e.v)];
      const bool flagged = verify_strong(g, c).has_value();
      log.expect("coloring.verify-agrees-with-conflict-graph", flagged == clash,
                 [&] { return witness(g, {{"coloring", c.color}, {"expected_violation", clash}}); });
    }
  }

  if (delta >= 3 && g.size() <= config.exact_edges) {
    const EdgeColorSearch s = edge_color_exact(g, delta, config.budget);
    const bool ok = s.status == SearchStatus::kFound && s.coloring && !edge_coloring_defect(g, *s.coloring);
    log.expect("coloring.exact-delta-edge-coloring", ok, [&] {
      return witness(g, {{"delta", delta}, {"nodes", s.nodes}, {"status", static_cast<int>(s.status)}});
    });
  }

  if (g.size() <= config.oracle_edges) {
    const OracleResult r = exact_chi_s(g, config.budget, config.oracle_edges);
    const auto value = r.value();
    bool ok = value.has_value() && r.coloring && !verify_strong(g, *r.coloring) && *value <= used &&
              *value <= 3 * delta && r.coloring->colors_used == *value;
    if (ok && delta <= 2) {
      const int pc = strong_color_paths_cycles(g).colors_used;
      ok = pc == *value && pc <= 5;
    }
    log.expect("coloring.oracle-consistent", ok, [&] {
      return witness(g, {{"oracle", value ? json(*value) : json()}, {"pipeline", used}, {"delta", delta}});
    });
  }
}

bool audit_mutant(const Graph& g, std::mt19937_64& rng, AuditLog& log) {
  const std::optional<Graph> mutant = plant_chord(g, rng);
  if (!mutant) return false;
  const ChordlessReport r = is_chordless(*mutant);
  log.expect("recognition.mutant-rejected", !r.chordless && r.witness && is_valid_chord_witness(*mutant, *r.witness),
             [&] { return witness(*mutant, "mutant accepted or witness invalid"); });
  bool refused = false;
  try {
    strong_color_chordless(*mutant);
  } catch (const NotChordless& ex) {
    refused = is_valid_chord_witness(*mutant, ex.witness());
  } catch (const std::exception&) {
  }
  log.expect("recognition.mutant-refused-by-pipeline", refused,
             [&] { return witness(*mutant, "pipeline did not refuse the mutant"); });
  return true;
}

AuditReport run_audit(const AuditConfig& config) {
  AuditReport out;
  out.config = config;
  CorpusConfig cc;
  cc.count = config.count;
  cc.seed = config.seed;
  cc.min_base = config.min_base;
  cc.max_base = config.max_base;
  const std::vector<NamedGraph> corpus = config.count == 0 ? std::vector<NamedGraph>{} : chordless_corpus(cc);
  out.graphs = corpus.size();

  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  for (const NamedGraph& item : corpus) {
    const Graph& g = item.graph;
    audit_structure(g, rng, out.log, config.sampling);
    audit_coloring(g, rng, out.log, config.coloring);
    if (g.size() == 0) continue;
    std::vector<Matching> matchings = coloring_matchings(g);
    for (std::size_t i = 0; i < config.random_matchings; ++i) matchings.push_back(random_matching(g, rng));
    for (const Matching& m : matchings) {
      audit_contraction(g, m, rng, out.log, config.sampling);
      ++out.pairs;
    }
  }

  if (config.mutants > 0) {
    for (const Graph& known : {complete_graph(4), wheel_graph(6)}) {
      const ChordlessReport r = is_chordless(known);
      out.log.expect("recognition.known-non-chordless",
                     !r.chordless && r.witness && is_valid_chord_witness(known, *r.witness),
                     [&] { return witness(known, "accepted as chordless"); });
    }
    std::size_t misses = 0;
    for (std::size_t i = 0; out.mutants < config.mutants && !corpus.empty(); ++i) {
      if (audit_mutant(corpus[i % corpus.size()].graph, rng, out.log)) {
        ++out.mutants;
        misses = 0;
      } else if (++misses > corpus.size()) {
        break;
      }
    }
  }
  return out;
}

nlohmann::ordered_json AuditReport::to_json() const {
  json out;
  out["corpus"] = {{"count", config.count},         {"seed", config.seed},
                   {"min_base", config.min_base},   {"max_base", config.max_base},
                   {"mutants", config.mutants},     {"random_matchings", config.random_matchings},
                   {"budget_nodes", config.coloring.budget}, {"oracle_edges", config.coloring.oracle_edges}};
  out["graphs"] = graphs;
  out["pairs"] = pairs;
  out["mutants_planted"] = mutants;
  out["passed"] = passed();
  const json log_json = log.to_json();
  out["totals"] = log_json["totals"];
  out["checks"] = log_json["checks"];
  return out;
}

}  // namespace chordless
