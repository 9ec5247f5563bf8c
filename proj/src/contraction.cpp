#include "chordless/contraction.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

#include "chordless/edge_coloring.hpp"

namespace chordless {
namespace {

std::string describe(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

// Red/blue classification of every quotient edge. `gm` is G[M] (host ids via
// its remap); pairs[i] is the matched edge behind quotient vertex i.
std::vector<std::optional<RedWitness>> classify(const Graph& quotient, const std::vector<Edge>& pairs,
                                                const InducedSubgraph& gm) {
  auto degree = [&](Vertex host) { return gm.graph.degree(*gm.from_host(host)); };
  auto adjacent = [&](Vertex x, Vertex y) { return gm.graph.has_edge(*gm.from_host(x), *gm.from_host(y)); };

  std::vector<std::optional<RedWitness>> out;
  out.reserve(quotient.size());
  for (const Edge& qe : quotient.edges()) {
    const Edge sides[2][2] = {{pairs[ix(qe.u)], pairs[ix(qe.v)]}, {pairs[ix(qe.v)], pairs[ix(qe.u)]}};
    std::optional<RedWitness> found;
    for (const auto& side : sides) {
      const Edge pq = side[0];
      const Edge rs = side[1];
      for (Vertex p : {pq.u, pq.v}) {
        for (Vertex r : {rs.u, rs.v}) {
          if (found) break;
          const Vertex q = pq.other(p);
          const Vertex s = rs.other(r);
          if (adjacent(p, r) && degree(p) == 2 && degree(q) > 2) found = RedWitness{p, q, r, s};
        }
      }
    }
    out.push_back(found);
  }
  return out;
}

}  // namespace

Matching::Matching(const Graph& host, std::vector<Edge> edges) {
  for (Edge& e : edges) e = Edge::of(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
  validate(host);
}

bool Matching::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge::of(e.u, e.v));
}

std::vector<Vertex> Matching::vertices() const {
  std::vector<Vertex> out;
  out.reserve(2 * edges_.size());
  for (const Edge& e : edges_) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Matching::validate(const Graph& host) const {
  std::vector<char> used(host.order(), 0);
  for (const Edge& e : edges_) {
    if (!host.has_edge(e.u, e.v)) throw std::invalid_argument("matching edge " + describe(e) + " not in graph");
    for (Vertex x : {e.u, e.v}) {
      if (used[ix(x)]) throw std::invalid_argument("not a matching: vertex " + std::to_string(x) + " covered twice");
      used[ix(x)] = 1;
    }
  }
}

std::size_t ContractedGraph::red_count() const {
  return static_cast<std::size_t>(std::count_if(witness.begin(), witness.end(), [](const auto& w) { return w.has_value(); }));
}

int ContractedGraph::matched_degree(Vertex host) const {
  auto local = matched.from_host(host);
  if (!local) throw std::out_of_range("vertex " + std::to_string(host) + " is not matched");
  return matched.graph.degree(*local);
}

std::optional<Vertex> ContractedGraph::vertex_of(Edge pair) const {
  Edge key = Edge::of(pair.u, pair.v);
  auto it = std::lower_bound(pairs.begin(), pairs.end(), key);
  if (it == pairs.end() || *it != key) return std::nullopt;
  return static_cast<Vertex>(it - pairs.begin());
}

InducedSubgraph induced_by_matching(const Graph& g, const Matching& m) {
  m.validate(g);
  return induced_subgraph(g, m.vertices());
}

ContractedGraph contract(const Graph& g, const Matching& m) {
  m.validate(g);
  ContractedGraph cg;
  cg.pairs = m.edges();
  cg.matched = induced_subgraph(g, m.vertices());

  std::vector<Vertex> owner(g.order(), -1);
  for (std::size_t i = 0; i < cg.pairs.size(); ++i) {
    owner[ix(cg.pairs[i].u)] = static_cast<Vertex>(i);
    owner[ix(cg.pairs[i].v)] = static_cast<Vertex>(i);
  }
  std::vector<Edge> qedges;
  for (const Edge& e : g.edges()) {
    const Vertex a = owner[ix(e.u)];
    const Vertex b = owner[ix(e.v)];
    if (a >= 0 && b >= 0 && a != b) qedges.push_back(Edge::of(a, b));
  }
  cg.quotient = Graph(cg.pairs.size(), qedges);
  cg.witness = classify(cg.quotient, cg.pairs, cg.matched);
  return cg;
}

ContractedGraph contracted_induced(const ContractedGraph& cg, std::span<const Vertex> subset) {
  InducedSubgraph sub = induced_subgraph(cg.quotient, subset);
  ContractedGraph out;
  out.quotient = std::move(sub.graph);
  std::vector<Vertex> local_endpoints;
  for (Vertex q : sub.to_host) {
    const Edge pair = cg.pairs[ix(q)];
    out.pairs.push_back(pair);
    local_endpoints.push_back(*cg.matched.from_host(pair.u));
    local_endpoints.push_back(*cg.matched.from_host(pair.v));
  }
  // G[M'] is the subgraph of G[M] induced by the surviving endpoints.
  InducedSubgraph restricted = induced_subgraph(cg.matched.graph, local_endpoints);
  for (Vertex& v : restricted.to_host) v = cg.matched.to_host[ix(v)];
  out.matched = std::move(restricted);
  out.witness = classify(out.quotient, out.pairs, out.matched);
  return out;
}

std::vector<Vertex> expand_path(const ContractedGraph& cg, std::span<const Vertex> qpath) {
  if (qpath.empty()) throw std::invalid_argument("expand_path: empty quotient path");
  std::map<Vertex, int> position;
  for (std::size_t i = 0; i < qpath.size(); ++i) {
    const Vertex q = qpath[i];
    if (!cg.quotient.contains(q)) throw std::invalid_argument("expand_path: unknown quotient vertex " + std::to_string(q));
    if (!position.emplace(q, static_cast<int>(i)).second) {
      throw std::invalid_argument("expand_path: quotient vertex " + std::to_string(q) + " repeats");
    }
    if (i > 0 && !cg.quotient.has_edge(qpath[i - 1], q)) {
      throw std::invalid_argument("expand_path: " + std::to_string(qpath[i - 1]) + " and " + std::to_string(q) +
                                  " are not adjacent in the quotient");
    }
  }
  const Edge first = cg.pairs[ix(qpath.front())];
  if (qpath.size() == 1) return {first.u};

  // Position of each matched host vertex along qpath, by G[M] local id.
  const Graph& gm = cg.matched.graph;
  std::vector<int> pos(gm.order(), -1);
  for (std::size_t i = 0; i < qpath.size(); ++i) {
    const Edge pair = cg.pairs[ix(qpath[i])];
    pos[ix(*cg.matched.from_host(pair.u))] = static_cast<int>(i);
    pos[ix(*cg.matched.from_host(pair.v))] = static_cast<int>(i);
  }
  const int last = static_cast<int>(qpath.size()) - 1;

  std::vector<Vertex> parent(gm.order(), -2);
  std::deque<Vertex> queue;
  for (Vertex h : {first.u, first.v}) {
    Vertex l = *cg.matched.from_host(h);
    parent[ix(l)] = -1;
    queue.push_back(l);
  }
  Vertex reached = -1;
  while (!queue.empty() && reached < 0) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : gm.neighbors(x)) {
      if (pos[ix(y)] < 0 || parent[ix(y)] != -2) continue;
      const int step = pos[ix(y)] - pos[ix(x)];
      // Same pair: only the matched edge joins them. Otherwise the pairs must
      // be consecutive along qpath.
      if (step != 1 && step != -1 && step != 0) continue;
      parent[ix(y)] = x;
      if (pos[ix(y)] == last) {
        reached = y;
        break;
      }
      queue.push_back(y);
    }
  }
  if (reached < 0) throw std::logic_error("expand_path: no host path found");
  std::vector<Vertex> path;
  for (Vertex x = reached; x != -1; x = parent[ix(x)]) path.push_back(cg.matched.to_host[ix(x)]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Matching> matchings_from_edge_coloring(const Graph& g, const ProperEdgeColoring& f) {
  if (auto defect = edge_coloring_defect(g, f)) throw std::invalid_argument("edge colouring: " + *defect);
  std::map<int, std::vector<Edge>> classes;
  for (std::size_t i = 0; i < g.size(); ++i) classes[f.color[i]].push_back(g.edges()[i]);
  std::vector<Matching> out;
  for (auto& [color, edges] : classes) out.emplace_back(g, std::move(edges));
  return out;
}

nlohmann::ordered_json to_json(const ContractedGraph& cg) {
  nlohmann::ordered_json j;
  auto pairs = nlohmann::ordered_json::array();
  for (const Edge& e : cg.pairs) pairs.push_back({e.u, e.v});
  j["pairs"] = std::move(pairs);
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cg.quotient.size(); ++i) {
    const Edge& e = cg.quotient.edges()[i];
    nlohmann::ordered_json item;
    item["u"] = e.u;
    item["v"] = e.v;
    item["color"] = cg.is_red(i) ? "red" : "blue";
    if (const auto& w = cg.witness[i]) {
      item["witness"] = {w->p, w->q, w->r, w->s};
    } else {
      item["witness"] = nullptr;
    }
    edges.push_back(std::move(item));
  }
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace chordless
