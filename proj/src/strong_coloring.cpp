#include "chordless/strong_coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>

#include "chordless/contraction.hpp"
#include "chordless/degeneracy.hpp"
#include "chordless/generators.hpp"

namespace chordless {
namespace {

// Walk order of a path or cycle component starting at `start`, as edge ids.
std::vector<std::size_t> walk_edges(const Graph& g, Vertex start) {
  std::vector<std::size_t> out;
  Vertex prev = -1;
  Vertex cur = start;
  for (;;) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (w == prev) continue;
      next = w;
      break;
    }
    if (next < 0) break;
    const std::size_t id = *g.edge_id(cur, next);
    if (!out.empty() && id == out.front()) break;
    out.push_back(id);
    prev = cur;
    cur = next;
    if (cur == start) break;
  }
  return out;
}

// Colour sequence for a cycle of length n.
std::vector<int> cycle_pattern(std::size_t n) {
  std::vector<int> out;
  if (n % 3 == 0) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<int>(i % 3) + 1);
  } else if (n == 4 || n == 5) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<int>(i) + 1);
  } else {
    // n = 4 b + 3 a with b = 1 (n = 1 mod 3) or b = 2 (n = 2 mod 3).
    const std::size_t fours = n % 3 == 1 ? 1 : 2;
    for (std::size_t b = 0; b < fours; ++b)
      for (int c = 1; c <= 4; ++c) out.push_back(c);
    while (out.size() < n)
      for (int c = 1; c <= 3; ++c) out.push_back(c);
  }
  return out;
}

StrongPath worst(StrongPath a, StrongPath b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

StrongPath to_strong_path(EdgeColoringPath p) {
  switch (p) {
    case EdgeColoringPath::kExact:
      return StrongPath::kExact;
    case EdgeColoringPath::kVizingFallback:
      return StrongPath::kVizingFallback;
    case EdgeColoringPath::kVizingClass2:
      return StrongPath::kVizingClass2;
  }
  return StrongPath::kVizingFallback;
}

// Greedy clique grown from every seed; the best is a lower bound on the
// chromatic number.
std::vector<Vertex> greedy_clique(const Graph& h) {
  std::vector<Vertex> by_degree(h.order());
  for (Vertex v = 0; ix(v) < h.order(); ++v) by_degree[ix(v)] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
  std::vector<Vertex> best;
  for (Vertex seed : by_degree) {
    std::vector<Vertex> clique{seed};
    for (Vertex v : by_degree) {
      if (v == seed) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return h.has_edge(c, v); })) clique.push_back(v);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  return best;
}

class DsaturSearch {
 public:
  DsaturSearch(const Graph& h, std::uint64_t budget)
      : h_(h), budget_(budget), color_(h.order(), -1), count_(h.order(), std::vector<int>(h.order() + 1, 0)),
        saturation_(h.order(), 0), uncolored_degree_(h.order()) {
    for (Vertex v = 0; ix(v) < h.order(); ++v) uncolored_degree_[ix(v)] = h.degree(v);
  }

  /// Plain DSATUR pass (no backtracking) for the initial upper bound.
  std::vector<int> greedy() {
    for (std::size_t step = 0; step < h_.order(); ++step) {
      Vertex v = pick();
      int c = 0;
      while (count_[ix(v)][static_cast<std::size_t>(c)] > 0) ++c;
      assign(v, c);
    }
    std::vector<int> out = color_;
    for (Vertex v = 0; ix(v) < h_.order(); ++v) unassign(v);
    return out;
  }

  /// Branch and bound below `best_colors`; returns false when the budget ran
  /// out before the search finished.
  bool improve(std::vector<int>& best, int& best_colors, int lower_bound) {
    best_ = &best;
    best_colors_ = &best_colors;
    lower_bound_ = lower_bound;
    return descend(0, 0);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Vertex pick() const {
    Vertex best = -1;
    for (Vertex v = 0; ix(v) < h_.order(); ++v) {
      if (color_[ix(v)] >= 0) continue;
      if (best < 0 || saturation_[ix(v)] > saturation_[ix(best)] ||
          (saturation_[ix(v)] == saturation_[ix(best)] && uncolored_degree_[ix(v)] > uncolored_degree_[ix(best)])) {
        best = v;
      }
    }
    return best;
  }
  void assign(Vertex v, int c) {
    color_[ix(v)] = c;
    for (Vertex w : h_.neighbors(v)) {
      if (count_[ix(w)][static_cast<std::size_t>(c)]++ == 0) ++saturation_[ix(w)];
      --uncolored_degree_[ix(w)];
    }
  }
  void unassign(Vertex v) {
    const int c = color_[ix(v)];
    if (c < 0) return;
    color_[ix(v)] = -1;
    for (Vertex w : h_.neighbors(v)) {
      if (--count_[ix(w)][static_cast<std::size_t>(c)] == 0) --saturation_[ix(w)];
      ++uncolored_degree_[ix(w)];
    }
  }

  bool descend(std::size_t colored, int used) {
    if (used >= *best_colors_) return true;
    if (colored == h_.order()) {
      *best_ = color_;
      *best_colors_ = used;
      return true;
    }
    if (nodes_ >= budget_) return false;
    ++nodes_;
    const Vertex v = pick();
    for (int c = 0; c <= used && c + 1 < *best_colors_; ++c) {
      if (count_[ix(v)][static_cast<std::size_t>(c)] > 0) continue;
      assign(v, c);
      const bool finished = descend(colored + 1, std::max(used, c + 1));
      unassign(v);
      if (!finished) return false;
      if (*best_colors_ <= lower_bound_) return true;
    }
    return true;
  }

  const Graph& h_;
  const std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> color_;
  std::vector<std::vector<int>> count_;
  std::vector<int> saturation_;
  std::vector<int> uncolored_degree_;
  std::vector<int>* best_ = nullptr;
  int* best_colors_ = nullptr;
  int lower_bound_ = 0;
};

StrongEdgeColoring from_vertex_colors(const std::vector<int>& colors) {
  StrongEdgeColoring out;
  for (int c : colors) out.color.push_back(c + 1);
  out.colors_used = distinct_colors(out.color);
  return out;
}

}  // namespace

int distinct_colors(const std::vector<int>& color) {
  std::set<int> seen;
  for (int c : color)
    if (c > 0) seen.insert(c);
  return static_cast<int>(seen.size());
}

Graph conflict_graph(const Graph& g) {
  std::vector<Edge> links;
  std::vector<char> near(g.order(), 0);
  std::vector<Vertex> touched;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge e = g.edges()[i];
    touched.clear();
    for (Vertex end : {e.u, e.v}) {
      if (!near[ix(end)]) {
        near[ix(end)] = 1;
        touched.push_back(end);
      }
      for (Vertex w : g.neighbors(end)) {
        if (!near[ix(w)]) {
          near[ix(w)] = 1;
          touched.push_back(w);
        }
      }
    }
    // Any edge touching N[u] u N[v] conflicts with uv.
    for (Vertex x : touched) {
      for (Vertex y : g.neighbors(x)) {
        const std::size_t j = *g.edge_id(x, y);
        if (j > i) links.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
    for (Vertex x : touched) near[ix(x)] = 0;
  }
  return Graph(g.size(), links);
}

std::optional<Violation> verify_strong(const Graph& g, const StrongEdgeColoring& c) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i >= c.color.size() || c.color[i] <= 0) throw UncoloredEdge(i);
  }
  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < g.size(); ++i) classes[c.color[i]].push_back(i);

  std::optional<Violation> found;
  auto offer = [&](Violation v) {
    if (v.first > v.second) std::swap(v.first, v.second);
    if (!found || std::pair(v.first, v.second) < std::pair(found->first, found->second)) found = v;
  };
  std::vector<long> owner(g.order(), -1);
  for (const auto& [color, members] : classes) {
    for (std::size_t id : members) {
      const Edge e = g.edges()[id];
      for (Vertex x : {e.u, e.v}) {
        if (owner[ix(x)] >= 0) {
          offer({static_cast<std::size_t>(owner[ix(x)]), id, Violation::Reason::kSharedEndpoint, std::nullopt});
        } else {
          owner[ix(x)] = static_cast<long>(id);
        }
      }
    }
    for (std::size_t id : members) {
      const Edge e = g.edges()[id];
      for (Vertex x : {e.u, e.v}) {
        for (Vertex y : g.neighbors(x)) {
          const long other = owner[ix(y)];
          if (other >= 0 && static_cast<std::size_t>(other) != id && owner[ix(x)] == static_cast<long>(id)) {
            offer({id, static_cast<std::size_t>(other), Violation::Reason::kLinkingEdge, Edge::of(x, y)});
          }
        }
      }
    }
    for (std::size_t id : members) {
      owner[ix(g.edges()[id].u)] = -1;
      owner[ix(g.edges()[id].v)] = -1;
    }
  }
  return found;
}

std::string_view strong_path_name(StrongPath p) {
  switch (p) {
    case StrongPath::kPathsCycles:
      return "paths-cycles";
    case StrongPath::kExact:
      return "exact";
    case StrongPath::kVizingFallback:
      return "vizing-fallback";
    case StrongPath::kVizingClass2:
      return "vizing-class2";
  }
  return "unknown";
}

StrongEdgeColoring strong_color_paths_cycles(const Graph& g) {
  if (max_degree(g) > 2) throw std::invalid_argument("strong_color_paths_cycles: maximum degree exceeds 2");
  StrongEdgeColoring out;
  out.color.assign(g.size(), 0);
  std::vector<int> component;
  const int count = connected_components(g, component);
  std::vector<Vertex> start(static_cast<std::size_t>(count), -1);
  std::vector<char> is_path(static_cast<std::size_t>(count), 0);
  for (Vertex v = 0; ix(v) < g.order(); ++v) {
    const auto k = static_cast<std::size_t>(component[ix(v)]);
    if (g.degree(v) <= 1 && !is_path[k]) {
      is_path[k] = 1;
      start[k] = v;
    }
    if (start[k] < 0) start[k] = v;
  }
  for (std::size_t k = 0; k < static_cast<std::size_t>(count); ++k) {
    const auto walk = walk_edges(g, start[k]);
    if (walk.empty()) continue;
    std::vector<int> pattern;
    if (is_path[k]) {
      for (std::size_t i = 0; i < walk.size(); ++i) pattern.push_back(static_cast<int>(i % 3) + 1);
    } else {
      pattern = cycle_pattern(walk.size());
    }
    for (std::size_t i = 0; i < walk.size(); ++i) out.color[walk[i]] = pattern[i];
  }
  out.colors_used = distinct_colors(out.color);
  if (g.size() > 0) {
    if (auto v = verify_strong(g, out)) {
      throw std::logic_error("paths/cycles colouring conflicts on edges " + std::to_string(v->first) + " and " +
                             std::to_string(v->second));
    }
  }
  return out;
}

StrongColoringReport strong_color_chordless(const Graph& g, std::uint64_t budget) {
  if (g.size() == 0) throw std::invalid_argument("strong_color_chordless: graph has no edges");
  if (auto report = is_chordless(g); !report.chordless) throw NotChordless(*report.witness);

  StrongColoringReport out;
  out.delta = max_degree(g);
  out.coloring.color.assign(g.size(), 0);
  out.coloring.pair.assign(g.size(), {0, 0});

  std::vector<int> component;
  const int count = connected_components(g, component);
  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(count));
  for (Vertex v = 0; ix(v) < g.order(); ++v) members[ix(component[ix(v)])].push_back(v);

  bool fell_back = false;
  for (int k = 0; k < count; ++k) {
    InducedSubgraph sub = induced_subgraph(g, members[static_cast<std::size_t>(k)]);
    const Graph& h = sub.graph;
    if (h.size() == 0) continue;
    auto host_id = [&](std::size_t local) {
      const Edge e = h.edges()[local];
      return *g.edge_id(sub.to_host[ix(e.u)], sub.to_host[ix(e.v)]);
    };

    if (max_degree(h) <= 2) {
      StrongEdgeColoring part = strong_color_paths_cycles(h);
      for (std::size_t i = 0; i < h.size(); ++i) out.coloring.color[host_id(i)] = part.color[i];
      continue;
    }

    ChromaticIndexResult f = chromatic_index_coloring(h, budget);
    out.path = worst(out.path, to_strong_path(f.path));
    if (f.coloring.colors > max_degree(h)) fell_back = true;
    for (const Matching& m : matchings_from_edge_coloring(h, f.coloring)) {
      const Edge first = m.edges().front();
      const int i = f.coloring.color[*h.edge_id(first.u, first.v)];
      ContractedGraph cg = contract(h, m);
      DegeneracyResult peel = degeneracy_ordering(cg.quotient, 2);
      if (!std::holds_alternative<DegeneracyOrdering>(peel)) {
        throw std::logic_error("quotient of colour class " + std::to_string(i) + " is not 2-degenerate");
      }
      VertexColoring vc = greedy_color(cg.quotient, std::get<DegeneracyOrdering>(peel));
      for (std::size_t q = 0; q < cg.pairs.size(); ++q) {
        const Edge pair = cg.pairs[q];
        const std::size_t id = host_id(*h.edge_id(pair.u, pair.v));
        const int j = vc.color[q] + 1;
        out.coloring.pair[id] = {i, j};
        out.coloring.color[id] = flatten_pair(i, j);
      }
      out.classes.push_back({k, i, m.size(), cg.quotient.size(), cg.red_count(), vc.colors});
    }
  }
  out.coloring.colors_used = distinct_colors(out.coloring.color);
  if (out.delta <= 2) {
    out.bound_claimed = 5;
  } else {
    out.bound_claimed = fell_back ? 3 * (out.delta + 1) : 3 * out.delta;
  }
  if (auto v = verify_strong(g, out.coloring)) {
    throw std::logic_error("pipeline colouring conflicts on edges " + std::to_string(v->first) + " and " +
                           std::to_string(v->second));
  }
  return out;
}

OracleResult exact_chi_s(const Graph& g, std::uint64_t budget, std::size_t edge_cap) {
  const auto started = std::chrono::steady_clock::now();
  OracleResult out;
  if (g.size() == 0) {
    out.coloring = StrongEdgeColoring{};
    return out;
  }
  const Graph h = conflict_graph(g);
  DsaturSearch search(h, budget);
  std::vector<int> best = search.greedy();
  int best_colors = 0;
  for (int c : best) best_colors = std::max(best_colors, c + 1);
  out.lower_bound = static_cast<int>(greedy_clique(h).size());
  out.upper_bound = best_colors;

  if (g.size() > edge_cap) {
    out.status = OracleResult::Status::kCapExceeded;
  } else if (out.lower_bound < best_colors) {
    const bool finished = search.improve(best, best_colors, out.lower_bound);
    out.upper_bound = best_colors;
    if (finished) {
      out.lower_bound = best_colors;
    } else {
      out.status = OracleResult::Status::kBudgetExceeded;
    }
    out.coloring = from_vertex_colors(best);
  } else {
    out.coloring = from_vertex_colors(best);
  }
  out.nodes = search.nodes();
  out.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started);
  return out;
}

TightnessAudit tightness_audit(int delta, std::uint64_t budget, std::size_t edge_cap) {
  const Graph g = tightness_graph(delta);
  const Graph h = conflict_graph(g);
  TightnessAudit out;
  out.delta = delta;
  out.edges = g.size();
  out.conflict_complete = h.size() == g.size() * (g.size() - 1) / 2;
  out.passed = out.conflict_complete && g.size() == static_cast<std::size_t>(3 * delta - 2);
  if (g.size() <= edge_cap) {
    out.oracle = exact_chi_s(g, budget, edge_cap);
    out.passed = out.passed && out.oracle->value() == 3 * delta - 2;
  }
  return out;
}

nlohmann::ordered_json to_json(const Graph& g, const StrongColoringReport& report) {
  nlohmann::ordered_json j;
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges()[i];
    nlohmann::ordered_json pair = nullptr;
    if (!report.coloring.pair.empty() && report.coloring.pair[i].first > 0) {
      pair = {report.coloring.pair[i].first, report.coloring.pair[i].second};
    }
    edges.push_back({e.u, e.v, pair, report.coloring.color[i]});
  }
  j["edges"] = std::move(edges);
  j["colors_used"] = report.coloring.colors_used;
  j["bound_claimed"] = report.bound_claimed;
  j["edge_coloring_path"] = strong_path_name(report.path);
  j["delta"] = report.delta;
  auto classes = nlohmann::ordered_json::array();
  for (const ClassStats& s : report.classes) {
    nlohmann::ordered_json item;
    item["component"] = s.component;
    item["edge_color"] = s.edge_color;
    item["matching_size"] = s.matching_size;
    item["quotient_edges"] = s.quotient_edges;
    item["red_edges"] = s.red_edges;
    item["colors"] = s.colors;
    classes.push_back(std::move(item));
  }
  j["classes"] = std::move(classes);
  return j;
}

}  // namespace chordless
