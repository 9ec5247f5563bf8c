#include "chordless/edge_coloring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace chordless {
namespace {

class ExactSearch {
 public:
  ExactSearch(const Graph& g, int k, std::uint64_t budget)
      : g_(g), k_(k), words_(static_cast<std::size_t>(k + 63) / 64), budget_(budget),
        color_(g.size(), 0), used_(g.order() * words_, 0), uncolored_at_(g.order(), 0) {
    for (Vertex v = 0; ix(v) < g.order(); ++v) uncolored_at_[ix(v)] = g.degree(v);
  }

  EdgeColorSearch run() {
    EdgeColorSearch out;
    const int delta = max_degree(g_);
    if (g_.size() == 0) {
      out.status = SearchStatus::kFound;
      out.coloring = ProperEdgeColoring{{}, 0};
      return out;
    }
    if (delta > k_) {
      out.status = SearchStatus::kInfeasible;
      return out;
    }
    Vertex anchor = 0;
    while (g_.degree(anchor) != delta) ++anchor;
    int next = 1;
    for (Vertex w : g_.neighbors(anchor)) assign(*g_.edge_id(anchor, w), next++);
    top_ = delta;

    const Outcome result = descend();
    out.nodes = nodes_;
    if (result == Outcome::kFound) {
      out.status = SearchStatus::kFound;
      ProperEdgeColoring f{color_, 0};
      for (int c : f.color) f.colors = std::max(f.colors, c);
      out.coloring = std::move(f);
    } else {
      out.status = result == Outcome::kBudget ? SearchStatus::kBudgetExceeded : SearchStatus::kInfeasible;
    }
    return out;
  }

 private:
  enum class Outcome { kFound, kExhausted, kBudget };

  bool is_used(Vertex v, int c) const {
    const auto bit = static_cast<std::size_t>(c - 1);
    return (used_[ix(v) * words_ + bit / 64] >> (bit % 64)) & 1u;
  }
  void flip(Vertex v, int c) {
    const auto bit = static_cast<std::size_t>(c - 1);
    used_[ix(v) * words_ + bit / 64] ^= std::uint64_t{1} << (bit % 64);
  }
  int free_count(const Edge& e) const {
    int taken = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      taken += std::popcount(used_[ix(e.u) * words_ + w] | used_[ix(e.v) * words_ + w]);
    }
    return k_ - taken;
  }
  void assign(std::size_t id, int c) {
    const Edge& e = g_.edges()[id];
    color_[id] = c;
    flip(e.u, c);
    flip(e.v, c);
    --uncolored_at_[ix(e.u)];
    --uncolored_at_[ix(e.v)];
  }
  void unassign(std::size_t id) {
    const Edge& e = g_.edges()[id];
    flip(e.u, color_[id]);
    flip(e.v, color_[id]);
    color_[id] = 0;
    ++uncolored_at_[ix(e.u)];
    ++uncolored_at_[ix(e.v)];
  }

  Outcome descend() {
    if (nodes_ >= budget_) return Outcome::kBudget;
    ++nodes_;

    std::size_t pick = g_.size();
    int best_free = 0;
    int best_links = -1;
    for (std::size_t id = 0; id < g_.size(); ++id) {
      if (color_[id] != 0) continue;
      const Edge& e = g_.edges()[id];
      const int free = free_count(e);
      if (free == 0) return Outcome::kExhausted;
      const int links = uncolored_at_[ix(e.u)] + uncolored_at_[ix(e.v)];
      if (pick == g_.size() || free < best_free || (free == best_free && links > best_links)) {
        pick = id;
        best_free = free;
        best_links = links;
      }
    }
    if (pick == g_.size()) return Outcome::kFound;

    const Edge& e = g_.edges()[pick];
    const int limit = std::min(top_ + 1, k_);
    for (int c = 1; c <= limit; ++c) {
      if (is_used(e.u, c) || is_used(e.v, c)) continue;
      const int saved_top = top_;
      top_ = std::max(top_, c);
      assign(pick, c);
      const Outcome r = descend();
      if (r != Outcome::kExhausted) return r;
      unassign(pick);
      top_ = saved_top;
    }
    return Outcome::kExhausted;
  }

  const Graph& g_;
  const int k_;
  const std::size_t words_;
  const std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int top_ = 0;
  std::vector<int> color_;
  std::vector<std::uint64_t> used_;
  std::vector<int> uncolored_at_;
};

// Misra-Gries state: colour per edge and, per vertex, the edge holding each
// colour (or -1).
class FanRecoloring {
 public:
  explicit FanRecoloring(const Graph& g)
      : g_(g), palette_(max_degree(g) + 1), color_(g.size(), 0),
        at_(g.order() * static_cast<std::size_t>(palette_ + 1), -1) {}

  ProperEdgeColoring run() {
    for (std::size_t id = 0; id < g_.size(); ++id) color_edge(id);
    ProperEdgeColoring f{color_, 0};
    for (int c : f.color) f.colors = std::max(f.colors, c);
    return f;
  }

 private:
  int& slot(Vertex v, int c) { return at_[ix(v) * static_cast<std::size_t>(palette_ + 1) + static_cast<std::size_t>(c)]; }
  bool is_free(Vertex v, int c) { return slot(v, c) < 0; }
  int first_free(Vertex v) {
    for (int c = 1; c <= palette_; ++c)
      if (is_free(v, c)) return c;
    throw std::logic_error("no free colour at vertex " + std::to_string(v));
  }
  std::size_t id_of(Vertex a, Vertex b) const { return *g_.edge_id(a, b); }

  void set(std::size_t id, int c) {
    const Edge& e = g_.edges()[id];
    if (color_[id] != 0) {
      slot(e.u, color_[id]) = -1;
      slot(e.v, color_[id]) = -1;
    }
    color_[id] = c;
    if (c != 0) {
      slot(e.u, c) = static_cast<int>(id);
      slot(e.v, c) = static_cast<int>(id);
    }
  }

  void color_edge(std::size_t id) {
    const Vertex u = g_.edges()[id].u;
    std::vector<Vertex> fan{g_.edges()[id].v};
    std::vector<char> in_fan(g_.order(), 0);
    in_fan[ix(fan.front())] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (Vertex w : g_.neighbors(u)) {
        if (in_fan[ix(w)]) continue;
        const int cw = color_[id_of(u, w)];
        if (cw != 0 && is_free(fan.back(), cw)) {
          fan.push_back(w);
          in_fan[ix(w)] = 1;
          grew = true;
          break;
        }
      }
    }

    const int c = first_free(u);
    const int d = first_free(fan.back());

    // Invert the cd-path that starts at u (its first edge has colour d).
    std::vector<std::size_t> path;
    for (Vertex cur = u, col = d; slot(cur, col) >= 0; col = (col == c ? d : c)) {
      const auto eid = static_cast<std::size_t>(slot(cur, col));
      path.push_back(eid);
      cur = g_.edges()[eid].other(cur);
    }
    std::vector<int> flipped;
    for (std::size_t eid : path) flipped.push_back(color_[eid] == c ? d : c);
    for (std::size_t eid : path) set(eid, 0);
    for (std::size_t i = 0; i < path.size(); ++i) set(path[i], flipped[i]);

    std::size_t w = 0;
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0 && !is_free(fan[i - 1], color_[id_of(u, fan[i])])) break;
      if (is_free(fan[i], d)) {
        w = i;
        break;
      }
    }
    // Rotate the prefix fan[0..w] and close it with d.
    std::vector<int> shifted;
    for (std::size_t j = 0; j < w; ++j) shifted.push_back(color_[id_of(u, fan[j + 1])]);
    for (std::size_t j = 1; j <= w; ++j) set(id_of(u, fan[j]), 0);
    for (std::size_t j = 0; j < w; ++j) set(id_of(u, fan[j]), shifted[j]);
    set(id_of(u, fan[w]), d);
  }

  const Graph& g_;
  const int palette_;
  std::vector<int> color_;
  std::vector<int> at_;
};

}  // namespace

std::optional<std::string> edge_coloring_defect(const Graph& g, const ProperEdgeColoring& f) {
  if (f.color.size() != g.size()) {
    return "colouring covers " + std::to_string(f.color.size()) + " edges, graph has " + std::to_string(g.size());
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (f.color[i] < 1 || f.color[i] > f.colors) {
      return "edge " + std::to_string(i) + " has colour " + std::to_string(f.color[i]) + " outside 1.." +
             std::to_string(f.colors);
    }
  }
  for (Vertex v = 0; ix(v) < g.order(); ++v) {
    std::vector<int> seen;
    for (Vertex w : g.neighbors(v)) seen.push_back(f.color[*g.edge_id(v, w)]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      return "two edges at vertex " + std::to_string(v) + " share a colour";
    }
  }
  return std::nullopt;
}

EdgeColorSearch edge_color_exact(const Graph& g, int k, std::uint64_t budget) {
  if (k < 1) throw std::invalid_argument("edge_color_exact: k must be positive");
  return ExactSearch(g, k, budget).run();
}

ProperEdgeColoring edge_color_vizing(const Graph& g) { return FanRecoloring(g).run(); }

std::string_view path_name(EdgeColoringPath p) {
  switch (p) {
    case EdgeColoringPath::kExact:
      return "exact";
    case EdgeColoringPath::kVizingFallback:
      return "vizing-fallback";
    case EdgeColoringPath::kVizingClass2:
      return "vizing-class2";
  }
  return "unknown";
}

ChromaticIndexResult chromatic_index_coloring(const Graph& g, std::uint64_t budget) {
  ChromaticIndexResult out;
  const int delta = max_degree(g);
  if (delta == 0) {
    out.coloring = ProperEdgeColoring{std::vector<int>(g.size(), 0), 0};
    return out;
  }
  EdgeColorSearch exact = edge_color_exact(g, delta, budget);
  out.nodes = exact.nodes;
  if (exact.status == SearchStatus::kFound) {
    out.coloring = std::move(*exact.coloring);
    out.path = EdgeColoringPath::kExact;
    return out;
  }
  out.coloring = edge_color_vizing(g);
  out.path = exact.status == SearchStatus::kBudgetExceeded ? EdgeColoringPath::kVizingFallback
                                                           : EdgeColoringPath::kVizingClass2;
  return out;
}

}  // namespace chordless
