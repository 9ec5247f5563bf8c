#include "chordless/degeneracy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chordless {

DegeneracyResult degeneracy_ordering(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("degeneracy_ordering: k must be nonnegative");
  const std::size_t n = g.order();
  std::vector<int> degree(n);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; ix(v) < n; ++v) {
    degree[ix(v)] = g.degree(v);
    queue.insert({degree[ix(v)], v});
  }
  std::vector<char> removed(n, 0);
  DegeneracyOrdering ord{{}, k};
  ord.order.reserve(n);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    if (d > k) {
      StuckCore core{{}, k};
      for (const auto& entry : queue) core.vertices.push_back(entry.second);
      std::sort(core.vertices.begin(), core.vertices.end());
      return core;
    }
    queue.erase(queue.begin());
    removed[ix(v)] = 1;
    ord.order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[ix(w)]) continue;
      queue.erase({degree[ix(w)], w});
      queue.insert({--degree[ix(w)], w});
    }
  }
  return ord;
}

VertexColoring greedy_color(const Graph& g, const DegeneracyOrdering& ord) {
  const std::size_t n = g.order();
  if (ord.order.size() != n) throw std::invalid_argument("greedy_color: ordering has wrong length");
  std::vector<char> seen(n, 0);
  for (Vertex v : ord.order) {
    if (!g.contains(v) || seen[ix(v)]) throw std::invalid_argument("greedy_color: ordering is not a permutation");
    seen[ix(v)] = 1;
  }
  VertexColoring c{std::vector<int>(n, -1), 0};
  std::vector<char> taken;
  for (auto it = ord.order.rbegin(); it != ord.order.rend(); ++it) {
    const Vertex v = *it;
    taken.assign(static_cast<std::size_t>(g.degree(v)) + 1, 0);
    for (Vertex w : g.neighbors(v)) {
      const int cw = c.color[ix(w)];
      if (cw >= 0 && cw < static_cast<int>(taken.size())) taken[static_cast<std::size_t>(cw)] = 1;
    }
    int pick = 0;
    while (taken[static_cast<std::size_t>(pick)]) ++pick;
    c.color[ix(v)] = pick;
    c.colors = std::max(c.colors, pick + 1);
  }
  return c;
}

bool is_proper(const Graph& g, const VertexColoring& c) {
  if (c.color.size() != g.order()) return false;
  for (const Edge& e : g.edges()) {
    if (c.color[ix(e.u)] == c.color[ix(e.v)]) return false;
  }
  return true;
}

std::vector<std::pair<Vertex, int>> min_degree_witness(const Graph& g) {
  std::vector<std::pair<Vertex, int>> out;
  for (Vertex v = 0; ix(v) < g.order(); ++v) {
    if (g.degree(v) <= 2) out.emplace_back(v, g.degree(v));
  }
  return out;
}

}  // namespace chordless
