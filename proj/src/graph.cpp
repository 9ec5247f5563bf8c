#include "chordless/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace chordless {

Edge Edge::of(Vertex a, Vertex b) {
  if (a == b) {
    throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    Edge c = Edge::of(e.u, e.v);
    if (c.u < 0 || static_cast<std::size_t>(c.v) >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(c.u) + " " +
                                  std::to_string(c.v));
    }
    edges_.push_back(c);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b) || a == b) return false;
  const auto& adj = neighbors(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::optional<std::size_t> Graph::edge_id(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  Edge key = a < b ? Edge{a, b} : Edge{b, a};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_.at(static_cast<std::size_t>(v));
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != order()) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

std::optional<Vertex> InducedSubgraph::from_host(Vertex host) const {
  auto it = std::lower_bound(to_host.begin(), to_host.end(), host);
  if (it == to_host.end() || *it != host) return std::nullopt;
  return static_cast<Vertex>(it - to_host.begin());
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.to_host.assign(vertices.begin(), vertices.end());
  std::sort(out.to_host.begin(), out.to_host.end());
  out.to_host.erase(std::unique(out.to_host.begin(), out.to_host.end()), out.to_host.end());
  for (Vertex v : out.to_host) {
    if (!g.contains(v)) throw std::out_of_range("unknown vertex " + std::to_string(v));
  }
  std::vector<Vertex> local(g.order(), -1);
  for (std::size_t i = 0; i < out.to_host.size(); ++i) {
    local[static_cast<std::size_t>(out.to_host[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    Vertex a = local[static_cast<std::size_t>(e.u)];
    Vertex b = local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) kept.push_back(Edge{a, b});
  }
  out.graph = Graph(out.to_host.size(), kept);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    labels.reserve(out.to_host.size());
    for (Vertex v : out.to_host) labels.push_back(g.label(v));
    out.graph = out.graph.with_labels(std::move(labels));
  }
  return out;
}

InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> drop(g.order(), 0);
  for (Vertex v : vertices) {
    if (!g.contains(v)) throw std::out_of_range("unknown vertex " + std::to_string(v));
    drop[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
    if (!drop[static_cast<std::size_t>(v)]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph remove_edge(const Graph& g, Edge e) {
  auto id = g.edge_id(e.u, e.v);
  if (!id) {
    throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in graph");
  }
  std::vector<Edge> rest;
  rest.reserve(g.size() - 1);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i != *id) rest.push_back(g.edges()[i]);
  }
  return Graph(g.order(), rest).with_labels(g.labels());
}

Graph add_edge(const Graph& g, Edge e) {
  if (g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " already present");
  }
  std::vector<Edge> all = g.edges();
  all.push_back(Edge::of(e.u, e.v));
  return Graph(g.order(), all).with_labels(g.labels());
}

int connected_components(const Graph& g, std::vector<int>& component) {
  component.assign(g.order(), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; static_cast<std::size_t>(s) < g.order(); ++s) {
    if (component[static_cast<std::size_t>(s)] >= 0) continue;
    component[static_cast<std::size_t>(s)] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (component[static_cast<std::size_t>(w)] < 0) {
          component[static_cast<std::size_t>(w)] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) {
  std::vector<int> component;
  return connected_components(g, component) <= 1;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex a, Vertex b) {
  if (!g.contains(a) || !g.contains(b)) throw std::out_of_range("unknown vertex");
  std::vector<Vertex> parent(g.order(), -1);
  std::vector<char> seen(g.order(), 0);
  std::deque<Vertex> queue{a};
  seen[static_cast<std::size_t>(a)] = 1;
  while (!queue.empty() && !seen[static_cast<std::size_t>(b)]) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }
  if (!seen[static_cast<std::size_t>(b)]) return {};
  std::vector<Vertex> path;
  for (Vertex v = b; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace chordless
