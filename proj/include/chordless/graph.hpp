#ifndef CHORDLESS_GRAPH_HPP
#define CHORDLESS_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chordless {

using Vertex = int;

inline std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

/// Unordered vertex pair in canonical form (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Canonicalizes {a, b}; throws std::invalid_argument when a == b.
  static Edge of(Vertex a, Vertex b);

  bool has_endpoint(Vertex x) const { return x == u || x == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Adjacency lists and the edge list are kept
/// sorted, so edge ids (positions in edges()) are canonical.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Builds the simple graph on n vertices from a list of pairs.
  ///
  /// Duplicate pairs (in either orientation) collapse to one edge. Self-loops
  /// and out-of-range endpoints throw std::invalid_argument.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < order(); }
  bool has_edge(Vertex a, Vertex b) const;
  /// Position of {a, b} in edges(), if present.
  std::optional<std::size_t> edge_id(Vertex a, Vertex b) const;

  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of v, or its decimal id when the graph carries no labels.
  std::string label(Vertex v) const;
  /// Returns a copy carrying the given labels (one per vertex).
  Graph with_labels(std::vector<std::string> labels) const;

  /// Structural equality: same order and edge set. Labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

/// A subgraph together with the host ids of its vertices.
struct InducedSubgraph {
  Graph graph;
  /// to_host[i] is the host id of subgraph vertex i (sorted ascending).
  std::vector<Vertex> to_host;

  /// Subgraph id of a host vertex, if it was kept.
  std::optional<Vertex> from_host(Vertex host) const;
};

int max_degree(const Graph& g);

/// G[X]. Vertex ids of the result follow ascending host id order.
/// Throws std::out_of_range on unknown vertices.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// G - X.
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> vertices);

/// G - e, on the same vertex set. Throws std::invalid_argument if e is absent.
Graph remove_edge(const Graph& g, Edge e);

/// G + e. Throws std::invalid_argument if e is already present.
Graph add_edge(const Graph& g, Edge e);

/// Connected component index per vertex; returns the number of components.
int connected_components(const Graph& g, std::vector<int>& component);

bool is_connected(const Graph& g);

/// Shortest path from a to b by BFS (ascending neighbor order); empty if none.
std::vector<Vertex> shortest_path(const Graph& g, Vertex a, Vertex b);

}  // namespace chordless

#endif  // CHORDLESS_GRAPH_HPP
