#ifndef CHORDLESS_CONTRACTION_HPP
#define CHORDLESS_CONTRACTION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "chordless/graph.hpp"

namespace chordless {

struct ProperEdgeColoring;

/// Pairwise vertex-disjoint edges of a host graph, kept in canonical order.
class Matching {
 public:
  Matching() = default;
  /// Throws std::invalid_argument unless every edge is in host and no two
  /// edges share an endpoint.
  Matching(const Graph& host, std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(Edge e) const;
  /// Endpoints of all matched edges, sorted.
  std::vector<Vertex> vertices() const;

  /// Re-checks the matching invariant against a (possibly different) host.
  void validate(const Graph& host) const;

 private:
  std::vector<Edge> edges_;
};

/// Assignment (p, q, r, s) certifying that the quotient edge between v_pq and
/// v_rs is red: pr is a host edge, d_{G[M]}(p) = 2 and d_{G[M]}(q) > 2.
struct RedWitness {
  Vertex p = 0;
  Vertex q = 0;
  Vertex r = 0;
  Vertex s = 0;

  friend bool operator==(const RedWitness&, const RedWitness&) = default;
};

/// G_M: each matched edge contracted to one vertex, parallel edges merged.
///
/// Quotient vertex i stands for pairs[i]; pairs follow the canonical order of
/// the matching. Every quotient edge carries its red witness, or nullopt when
/// blue.
struct ContractedGraph {
  Graph quotient;
  std::vector<Edge> pairs;
  std::vector<std::optional<RedWitness>> witness;  // by quotient edge id
  /// G[M] in host ids via its remap table.
  InducedSubgraph matched;

  bool is_red(std::size_t quotient_edge) const { return witness.at(quotient_edge).has_value(); }
  std::size_t red_count() const;
  /// d_{G[M]} of a matched host vertex.
  int matched_degree(Vertex host) const;
  std::optional<Vertex> vertex_of(Edge pair) const;

  friend bool operator==(const ContractedGraph& a, const ContractedGraph& b) {
    return a.quotient == b.quotient && a.pairs == b.pairs && a.witness == b.witness &&
           a.matched.graph == b.matched.graph && a.matched.to_host == b.matched.to_host;
  }
};

/// G[M].
InducedSubgraph induced_by_matching(const Graph& g, const Matching& m);

ContractedGraph contract(const Graph& g, const Matching& m);

/// The subgraph of cg.quotient induced by `subset`, as a contraction in its
/// own right: degrees are taken in G[M'] for M' = {e : v_e in subset}, so the
/// result equals contract(g, M'). Throws std::out_of_range on unknown ids.
ContractedGraph contracted_induced(const ContractedGraph& cg, std::span<const Vertex> subset);

/// Host path for a path of quotient vertices: it starts in the first pair,
/// ends in the last, stays inside the listed pairs and uses only matched edges
/// of those pairs and host edges between consecutive pairs. Shortest such
/// path, ties broken by ascending host ids. Throws std::invalid_argument if
/// qpath is not a path of the quotient.
std::vector<Vertex> expand_path(const ContractedGraph& cg, std::span<const Vertex> qpath);

/// Colour classes of a proper edge colouring, in ascending colour order.
/// Throws std::invalid_argument if f is not proper for g.
std::vector<Matching> matchings_from_edge_coloring(const Graph& g, const ProperEdgeColoring& f);

/// {"pairs": [[a, b], ...], "edges": [{"u", "v", "color", "witness"}...]}
nlohmann::ordered_json to_json(const ContractedGraph& cg);

}  // namespace chordless

#endif  // CHORDLESS_CONTRACTION_HPP
