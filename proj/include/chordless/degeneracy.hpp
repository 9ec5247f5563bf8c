#ifndef CHORDLESS_DEGENERACY_HPP
#define CHORDLESS_DEGENERACY_HPP

#include <utility>
#include <variant>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

/// Peeling order: each vertex has at most k neighbours later in the order.
struct DegeneracyOrdering {
  std::vector<Vertex> order;
  int k = 0;
};

/// Vertices left when every remaining vertex has degree above k.
struct StuckCore {
  std::vector<Vertex> vertices;  // sorted
  int k = 0;
};

using DegeneracyResult = std::variant<DegeneracyOrdering, StuckCore>;

/// Repeatedly removes a vertex of minimum remaining degree (lowest id on
/// ties). Fails with the stuck core as soon as that minimum exceeds k.
DegeneracyResult degeneracy_ordering(const Graph& g, int k);

struct VertexColoring {
  std::vector<int> color;  // 0-based
  int colors = 0;
};

/// Colours vertices in reverse peeling order, each with the smallest colour
/// not used by an already coloured neighbour. Throws std::invalid_argument if
/// ord.order is not a permutation of V(g).
VertexColoring greedy_color(const Graph& g, const DegeneracyOrdering& ord);

bool is_proper(const Graph& g, const VertexColoring& c);

/// (vertex, degree) for every vertex of degree at most 2, ascending by id.
std::vector<std::pair<Vertex, int>> min_degree_witness(const Graph& g);

}  // namespace chordless

#endif  // CHORDLESS_DEGENERACY_HPP
