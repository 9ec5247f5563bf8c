#ifndef CHORDLESS_STRUCTURE_HPP
#define CHORDLESS_STRUCTURE_HPP

#include <optional>
#include <span>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

class Matching;

struct Block {
  std::vector<Edge> edges;       // sorted
  std::vector<Vertex> vertices;  // sorted
};

/// Blocks (maximal 2-connected subgraphs, bridges included) of a graph.
///
/// The block-cut tree is stored as two adjacency tables: for each block the
/// cutvertices it contains, and for each cutvertex the blocks containing it.
struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<Vertex> cutvertices;                   // sorted
  std::vector<std::vector<Vertex>> block_cutvertices;  // per block, sorted
  std::vector<std::vector<int>> cutvertex_blocks;    // parallel to cutvertices
  /// Block containing each edge, indexed by the graph's edge id.
  std::vector<int> edge_block;
  /// Blocks containing each vertex (empty for isolated vertices).
  std::vector<std::vector<int>> vertex_blocks;

  bool is_cutvertex(Vertex v) const { return vertex_blocks.at(ix(v)).size() >= 2; }
};

BlockDecomposition blocks(const Graph& g);

/// K2 counts as 2-connected; K1 and the empty graph do not.
bool is_two_connected(const Graph& g);

struct LeafblockReport {
  int block = 0;
  Vertex cutvertex = 0;
};

/// Blocks containing exactly one cutvertex, in block order.
std::vector<LeafblockReport> leafblocks(const BlockDecomposition& d);

struct CommonCycleResult {
  bool on_common_cycle = false;
  /// Set when false and the vertices are non-adjacent but connected: a vertex
  /// whose removal separates them.
  std::optional<Vertex> separator;
  /// Set when false because the vertices lie in different components.
  bool disconnected = false;
};

/// Whether some cycle of g passes through both a and b. Answered from the
/// block decomposition. Throws std::invalid_argument when a == b.
CommonCycleResult in_common_cycle(const Graph& g, Vertex a, Vertex b);
CommonCycleResult in_common_cycle(const Graph& g, const BlockDecomposition& d, Vertex a, Vertex b);

/// A cycle of g through both a and b (vertex sequence, first vertex a, not
/// repeated at the end), or nullopt if none exists.
std::optional<std::vector<Vertex>> cycle_through(const Graph& g, Vertex a, Vertex b);

/// True iff g - e has a cycle through both endpoints of e.
/// Throws std::invalid_argument if e is not an edge of g.
bool is_chord_edge(const Graph& g, Edge e);

struct ChordWitness {
  Edge chord;
  /// Cycle of g - chord through both endpoints of the chord.
  std::vector<Vertex> cycle;
};

struct ChordlessReport {
  bool chordless = true;
  std::optional<ChordWitness> witness;
};

/// Scans edges in canonical order; the witness is the first chord found.
ChordlessReport is_chordless(const Graph& g);

bool is_minimally_2connected(const Graph& g);

struct MengerPathPair {
  Vertex shared = 0;
  std::vector<Vertex> to_y;  // starts at shared
  std::vector<Vertex> to_z;  // starts at shared
};

/// Paths x..y and x..z meeting only in x. Requires g 2-connected and y != z;
/// throws std::invalid_argument otherwise.
MengerPathPair menger_pair(const Graph& g, Vertex x, Vertex y, Vertex z);

struct PropertyPReport {
  enum class Violation { kNone, kQuotientNotTwoConnected, kChord };

  bool holds = true;
  Violation violation = Violation::kNone;
  std::optional<ChordWitness> chord;
};

/// Whether (g, m) satisfies: the contraction G_M is 2-connected and no edge
/// of E(g) \ m between matched vertices is a chord of a cycle of g.
PropertyPReport check_property_P(const Graph& g, const Matching& m);

/// G - X where X collects each reported leafblock minus its cutvertex.
/// Requires g connected and not 2-connected; throws std::invalid_argument if
/// a report does not name a leafblock of g.
InducedSubgraph remove_leafblock_interiors(const Graph& g, std::span<const LeafblockReport> reports);

}  // namespace chordless

#endif  // CHORDLESS_STRUCTURE_HPP
