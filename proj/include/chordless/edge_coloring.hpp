#ifndef CHORDLESS_EDGE_COLORING_HPP
#define CHORDLESS_EDGE_COLORING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

inline constexpr std::uint64_t kDefaultSearchNodes = 10'000'000;

/// Colour per edge id, colours 1..colors.
struct ProperEdgeColoring {
  std::vector<int> color;
  int colors = 0;
};

/// Empty optional when f is a proper colouring of every edge of g; otherwise
/// a description of the first defect.
std::optional<std::string> edge_coloring_defect(const Graph& g, const ProperEdgeColoring& f);

enum class SearchStatus { kFound, kInfeasible, kBudgetExceeded };

struct EdgeColorSearch {
  SearchStatus status = SearchStatus::kInfeasible;
  std::optional<ProperEdgeColoring> coloring;
  std::uint64_t nodes = 0;
};

/// Backtracking k-edge-colouring.
///
/// The next edge is always the uncoloured edge with the fewest free colours
/// (then most uncoloured neighbouring edges, then lowest id); colours are
/// tried in ascending order. The edges at the lowest-id vertex of maximum
/// degree are precoloured 1, 2, ... and an unused colour is only tried once,
/// which removes colour-permutation symmetry without losing solutions.
EdgeColorSearch edge_color_exact(const Graph& g, int k, std::uint64_t budget = kDefaultSearchNodes);

/// Misra-Gries fan recolouring; at most max_degree + 1 colours.
ProperEdgeColoring edge_color_vizing(const Graph& g);

enum class EdgeColoringPath {
  kExact,           // exact search at k = max degree succeeded
  kVizingFallback,  // exact search ran out of budget
  kVizingClass2,    // exact search proved k = max degree infeasible
};

std::string_view path_name(EdgeColoringPath p);

struct ChromaticIndexResult {
  ProperEdgeColoring coloring;
  EdgeColoringPath path = EdgeColoringPath::kExact;
  std::uint64_t nodes = 0;
};

/// Exact search at k = max degree, falling back to Vizing when it fails. The
/// path records which route produced the colouring.
ChromaticIndexResult chromatic_index_coloring(const Graph& g, std::uint64_t budget = kDefaultSearchNodes);

}  // namespace chordless

#endif  // CHORDLESS_EDGE_COLORING_HPP
