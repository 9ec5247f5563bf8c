#ifndef CHORDLESS_DETAIL_DISJOINT_PATHS_HPP
#define CHORDLESS_DETAIL_DISJOINT_PATHS_HPP

#include <span>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless::detail {

/// Up to `want` paths from `source`, internally vertex-disjoint, each ending
/// at a vertex of `targets`. A target listed k times may end k paths. Found
/// with shortest augmenting paths on the vertex-split network, so the result
/// is deterministic. Each path starts with `source`.
std::vector<std::vector<Vertex>> disjoint_paths(const Graph& g, Vertex source, std::span<const Vertex> targets,
                                                int want);

}  // namespace chordless::detail

#endif  // CHORDLESS_DETAIL_DISJOINT_PATHS_HPP
