#ifndef CHORDLESS_STRONG_COLORING_HPP
#define CHORDLESS_STRONG_COLORING_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chordless/edge_coloring.hpp"
#include "chordless/graph.hpp"
#include "chordless/structure.hpp"

namespace chordless {

/// Colour per edge id. `pair` holds the (edge colour, quotient colour) form
/// when the colouring came from the contraction pipeline, empty otherwise.
struct StrongEdgeColoring {
  std::vector<int> color;                  // 1-based
  std::vector<std::pair<int, int>> pair;   // (i, j), i >= 1, j in 1..3
  int colors_used = 0;                     // distinct colours
};

/// 3 (i - 1) + j.
inline int flatten_pair(int i, int j) { return 3 * (i - 1) + j; }
inline std::pair<int, int> unflatten(int flat) { return {(flat - 1) / 3 + 1, (flat - 1) % 3 + 1}; }

/// Vertices are the host's edge ids; two are adjacent when the edges share
/// an endpoint or a host edge joins them.
Graph conflict_graph(const Graph& g);

class UncoloredEdge : public std::invalid_argument {
 public:
  explicit UncoloredEdge(std::size_t edge)
      : std::invalid_argument("edge " + std::to_string(edge) + " is uncoloured"), edge_(edge) {}
  std::size_t edge() const { return edge_; }

 private:
  std::size_t edge_;
};

struct Violation {
  enum class Reason { kSharedEndpoint, kLinkingEdge };
  std::size_t first = 0;   // edge ids, first < second
  std::size_t second = 0;
  Reason reason = Reason::kSharedEndpoint;
  /// The joining host edge when reason is kLinkingEdge.
  std::optional<Edge> link;
};

/// nullopt when every colour class is an induced matching. Throws
/// UncoloredEdge when a colour is missing or non-positive.
std::optional<Violation> verify_strong(const Graph& g, const StrongEdgeColoring& c);

class NotChordless : public std::invalid_argument {
 public:
  explicit NotChordless(ChordWitness w)
      : std::invalid_argument("graph is not chordless"), witness_(std::move(w)) {}
  const ChordWitness& witness() const { return witness_; }

 private:
  ChordWitness witness_;
};

enum class StrongPath { kPathsCycles, kExact, kVizingFallback, kVizingClass2 };

std::string_view strong_path_name(StrongPath p);

struct ClassStats {
  int component = 0;
  int edge_color = 0;  // i
  std::size_t matching_size = 0;
  std::size_t quotient_edges = 0;
  std::size_t red_edges = 0;
  int colors = 0;  // colours used on this quotient
};

struct StrongColoringReport {
  StrongEdgeColoring coloring;
  int delta = 0;
  /// Worst route over components: paths-cycles < exact < fallbacks.
  StrongPath path = StrongPath::kPathsCycles;
  /// 5 when delta <= 2; 3 * delta when every component's edge colouring used
  /// delta colours; otherwise 3 * (delta + 1).
  int bound_claimed = 0;
  std::vector<ClassStats> classes;
};

/// The contraction pipeline, one connected component at a time with colours
/// shared across components. Components of maximum degree at most 2 go to
/// strong_color_paths_cycles. Throws NotChordless (with the chord witness)
/// or std::invalid_argument for an edgeless graph.
StrongColoringReport strong_color_chordless(const Graph& g, std::uint64_t budget = kDefaultSearchNodes);

/// Paths and cycles: period-3 pattern on paths and on cycles whose length is
/// a multiple of 3, four colours on other cycles except C5, which takes five.
/// Throws std::invalid_argument when max degree exceeds 2.
StrongEdgeColoring strong_color_paths_cycles(const Graph& g);

inline constexpr std::size_t kDefaultOracleEdgeCap = 30;

struct OracleResult {
  enum class Status { kExact, kBudgetExceeded, kCapExceeded };
  Status status = Status::kExact;
  int lower_bound = 0;
  int upper_bound = 0;
  /// Best colouring found (optimal when status is kExact).
  std::optional<StrongEdgeColoring> coloring;
  std::uint64_t nodes = 0;
  std::chrono::microseconds elapsed{0};

  std::optional<int> value() const {
    return status == Status::kExact ? std::optional<int>(upper_bound) : std::nullopt;
  }
};

/// Exact strong chromatic index: branch and bound DSATUR colouring of the
/// conflict graph, greedy clique lower bound, DSATUR upper bound. Graphs with
/// more than edge_cap edges are refused with bounds only.
OracleResult exact_chi_s(const Graph& g, std::uint64_t budget = kDefaultSearchNodes,
                         std::size_t edge_cap = kDefaultOracleEdgeCap);

struct TightnessAudit {
  int delta = 0;
  std::size_t edges = 0;
  bool conflict_complete = false;
  std::optional<OracleResult> oracle;  // when the graph fits under the cap
  bool passed = false;
};

TightnessAudit tightness_audit(int delta, std::uint64_t budget = kDefaultSearchNodes,
                               std::size_t edge_cap = kDefaultOracleEdgeCap);

/// Count of distinct positive colours.
int distinct_colors(const std::vector<int>& color);

/// {"edges": [[u, v, [i, j] | null, flat], ...], "colors_used", "bound_claimed", "edge_coloring_path", ...}
nlohmann::ordered_json to_json(const Graph& g, const StrongColoringReport& report);

}  // namespace chordless

#endif  // CHORDLESS_STRONG_COLORING_HPP
