#ifndef CHORDLESS_CORPUS_HPP
#define CHORDLESS_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chordless/contraction.hpp"
#include "chordless/graph.hpp"

namespace chordless {

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct CorpusConfig {
  std::size_t count = 200;
  std::uint64_t seed = 7;
  int min_base = 4;
  int max_base = 30;
  /// Only keep graphs of maximum degree at least 3.
  bool require_delta3 = false;
};

/// Seeded chordless corpus. It opens with tightness graphs for delta 3..8
/// (and 2 unless require_delta3), then alternates full subdivisions of random
/// graphs, random trees with subdivided ears (kept only when chordless) and,
/// without require_delta3, cycles and paths.
std::vector<NamedGraph> chordless_corpus(const CorpusConfig& config);

/// Random matching: a greedy maximal matching over a shuffled edge order,
/// then each edge kept with probability 2/3. May be empty.
Matching random_matching(const Graph& g, std::mt19937_64& rng);

/// Colour classes of chromatic_index_coloring(g).
std::vector<Matching> coloring_matchings(const Graph& g);

/// Adds one chord to a cycle of g: picks an edge on a cycle of length >= 4,
/// finds a cycle through it and joins two of its vertices that are
/// non-adjacent in g. nullopt when g has no such cycle.
std::optional<Graph> plant_chord(const Graph& g, std::mt19937_64& rng);

}  // namespace chordless

#endif  // CHORDLESS_CORPUS_HPP
