#ifndef CHORDLESS_GENERATORS_HPP
#define CHORDLESS_GENERATORS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "chordless/graph.hpp"

namespace chordless {

enum class Family {
  kPath,             // n vertices
  kCycle,            // n vertices, n >= 3
  kStar,             // n leaves around vertex 0
  kComplete,         // n vertices
  kWheel,            // n vertices: hub 0 and a rim cycle on 1..n-1, n >= 4
  kTightness,        // K_{2,delta} plus delta-2 pendants on one middle vertex
  kFullSubdivision,  // every edge of `base` replaced by a path of length two
  kRandomTree,       // uniform labelled tree on n vertices (Pruefer decoding)
  kRandomGraph,      // G(n, p)
  kEarTree,          // random tree on n vertices plus `ears` subdivided ears
};

std::string_view family_name(Family f);
/// Accepts the names produced by family_name (e.g. "full-subdivision").
std::optional<Family> parse_family(std::string_view name);

struct GeneratorSpec {
  Family family = Family::kPath;
  int n = 0;
  int delta = 0;
  double p = 0.5;
  int ears = 0;
  std::uint64_t seed = 0;
  std::shared_ptr<const Graph> base;
};

/// Builds the graph described by spec; throws std::invalid_argument on
/// parameters outside the family's domain. Deterministic in spec.seed.
Graph generate(const GeneratorSpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);
Graph wheel_graph(int n);
/// Vertices: a = 0, b = 1, middles 2..delta+1 with c = delta+1, then the
/// delta-2 pendants of c.
Graph tightness_graph(int delta);
/// Subdivision vertex of base edge i gets id base.order() + i.
Graph full_subdivision(const Graph& base);
Graph random_tree(int n, std::mt19937_64& rng);
Graph random_graph(int n, double p, std::mt19937_64& rng);
Graph ear_tree(int n, int ears, std::mt19937_64& rng);

/// Uniform integer in [0, bound), independent of the standard library's
/// distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Uniform double in [0, 1) from the top 53 bits.
double uniform_unit(std::mt19937_64& rng);

}  // namespace chordless

#endif  // CHORDLESS_GENERATORS_HPP
