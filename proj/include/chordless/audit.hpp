#ifndef CHORDLESS_AUDIT_HPP
#define CHORDLESS_AUDIT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chordless/contraction.hpp"
#include "chordless/edge_coloring.hpp"
#include "chordless/graph.hpp"
#include "chordless/structure.hpp"

namespace chordless {

/// Pass/fail tally for one named property. Failures keep a self-contained
/// witness (graph, matching, offending object) for the first few cases.
struct CheckResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<nlohmann::ordered_json> witnesses;

  bool passed() const { return failures == 0; }
};

class AuditLog {
 public:
  static constexpr std::size_t kMaxWitnesses = 3;

  CheckResult& check(std::string_view name);
  /// Counts one instance of `name`; on failure stores `witness` (if room).
  void record(std::string_view name, bool ok, const nlohmann::ordered_json& witness);
  template <typename MakeWitness>
  void expect(std::string_view name, bool ok, MakeWitness&& make) {
    if (ok) {
      ++check(name).instances;
    } else {
      record(name, false, make());
    }
  }

  const std::map<std::string, CheckResult, std::less<>>& checks() const { return checks_; }
  bool passed() const;
  std::size_t failures() const;
  nlohmann::ordered_json to_json() const;

 private:
  std::map<std::string, CheckResult, std::less<>> checks_;
};

struct SamplingConfig {
  std::size_t red_samples = 8;
  std::size_t induced_samples = 4;
  std::size_t common_cycle_pairs = 12;
  std::size_t edge_removals = 6;
};

/// Blocks, leafblocks, local 2-connectivity, chordless recognition and the
/// leafblock/cutvertex propositions on g and on its blocks.
void audit_structure(const Graph& g, std::mt19937_64& rng, AuditLog& log, const SamplingConfig& sampling = {});

/// Quotient construction and classification, the red-edge lemmas, the blue
/// edge lemmas on every 2-connected block of the quotient that satisfies
/// property P, 2-degeneracy and the low-degree theorem on random induced
/// subgraphs, contracted_induced against fresh contraction, and expand_path.
void audit_contraction(const Graph& g, const Matching& m, std::mt19937_64& rng, AuditLog& log,
                       const SamplingConfig& sampling = {});

struct ColoringAuditConfig {
  std::uint64_t budget = kDefaultSearchNodes;
  /// Oracle cross-checks run on graphs with at most this many edges.
  std::size_t oracle_edges = 12;
  /// Exact Delta-edge-colouring is required on graphs with at most this many edges.
  std::size_t exact_edges = 60;
};

/// Pipeline soundness and bound, verify_strong against the conflict graph,
/// exact edge colouring at Delta, and oracle consistency.
void audit_coloring(const Graph& g, std::mt19937_64& rng, AuditLog& log, const ColoringAuditConfig& config = {});

/// Plants a chord into g and expects recognition to reject the mutant with a
/// verifiable witness. Returns false when g has no cycle to mutate.
bool audit_mutant(const Graph& g, std::mt19937_64& rng, AuditLog& log);

/// Checks that w certifies a chord of g: w.chord is an edge of g and w.cycle
/// is a cycle of g - chord through both of its endpoints.
bool is_valid_chord_witness(const Graph& g, const ChordWitness& w);

/// Reference for in_common_cycle by separator search (Menger): quadratic.
bool common_cycle_by_separators(const Graph& g, Vertex a, Vertex b);

/// d_{G[M]}(v) counted directly from g.
int degree_in_matched(const Graph& g, const Matching& m, Vertex v);

struct AuditConfig {
  std::size_t count = 200;
  std::uint64_t seed = 7;
  int min_base = 4;
  int max_base = 30;
  std::size_t mutants = 0;
  std::size_t random_matchings = 2;
  SamplingConfig sampling;
  ColoringAuditConfig coloring;
};

struct AuditReport {
  AuditConfig config;
  std::size_t graphs = 0;
  std::size_t pairs = 0;    // (graph, matching) pairs audited
  std::size_t mutants = 0;  // mutants actually planted
  AuditLog log;

  bool passed() const { return log.passed(); }
  nlohmann::ordered_json to_json() const;
};

/// Builds the corpus and runs every audit over it, then plants and checks
/// `mutants` chord mutants (plus K4 and the 6-vertex wheel when mutants > 0).
AuditReport run_audit(const AuditConfig& config);

}  // namespace chordless

#endif  // CHORDLESS_AUDIT_HPP
