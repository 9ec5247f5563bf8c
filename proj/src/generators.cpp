#include "chordless/generators.hpp"

#include <array>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace chordless {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kFamilyNames{{
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kStar, "star"},
    {Family::kComplete, "complete"},
    {Family::kWheel, "wheel"},
    {Family::kTightness, "tightness"},
    {Family::kFullSubdivision, "full-subdivision"},
    {Family::kRandomTree, "random-tree"},
    {Family::kRandomGraph, "random-graph"},
    {Family::kEarTree, "ear-tree"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [family, known] : kFamilyNames) {
    if (known == name) return family;
  }
  return std::nullopt;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph path_graph(int n) {
  require(n >= 0, "path: n must be nonnegative");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge::of(i, (i + 1) % n));
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph star_graph(int leaves) {
  require(leaves >= 0, "star: leaf count must be nonnegative");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(static_cast<std::size_t>(leaves + 1), edges);
}

Graph complete_graph(int n) {
  require(n >= 0, "complete: n must be nonnegative");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph wheel_graph(int n) {
  require(n >= 4, "wheel: n must be at least 4");
  std::vector<Edge> edges;
  const int rim = n - 1;
  for (int i = 0; i < rim; ++i) {
    edges.push_back({0, i + 1});
    edges.push_back(Edge::of(i + 1, (i + 1) % rim + 1));
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph tightness_graph(int delta) {
  require(delta >= 2, "tightness: delta must be at least 2");
  const Vertex a = 0, b = 1, c = delta + 1;
  std::vector<Edge> edges;
  for (Vertex m = 2; m <= c; ++m) {
    edges.push_back({a, m});
    edges.push_back({b, m});
  }
  for (Vertex pendant = c + 1; pendant < 2 * delta; ++pendant) edges.push_back({c, pendant});
  return Graph(static_cast<std::size_t>(2 * delta), edges);
}

Graph full_subdivision(const Graph& base) {
  std::vector<Edge> edges;
  edges.reserve(2 * base.size());
  const auto n = static_cast<Vertex>(base.order());
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Edge& e = base.edges()[i];
    const Vertex w = n + static_cast<Vertex>(i);
    edges.push_back({e.u, w});
    edges.push_back({e.v, w});
  }
  return Graph(base.order() + base.size(), edges);
}

Graph random_tree(int n, std::mt19937_64& rng) {
  require(n >= 0, "random-tree: n must be nonnegative");
  if (n <= 1) return Graph(static_cast<std::size_t>(n));
  if (n == 2) {
    std::vector<Edge> one{{0, 1}};
    return Graph(2, one);
  }
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
  for (auto& x : code) x = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
  std::vector<int> remaining(static_cast<std::size_t>(n), 1);
  for (Vertex x : code) ++remaining[ix(x)];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (remaining[ix(v)] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (Vertex x : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back(Edge::of(leaf, x));
    if (--remaining[ix(x)] == 1) leaves.push(x);
  }
  Vertex last_a = leaves.top();
  leaves.pop();
  Vertex last_b = leaves.top();
  edges.push_back(Edge::of(last_a, last_b));
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  require(n >= 0, "random-graph: n must be nonnegative");
  require(p >= 0.0 && p <= 1.0, "random-graph: p must lie in [0, 1]");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform_unit(rng) < p) edges.push_back({i, j});
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph ear_tree(int n, int ears, std::mt19937_64& rng) {
  require(n >= 2, "ear-tree: n must be at least 2");
  require(ears >= 0, "ear-tree: ear count must be nonnegative");
  Graph tree = random_tree(n, rng);
  std::vector<Edge> edges = tree.edges();
  Vertex next = n;
  for (int k = 0; k < ears; ++k) {
    Vertex a = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    Vertex b = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
    if (b >= a) ++b;
    // Ear length 2..4 edges, so every ear has at least one fresh inner vertex.
    const int inner = 1 + static_cast<int>(uniform_below(rng, 3));
    Vertex prev = a;
    for (int i = 0; i < inner; ++i) {
      edges.push_back(Edge::of(prev, next));
      prev = next++;
    }
    edges.push_back(Edge::of(prev, b));
  }
  return Graph(static_cast<std::size_t>(next), edges);
}

Graph generate(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  switch (spec.family) {
    case Family::kPath:
      return path_graph(spec.n);
    case Family::kCycle:
      return cycle_graph(spec.n);
    case Family::kStar:
      return star_graph(spec.n);
    case Family::kComplete:
      return complete_graph(spec.n);
    case Family::kWheel:
      return wheel_graph(spec.n);
    case Family::kTightness:
      return tightness_graph(spec.delta);
    case Family::kFullSubdivision:
      require(spec.base != nullptr, "full-subdivision: base graph required");
      return full_subdivision(*spec.base);
    case Family::kRandomTree:
      return random_tree(spec.n, rng);
    case Family::kRandomGraph:
      return random_graph(spec.n, spec.p, rng);
    case Family::kEarTree:
      return ear_tree(spec.n, spec.ears, rng);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace chordless
