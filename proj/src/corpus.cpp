#include "chordless/corpus.hpp"

#include <algorithm>

#include "chordless/edge_coloring.hpp"
#include "chordless/generators.hpp"
#include "chordless/structure.hpp"

namespace chordless {
namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[uniform_below(rng, i)]);
}

Graph subdivided_random_graph(int n, std::mt19937_64& rng) {
  // Average base degree in [2.5, 4.5).
  const double degree = 2.5 + 2.0 * uniform_unit(rng);
  const double p = std::min(1.0, degree / std::max(1, n - 1));
  return full_subdivision(random_graph(n, p, rng));
}

}  // namespace

std::vector<NamedGraph> chordless_corpus(const CorpusConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::vector<NamedGraph> out;
  auto keep = [&](std::string name, Graph g) {
    if (out.size() >= config.count || g.size() == 0) return;
    if (config.require_delta3 && max_degree(g) < 3) return;
    out.push_back({std::move(name), std::move(g)});
  };

  for (int delta = config.require_delta3 ? 3 : 2; delta <= 8; ++delta) {
    keep("tightness-" + std::to_string(delta), tightness_graph(delta));
  }
  const int lo = std::max(2, config.min_base);
  const int hi = std::max(lo, config.max_base);
  for (std::size_t round = 0; out.size() < config.count; ++round) {
    const std::string tag = "-" + std::to_string(round);
    switch (round % 4) {
      case 0:
      case 2:
        keep("subdivided-gnp" + tag, subdivided_random_graph(uniform_int(rng, lo, hi), rng));
        break;
      case 1: {
        const int n = uniform_int(rng, std::max(lo, 4), hi);
        const int ears = uniform_int(rng, 1, std::max(1, n / 3));
        Graph g = ear_tree(n, ears, rng);
        if (is_chordless(g).chordless) keep("ear-tree" + tag, std::move(g));
        break;
      }
      case 3:
        if (config.require_delta3) {
          keep("subdivided-tree" + tag, full_subdivision(random_tree(uniform_int(rng, lo, hi), rng)));
        } else if (round % 8 == 3) {
          keep("cycle" + tag, cycle_graph(uniform_int(rng, 3, 12)));
        } else {
          keep("path" + tag, path_graph(uniform_int(rng, 2, 12)));
        }
        break;
    }
  }
  return out;
}

Matching random_matching(const Graph& g, std::mt19937_64& rng) {
  std::vector<Edge> order = g.edges();
  shuffle(order, rng);
  std::vector<char> used(g.order(), 0);
  std::vector<Edge> picked;
  for (const Edge& e : order) {
    if (used[ix(e.u)] || used[ix(e.v)]) continue;
    used[ix(e.u)] = used[ix(e.v)] = 1;
    if (uniform_below(rng, 3) != 0) picked.push_back(e);
  }
  return Matching(g, std::move(picked));
}

std::vector<Matching> coloring_matchings(const Graph& g) {
  return matchings_from_edge_coloring(g, chromatic_index_coloring(g).coloring);
}

std::optional<Graph> plant_chord(const Graph& g, std::mt19937_64& rng) {
  std::vector<Edge> order = g.edges();
  shuffle(order, rng);
  for (const Edge& e : order) {
    auto cycle = cycle_through(g, e.u, e.v);
    if (!cycle || cycle->size() < 4) continue;
    std::vector<std::pair<Vertex, Vertex>> candidates;
    for (std::size_t i = 0; i < cycle->size(); ++i) {
      for (std::size_t j = i + 2; j < cycle->size(); ++j) {
        const Vertex a = (*cycle)[i];
        const Vertex b = (*cycle)[j];
        if (!g.has_edge(a, b)) candidates.emplace_back(a, b);
      }
    }
    if (candidates.empty()) continue;
    auto [a, b] = candidates[uniform_below(rng, candidates.size())];
    return add_edge(g, Edge::of(a, b));
  }
  return std::nullopt;
}

}  // namespace chordless
