#include "chordless/structure.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "chordless/contraction.hpp"
#include "detail/disjoint_paths.hpp"

namespace chordless {
namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw std::out_of_range("unknown vertex " + std::to_string(v));
}

// Edge ids of the adjacency entries, parallel to g.neighbors(v).
std::vector<std::vector<int>> incident_edge_ids(const Graph& g) {
  std::vector<std::vector<int>> ids(g.order());
  for (Vertex v = 0; ix(v) < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) ids[ix(v)].push_back(static_cast<int>(*g.edge_id(v, w)));
  }
  return ids;
}

// A chord witness for edge `id` of g, searched inside its block only: every
// cycle through both endpoints of an edge lies in the edge's block.
std::optional<ChordWitness> chord_in_block(const Graph& g, const BlockDecomposition& d, std::size_t id) {
  const Edge e = g.edges()[id];
  const Block& block = d.blocks[static_cast<std::size_t>(d.edge_block[id])];
  if (block.vertices.size() < 3) return std::nullopt;
  InducedSubgraph local = induced_subgraph(g, block.vertices);
  Vertex a = *local.from_host(e.u);
  Vertex b = *local.from_host(e.v);
  Graph rest = remove_edge(local.graph, Edge{a, b});
  auto cycle = cycle_through(rest, a, b);
  if (!cycle) return std::nullopt;
  for (Vertex& v : *cycle) v = local.to_host[ix(v)];
  return ChordWitness{e, std::move(*cycle)};
}

}  // namespace

BlockDecomposition blocks(const Graph& g) {
  const std::size_t n = g.order();
  const auto eids = incident_edge_ids(g);
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::vector<Edge>> found;
  std::vector<int> edge_stack;

  struct Frame {
    Vertex v;
    int parent_edge;
    std::size_t next;
  };
  int clock = 0;
  for (Vertex root = 0; ix(root) < n; ++root) {
    if (disc[ix(root)] >= 0 || g.degree(root) == 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[ix(root)] = low[ix(root)] = clock++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const Vertex v = top.v;
      if (top.next < g.neighbors(v).size()) {
        const std::size_t i = top.next++;
        const Vertex w = g.neighbors(v)[i];
        const int eid = eids[ix(v)][i];
        if (eid == top.parent_edge) continue;
        if (disc[ix(w)] < 0) {
          edge_stack.push_back(eid);
          disc[ix(w)] = low[ix(w)] = clock++;
          stack.push_back({w, eid, 0});
        } else if (disc[ix(w)] < disc[ix(v)]) {
          edge_stack.push_back(eid);
          low[ix(v)] = std::min(low[ix(v)], disc[ix(w)]);
        }
        continue;
      }
      const int via = top.parent_edge;
      stack.pop_back();
      if (stack.empty()) break;
      const Vertex parent = stack.back().v;
      low[ix(parent)] = std::min(low[ix(parent)], low[ix(v)]);
      if (low[ix(v)] >= disc[ix(parent)]) {
        std::vector<Edge> block;
        int eid;
        do {
          eid = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(g.edges()[static_cast<std::size_t>(eid)]);
        } while (eid != via);
        std::sort(block.begin(), block.end());
        found.push_back(std::move(block));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  BlockDecomposition d;
  d.edge_block.assign(g.size(), -1);
  d.vertex_blocks.assign(n, {});
  for (std::size_t b = 0; b < found.size(); ++b) {
    Block block;
    block.edges = std::move(found[b]);
    for (const Edge& e : block.edges) {
      d.edge_block[*g.edge_id(e.u, e.v)] = static_cast<int>(b);
      block.vertices.push_back(e.u);
      block.vertices.push_back(e.v);
    }
    std::sort(block.vertices.begin(), block.vertices.end());
    block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()), block.vertices.end());
    for (Vertex v : block.vertices) d.vertex_blocks[ix(v)].push_back(static_cast<int>(b));
    d.blocks.push_back(std::move(block));
  }
  d.block_cutvertices.assign(d.blocks.size(), {});
  for (Vertex v = 0; ix(v) < n; ++v) {
    if (d.vertex_blocks[ix(v)].size() < 2) continue;
    d.cutvertices.push_back(v);
    d.cutvertex_blocks.push_back(d.vertex_blocks[ix(v)]);
    for (int b : d.vertex_blocks[ix(v)]) d.block_cutvertices[static_cast<std::size_t>(b)].push_back(v);
  }
  return d;
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 2) return false;
  if (!is_connected(g)) return false;
  return blocks(g).cutvertices.empty();
}

std::vector<LeafblockReport> leafblocks(const BlockDecomposition& d) {
  std::vector<LeafblockReport> out;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    if (d.block_cutvertices[b].size() == 1) out.push_back({static_cast<int>(b), d.block_cutvertices[b].front()});
  }
  return out;
}

CommonCycleResult in_common_cycle(const Graph& g, Vertex a, Vertex b) {
  return in_common_cycle(g, blocks(g), a, b);
}

CommonCycleResult in_common_cycle(const Graph& g, const BlockDecomposition& d, Vertex a, Vertex b) {
  require_vertex(g, a);
  require_vertex(g, b);
  if (a == b) throw std::invalid_argument("in_common_cycle: vertices must differ");

  CommonCycleResult result;
  if (auto id = g.edge_id(a, b)) {
    // The only block holding both ends of an edge is the edge's own block.
    const Block& block = d.blocks[static_cast<std::size_t>(d.edge_block[*id])];
    result.on_common_cycle = block.vertices.size() >= 3;
    return result;
  }

  const auto& blocks_a = d.vertex_blocks[ix(a)];
  const auto& blocks_b = d.vertex_blocks[ix(b)];
  for (int x : blocks_a) {
    if (std::find(blocks_b.begin(), blocks_b.end(), x) != blocks_b.end()) {
      result.on_common_cycle = true;
      return result;
    }
  }

  // Walk the block-cut tree from a to b; its first inner cutvertex separates.
  const std::size_t nb = d.blocks.size();
  auto cut_node = [&](Vertex v) -> int {
    auto it = std::lower_bound(d.cutvertices.begin(), d.cutvertices.end(), v);
    return static_cast<int>(nb) + static_cast<int>(it - d.cutvertices.begin());
  };
  auto node_of = [&](Vertex v) -> int {
    const auto& bl = d.vertex_blocks[ix(v)];
    if (bl.empty()) return -1;
    return bl.size() == 1 ? bl.front() : cut_node(v);
  };
  const int from = node_of(a);
  const int to = node_of(b);
  if (from < 0 || to < 0) {
    result.disconnected = true;
    return result;
  }
  const std::size_t total = nb + d.cutvertices.size();
  std::vector<int> parent(total, -2);
  std::deque<int> queue{from};
  parent[static_cast<std::size_t>(from)] = -1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == to) break;
    auto visit = [&](int y) {
      if (parent[static_cast<std::size_t>(y)] == -2) {
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
    };
    if (static_cast<std::size_t>(x) < nb) {
      for (Vertex c : d.block_cutvertices[static_cast<std::size_t>(x)]) visit(cut_node(c));
    } else {
      for (int bl : d.cutvertex_blocks[static_cast<std::size_t>(x) - nb]) visit(bl);
    }
  }
  if (parent[static_cast<std::size_t>(to)] == -2) {
    result.disconnected = true;
    return result;
  }
  std::vector<int> route;
  for (int x = to; x != -1; x = parent[static_cast<std::size_t>(x)]) route.push_back(x);
  std::reverse(route.begin(), route.end());
  for (int x : route) {
    if (static_cast<std::size_t>(x) < nb) continue;
    Vertex c = d.cutvertices[static_cast<std::size_t>(x) - nb];
    if (c != a && c != b) {
      result.separator = c;
      break;
    }
  }
  return result;
}

std::optional<std::vector<Vertex>> cycle_through(const Graph& g, Vertex a, Vertex b) {
  if (!in_common_cycle(g, a, b).on_common_cycle) return std::nullopt;
  if (g.has_edge(a, b)) {
    std::vector<Vertex> path = shortest_path(remove_edge(g, Edge::of(a, b)), a, b);
    return path;
  }
  const Vertex targets[] = {b, b};
  auto paths = detail::disjoint_paths(g, a, targets, 2);
  if (paths.size() < 2) return std::nullopt;
  std::vector<Vertex> cycle = paths[0];
  for (std::size_t i = paths[1].size() - 2; i >= 1; --i) cycle.push_back(paths[1][i]);
  return cycle;
}

bool is_chord_edge(const Graph& g, Edge e) {
  Graph rest = remove_edge(g, e);
  return in_common_cycle(rest, e.u, e.v).on_common_cycle;
}

ChordlessReport is_chordless(const Graph& g) {
  const BlockDecomposition d = blocks(g);
  for (std::size_t id = 0; id < g.size(); ++id) {
    if (auto witness = chord_in_block(g, d, id)) return {false, std::move(witness)};
  }
  return {};
}

bool is_minimally_2connected(const Graph& g) {
  return is_two_connected(g) && is_chordless(g).chordless;
}

MengerPathPair menger_pair(const Graph& g, Vertex x, Vertex y, Vertex z) {
  require_vertex(g, x);
  require_vertex(g, y);
  require_vertex(g, z);
  if (y == z) throw std::invalid_argument("menger_pair: y and z must differ");
  if (!is_two_connected(g)) throw std::invalid_argument("menger_pair: graph is not 2-connected");

  MengerPathPair out{x, {}, {}};
  if (y == x) {
    out.to_y = {x};
    out.to_z = shortest_path(g, x, z);
    return out;
  }
  if (z == x) {
    out.to_y = shortest_path(g, x, y);
    out.to_z = {x};
    return out;
  }
  const Vertex targets[] = {y, z};
  auto paths = detail::disjoint_paths(g, x, targets, 2);
  if (paths.size() != 2) throw std::logic_error("menger_pair: flow found fewer than two paths");
  if (paths[0].back() == y) {
    out.to_y = std::move(paths[0]);
    out.to_z = std::move(paths[1]);
  } else {
    out.to_y = std::move(paths[1]);
    out.to_z = std::move(paths[0]);
  }
  return out;
}

PropertyPReport check_property_P(const Graph& g, const Matching& m) {
  m.validate(g);
  PropertyPReport report;
  if (!is_two_connected(contract(g, m).quotient)) {
    report.holds = false;
    report.violation = PropertyPReport::Violation::kQuotientNotTwoConnected;
    return report;
  }
  std::vector<char> matched(g.order(), 0);
  for (Vertex v : m.vertices()) matched[ix(v)] = 1;
  const BlockDecomposition d = blocks(g);
  for (std::size_t id = 0; id < g.size(); ++id) {
    const Edge e = g.edges()[id];
    if (!matched[ix(e.u)] || !matched[ix(e.v)] || m.contains(e)) continue;
    if (auto witness = chord_in_block(g, d, id)) {
      report.holds = false;
      report.violation = PropertyPReport::Violation::kChord;
      report.chord = std::move(witness);
      return report;
    }
  }
  return report;
}

InducedSubgraph remove_leafblock_interiors(const Graph& g, std::span<const LeafblockReport> reports) {
  if (!is_connected(g) || is_two_connected(g)) {
    throw std::invalid_argument("remove_leafblock_interiors: graph must be connected and not 2-connected");
  }
  const BlockDecomposition d = blocks(g);
  const auto leaves = leafblocks(d);
  std::vector<Vertex> interior;
  for (const LeafblockReport& r : reports) {
    auto it = std::find_if(leaves.begin(), leaves.end(), [&](const LeafblockReport& l) {
      return l.block == r.block && l.cutvertex == r.cutvertex;
    });
    if (it == leaves.end()) {
      throw std::invalid_argument("block " + std::to_string(r.block) + " with cutvertex " +
                                  std::to_string(r.cutvertex) + " is not a leafblock");
    }
    for (Vertex v : d.blocks[static_cast<std::size_t>(r.block)].vertices) {
      if (v != r.cutvertex) interior.push_back(v);
    }
  }
  return remove_vertices(g, interior);
}

}  // namespace chordless
