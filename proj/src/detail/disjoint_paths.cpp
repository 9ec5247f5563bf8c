#include "detail/disjoint_paths.hpp"

#include <deque>
#include <map>

namespace chordless::detail {
namespace {

struct Arc {
  int to;
  int cap;
  int rev;
};

class Network {
 public:
  explicit Network(int nodes) : arcs_(static_cast<std::size_t>(nodes)) {}

  void add(int from, int to, int cap) {
    auto& a = arcs_[static_cast<std::size_t>(from)];
    auto& b = arcs_[static_cast<std::size_t>(to)];
    a.push_back({to, cap, static_cast<int>(b.size())});
    b.push_back({from, 0, static_cast<int>(a.size()) - 1});
  }

  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> via(arcs_.size(), {-1, -1});
    std::vector<char> seen(arcs_.size(), 0);
    std::deque<int> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty() && !seen[static_cast<std::size_t>(t)]) {
      int x = queue.front();
      queue.pop_front();
      const auto& out = arcs_[static_cast<std::size_t>(x)];
      for (int i = 0; i < static_cast<int>(out.size()); ++i) {
        const Arc& arc = out[static_cast<std::size_t>(i)];
        if (arc.cap > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
          seen[static_cast<std::size_t>(arc.to)] = 1;
          via[static_cast<std::size_t>(arc.to)] = {x, i};
          queue.push_back(arc.to);
        }
      }
    }
    if (!seen[static_cast<std::size_t>(t)]) return false;
    for (int y = t; y != s;) {
      auto [x, i] = via[static_cast<std::size_t>(y)];
      Arc& arc = arcs_[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)];
      arc.cap -= 1;
      arcs_[static_cast<std::size_t>(arc.to)][static_cast<std::size_t>(arc.rev)].cap += 1;
      y = x;
    }
    return true;
  }

  /// Net flow on forward arc (x -> to): capacity of the reverse arc.
  std::vector<Arc>& out(int x) { return arcs_[static_cast<std::size_t>(x)]; }
  int flow(int x, std::size_t i) {
    const Arc& arc = arcs_[static_cast<std::size_t>(x)][i];
    return arcs_[static_cast<std::size_t>(arc.to)][static_cast<std::size_t>(arc.rev)].cap;
  }

 private:
  std::vector<std::vector<Arc>> arcs_;
};

}  // namespace

std::vector<std::vector<Vertex>> disjoint_paths(const Graph& g, Vertex source, std::span<const Vertex> targets,
                                                int want) {
  const int n = static_cast<int>(g.order());
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };
  const int sink = 2 * n;
  Network net(2 * n + 1);

  std::map<Vertex, int> target_cap;
  for (Vertex t : targets) ++target_cap[t];

  // Forward arcs are added before their twins, so original arcs have
  // positive initial capacity and can be told apart from residual ones.
  std::vector<std::vector<char>> forward(static_cast<std::size_t>(2 * n + 1));
  auto add = [&](int from, int to, int cap) {
    net.add(from, to, cap);
    forward[static_cast<std::size_t>(from)].push_back(1);
    forward[static_cast<std::size_t>(to)].push_back(0);
  };

  for (Vertex v = 0; v < n; ++v) {
    int cap = 1;
    if (v == source) {
      cap = 0;
    } else if (auto it = target_cap.find(v); it != target_cap.end()) {
      cap = it->second;
    }
    add(in(v), out(v), cap);
  }
  for (const auto& [t, cap] : target_cap) {
    if (t != source) add(out(t), sink, cap);
  }
  for (const Edge& e : g.edges()) {
    add(out(e.u), in(e.v), 1);
    add(out(e.v), in(e.u), 1);
  }

  int found = 0;
  while (found < want && net.augment(out(source), sink)) ++found;

  std::vector<std::vector<Vertex>> paths;
  for (int k = 0; k < found; ++k) {
    std::vector<Vertex> path{source};
    int node = out(source);
    while (node != sink) {
      auto& arcs = net.out(node);
      bool moved = false;
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (!forward[static_cast<std::size_t>(node)][i] || net.flow(node, i) <= 0) continue;
        // Consume one unit so the next walk takes a different route.
        Arc& arc = arcs[i];
        arc.cap += 1;
        net.out(arc.to)[static_cast<std::size_t>(arc.rev)].cap -= 1;
        int next = arc.to;
        if (next != sink) {
          // next is an in-node; hop across its split arc.
          Vertex v = next / 2;
          path.push_back(v);
          auto& split = net.out(next);
          for (std::size_t j = 0; j < split.size(); ++j) {
            if (forward[static_cast<std::size_t>(next)][j] && split[j].to == out(v)) {
              split[j].cap += 1;
              net.out(out(v))[static_cast<std::size_t>(split[j].rev)].cap -= 1;
              break;
            }
          }
          next = out(v);
        }
        node = next;
        moved = true;
        break;
      }
      if (!moved) break;
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace chordless::detail
