#include "chordless/edge_list.hpp"

#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace chordless {
namespace {

constexpr std::string_view kVerticesDirective = "#@ vertices";

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

}  // namespace

EdgeListResult load_edge_list(std::string_view text) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.emplace(token, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t duplicates = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    line.remove_prefix(first);
    if (line.starts_with(kVerticesDirective)) {
      if (!edges.empty()) throw ParseError(line_no, "vertices directive after edges");
      for (const auto& token : split_tokens(line.substr(kVerticesDirective.size()))) intern(token);
      continue;
    }
    if (line.front() == '#') continue;

    auto tokens = split_tokens(line);
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two vertex tokens, got " + std::to_string(tokens.size()));
    }
    if (tokens[0] == tokens[1]) throw ParseError(line_no, "self-loop on '" + tokens[0] + "'");
    const Vertex a = intern(tokens[0]);
    const Vertex b = intern(tokens[1]);
    const Edge e = Edge::of(a, b);
    if (!seen.insert(e).second) {
      ++duplicates;
      continue;
    }
    edges.push_back(e);
  }
  return {Graph(labels.size(), edges).with_labels(std::move(labels)), duplicates};
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << kVerticesDirective;
  for (Vertex v = 0; ix(v) < g.order(); ++v) out << ' ' << g.label(v);
  out << '\n';
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

nlohmann::ordered_json to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  auto labels = nlohmann::ordered_json::array();
  for (Vertex v = 0; ix(v) < g.order(); ++v) labels.push_back(g.label(v));
  j["labels"] = std::move(labels);
  return j;
}

}  // namespace chordless
