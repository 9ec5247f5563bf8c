#ifndef CHORDLESS_EDGE_LIST_HPP
#define CHORDLESS_EDGE_LIST_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "chordless/graph.hpp"

namespace chordless {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct EdgeListResult {
  Graph graph;
  /// Number of input lines that repeated an already-seen edge.
  std::size_t duplicate_edges = 0;
};

/// Parses the edge-list text format.
///
/// One edge per line as two whitespace-separated tokens; lines starting with
/// `#` are comments. Tokens become vertex ids in first-seen order and are kept
/// as labels. A `#@ vertices t0 t1 ...` directive pre-assigns ids in order,
/// which also declares isolated vertices.
EdgeListResult load_edge_list(std::string_view text);

/// Canonical serialization: the vertices directive, then one `u v` line per
/// edge in sorted canonical order, written with labels.
std::string to_edge_list(const Graph& g);

/// {"n": ..., "edges": [[u, v], ...], "labels": [...]}
nlohmann::ordered_json to_json(const Graph& g);

}  // namespace chordless

#endif  // CHORDLESS_EDGE_LIST_HPP
