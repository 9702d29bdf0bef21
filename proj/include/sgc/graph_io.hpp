#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sgc/signed_graph.hpp"

namespace sgc {

/// Malformed graph text. line() is 1-based, 0 when no single line is at
/// fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line);
  std::size_t line() const noexcept { return line_; }
  /// The message without the line suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
};

/// Reads the line format
///
///   n
///   u v s      (0 <= u, v < n, u != v, s in {+, -})
///
/// Blank lines are skipped, '#' starts a comment, CRLF is accepted.
SignedGraph parse_graph(std::string_view text);

/// Same header, edge lines "u v" with no sign; every edge is positive.
SignedGraph parse_unsigned_edge_list(std::string_view text);

/// Inverse of parse_graph. Edges in the order of SignedGraph::edges().
std::string render_graph(const SignedGraph& g);

/// One-line form "n:u-v+,u-v-,..." for logs and discrepancy records.
std::string compact_form(const SignedGraph& g);

/// Reads a file and parses it (signed unless `unsigned_edges`). Throws
/// ParseError, with line 0 when the file cannot be opened.
SignedGraph read_graph_file(const std::string& path, bool unsigned_edges = false);

}  // namespace sgc
