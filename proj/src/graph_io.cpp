#include "sgc/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace sgc {

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line > 0 ? what + ", line " + std::to_string(line) : what), detail_(what), line_(line) {}

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
  return v;
}

SignedGraph parse(std::string_view text, bool signed_edges) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (!n) {
      if (tok.size() != 1) throw ParseError("header must be a single node count", line_no);
      n = parse_index(tok[0], line_no);
      continue;
    }
    const std::size_t want = signed_edges ? 3 : 2;
    if (tok.size() != want)
      throw ParseError(signed_edges ? "expected 'u v s'" : "expected 'u v'", line_no);
    Edge e;
    e.u = parse_index(tok[0], line_no);
    e.v = parse_index(tok[1], line_no);
    if (e.u >= *n || e.v >= *n) throw ParseError("index out of range", line_no);
    if (e.u == e.v) throw ParseError("self-loop", line_no);
    if (signed_edges) {
      if (tok[2] == "+")
        e.sign = Sign::kPositive;
      else if (tok[2] == "-")
        e.sign = Sign::kNegative;
      else
        throw ParseError("sign must be '+' or '-', got '" + std::string(tok[2]) + "'", line_no);
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((edges[i].u == e.u && edges[i].v == e.v) || (edges[i].u == e.v && edges[i].v == e.u))
        throw ParseError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v), line_no);
    edges.push_back(e);
  }
  if (!n) throw ParseError("missing node count", 0);
  return SignedGraph(*n, edges);
}

}  // namespace

SignedGraph parse_graph(std::string_view text) { return parse(text, true); }

SignedGraph parse_unsigned_edge_list(std::string_view text) { return parse(text, false); }

std::string render_graph(const SignedGraph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + to_char(e.sign) + "\n";
  return out;
}

std::string compact_form(const SignedGraph& g) {
  std::string out = std::to_string(g.order()) + ":";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(e.u) + "-" + std::to_string(e.v) + to_char(e.sign);
  }
  return out;
}

SignedGraph read_graph_file(const std::string& path, bool unsigned_edges) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return unsigned_edges ? parse_unsigned_edge_list(text) : parse_graph(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.detail(), e.line());
  }
}

}  // namespace sgc
