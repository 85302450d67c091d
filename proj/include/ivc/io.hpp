#pragma once

// Line-based text formats, DIMACS flavored, with 1-based vertex ids.
//
// Graph file:
//   p <vertex_count> <edge_count>
//   e <i> <j>                       one line per edge
//
// Coloring file:
//   c <vertex_count> <span_t>
//   e <i> <j> <color>               one line per edge
//
// Tokens are whitespace separated. Blank lines and lines starting with '#'
// are ignored. Emitted files list edges sorted by (i, j) with i < j, one
// '\n' after every line.

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ivc/coloring.hpp"
#include "ivc/graph.hpp"

namespace ivc {

enum class ParseErrorKind {
  MalformedHeader,
  MalformedLine,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  CountMismatch,
  ColorOutOfRange,
  UnknownEdge,
  MissingEdge,
  VertexCountMismatch,
};

inline const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedHeader: return "malformed header";
    case ParseErrorKind::MalformedLine: return "malformed line";
    case ParseErrorKind::VertexOutOfRange: return "vertex out of range";
    case ParseErrorKind::SelfLoop: return "self-loop";
    case ParseErrorKind::DuplicateEdge: return "duplicate edge";
    case ParseErrorKind::CountMismatch: return "edge count mismatch";
    case ParseErrorKind::ColorOutOfRange: return "color out of range";
    case ParseErrorKind::UnknownEdge: return "unknown edge";
    case ParseErrorKind::MissingEdge: return "missing edge";
    case ParseErrorKind::VertexCountMismatch: return "vertex count mismatch";
  }
  return "?";
}

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& detail)
      : std::runtime_error("line " + std::to_string(line) + ": " + to_string(kind) +
                           (detail.empty() ? "" : ": " + detail)),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

namespace detail {

inline constexpr long long kMaxVertices = 1 << 24;

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.emplace_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

inline std::optional<long long> to_integer(const std::string& tok) {
  if (tok.empty() || tok.size() > 18) return std::nullopt;
  std::size_t k = tok[0] == '-' ? 1 : 0;
  if (k == tok.size()) return std::nullopt;
  for (std::size_t i = k; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9') return std::nullopt;
  return std::stoll(tok);
}

/// Parses "<tag> a b ..." with `arity` integer fields.
inline std::vector<long long> fields(const Line& line, const char* tag, std::size_t arity,
                                     ParseErrorKind on_error) {
  const auto& t = line.tokens;
  if (t.size() != arity + 1 || t[0] != tag)
    throw ParseError(on_error, line.number,
                     "expected '" + std::string(tag) + "' followed by " +
                         std::to_string(arity) + " integers");
  std::vector<long long> out;
  for (std::size_t k = 1; k < t.size(); ++k) {
    auto v = to_integer(t[k]);
    if (!v) throw ParseError(on_error, line.number, "not an integer: '" + t[k] + "'");
    out.push_back(*v);
  }
  return out;
}

inline Edge edge_field(const Line& line, long long a, long long b, long long vertex_count) {
  if (a < 1 || a > vertex_count || b < 1 || b > vertex_count)
    throw ParseError(ParseErrorKind::VertexOutOfRange, line.number,
                     "vertex ids must be in 1.." + std::to_string(vertex_count));
  if (a == b)
    throw ParseError(ParseErrorKind::SelfLoop, line.number, "vertex " + std::to_string(a));
  return make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
}

inline std::string header(const char* tag, long long a, long long b) {
  return std::string(tag) + " " + std::to_string(a) + " " + std::to_string(b) + "\n";
}

}  // namespace detail

inline Graph parse_graph(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty())
    throw ParseError(ParseErrorKind::MalformedHeader, 1, "missing 'p' line");
  const auto head = detail::fields(lines[0], "p", 2, ParseErrorKind::MalformedHeader);
  const long long vertex_count = head[0];
  const long long declared = head[1];
  if (vertex_count < 1 || vertex_count > detail::kMaxVertices || declared < 0)
    throw ParseError(ParseErrorKind::MalformedHeader, lines[0].number,
                     "counts out of range");

  std::vector<Edge> edges;
  std::map<Edge, int> first_line;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto f = detail::fields(line, "e", 2, ParseErrorKind::MalformedLine);
    const Edge e = detail::edge_field(line, f[0], f[1], vertex_count);
    auto [it, fresh] = first_line.emplace(e, line.number);
    if (!fresh)
      throw ParseError(ParseErrorKind::DuplicateEdge, line.number,
                       to_string(e) + " first given on line " + std::to_string(it->second));
    edges.push_back(e);
  }
  if (static_cast<long long>(edges.size()) != declared)
    throw ParseError(ParseErrorKind::CountMismatch, lines[0].number,
                     "header declares " + std::to_string(declared) + " edges, found " +
                         std::to_string(edges.size()));
  return Graph(static_cast<int>(vertex_count), std::move(edges));
}

inline std::string emit_graph(const Graph& g) {
  std::string out = detail::header("p", g.vertex_count(), static_cast<long long>(g.edge_count()));
  for (const Edge& e : g.edges())
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// Throws UncoloredEdgeError if some edge of g has no color.
inline std::string emit_coloring(const Graph& g, const EdgeColoring& c) {
  std::string out = detail::header("c", g.vertex_count(), c.span());
  for (const Edge& e : g.edges()) {
    auto col = c.color_of(e);
    if (!col) throw UncoloredEdgeError(e);
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           std::to_string(*col) + "\n";
  }
  return out;
}

struct ColoredGraph {
  Graph graph;
  EdgeColoring coloring;
};

namespace detail {

struct RawColoring {
  long long vertex_count = 0;
  int span = 1;
  int header_line = 0;
  std::vector<std::pair<Edge, Color>> entries;
  std::vector<int> entry_lines;
};

inline RawColoring read_coloring(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty())
    throw ParseError(ParseErrorKind::MalformedHeader, 1, "missing 'c' line");
  const auto head = fields(lines[0], "c", 2, ParseErrorKind::MalformedHeader);
  if (head[0] < 1 || head[0] > kMaxVertices || head[1] < 1 || head[1] > 2 * kMaxVertices)
    throw ParseError(ParseErrorKind::MalformedHeader, lines[0].number, "counts out of range");

  RawColoring raw;
  raw.vertex_count = head[0];
  raw.span = static_cast<int>(head[1]);
  raw.header_line = lines[0].number;
  std::map<Edge, int> first_line;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto f = fields(line, "e", 3, ParseErrorKind::MalformedLine);
    const Edge e = edge_field(line, f[0], f[1], raw.vertex_count);
    if (f[2] < 1 || f[2] > raw.span)
      throw ParseError(ParseErrorKind::ColorOutOfRange, line.number,
                       "color " + std::to_string(f[2]) + " not in 1.." +
                           std::to_string(raw.span));
    auto [it, fresh] = first_line.emplace(e, line.number);
    if (!fresh)
      throw ParseError(ParseErrorKind::DuplicateEdge, line.number,
                       to_string(e) + " first given on line " + std::to_string(it->second));
    raw.entries.emplace_back(e, static_cast<Color>(f[2]));
    raw.entry_lines.push_back(line.number);
  }
  return raw;
}

}  // namespace detail

/// Reads a coloring of the given graph. Every edge of g must appear exactly
/// once and no other edge may appear.
inline EdgeColoring parse_coloring(std::string_view text, const Graph& g) {
  auto raw = detail::read_coloring(text);
  if (raw.vertex_count != g.vertex_count())
    throw ParseError(ParseErrorKind::VertexCountMismatch, raw.header_line,
                     "file has " + std::to_string(raw.vertex_count) + " vertices, graph has " +
                         std::to_string(g.vertex_count()));
  EdgeColoring c(raw.span);
  for (std::size_t k = 0; k < raw.entries.size(); ++k) {
    const auto& [e, col] = raw.entries[k];
    if (!g.has_edge(e.u, e.v))
      throw ParseError(ParseErrorKind::UnknownEdge, raw.entry_lines[k], to_string(e));
    c.set(e, col);
  }
  if (c.size() != g.edge_count()) {
    for (const Edge& e : g.edges())
      if (!c.color_of(e))
        throw ParseError(ParseErrorKind::MissingEdge, raw.header_line,
                         "no color for edge " + to_string(e));
  }
  return c;
}

/// Reads a coloring and takes its edge lines as the graph.
inline ColoredGraph parse_coloring(std::string_view text) {
  auto raw = detail::read_coloring(text);
  std::vector<Edge> edges;
  EdgeColoring c(raw.span);
  for (const auto& [e, col] : raw.entries) {
    edges.push_back(e);
    c.set(e, col);
  }
  return {Graph(static_cast<int>(raw.vertex_count), std::move(edges)), std::move(c)};
}

}  // namespace ivc
