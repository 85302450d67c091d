#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivc/graph.hpp"

namespace ivc {

using Color = int;

/// Assignment of colors to edges together with the declared span t.
///
/// The span is stored rather than inferred from the largest color, since an
/// interval t-coloring must use every color in 1..t.
class EdgeColoring {
 public:
  explicit EdgeColoring(int span = 1) : span_(span) {
    if (span < 1) throw std::invalid_argument("coloring span must be positive");
  }

  int span() const { return span_; }

  void set(Edge e, Color c) {
    const Edge key = make_edge(e.u, e.v);
    // Appending in sorted order is amortized constant.
    if (colors_.empty() || colors_.rbegin()->first < key)
      colors_.emplace_hint(colors_.end(), key, c);
    else
      colors_[key] = c;
  }
  void set(Vertex a, Vertex b, Color c) { set(make_edge(a, b), c); }

  std::optional<Color> color_of(Edge e) const {
    auto it = colors_.find(make_edge(e.u, e.v));
    if (it == colors_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<Color> color_of(Vertex a, Vertex b) const {
    return color_of(make_edge(a, b));
  }

  std::size_t size() const { return colors_.size(); }
  bool empty() const { return colors_.empty(); }

  /// Edge -> color, ordered lexicographically by edge.
  const std::map<Edge, Color>& assignment() const { return colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int span_;
  std::map<Edge, Color> colors_;
};

/// Colors incident to one vertex, sorted and distinct.
struct VertexPalette {
  Vertex vertex = 0;
  std::vector<Color> colors;

  bool is_interval() const {
    return colors.empty() || colors.back() - colors.front() + 1 ==
                                 static_cast<int>(colors.size());
  }
};

class UncoloredEdgeError : public std::runtime_error {
 public:
  explicit UncoloredEdgeError(Edge e)
      : std::runtime_error("edge " + to_string(e) + " has no color"), edge_(e) {}
  Edge edge() const { return edge_; }

 private:
  Edge edge_;
};

inline VertexPalette palette(const Graph& g, const EdgeColoring& c, Vertex x) {
  VertexPalette p{x, {}};
  for (std::size_t k : g.incident(x)) {
    auto col = c.color_of(g.edge(k));
    if (!col) throw UncoloredEdgeError(g.edge(k));
    p.colors.push_back(*col);
  }
  std::sort(p.colors.begin(), p.colors.end());
  p.colors.erase(std::unique(p.colors.begin(), p.colors.end()), p.colors.end());
  return p;
}

inline std::set<Color> colors_used(const EdgeColoring& c) {
  std::set<Color> used;
  for (const auto& [e, col] : c.assignment()) used.insert(col);
  return used;
}

enum class ViolationKind {
  NotProper,
  NotConsecutive,
  ColorUnused,
  ColorOutOfRange,
  EdgeUncolored,
  EdgeNotInGraph,
};

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotProper: return "NotProper";
    case ViolationKind::NotConsecutive: return "NotConsecutive";
    case ViolationKind::ColorUnused: return "ColorUnused";
    case ViolationKind::ColorOutOfRange: return "ColorOutOfRange";
    case ViolationKind::EdgeUncolored: return "EdgeUncolored";
    case ViolationKind::EdgeNotInGraph: return "EdgeNotInGraph";
  }
  return "?";
}

/// One failed condition. Only the fields that locate this kind are set.
struct Violation {
  ViolationKind kind;
  std::optional<Vertex> vertex;
  std::optional<Edge> edge;
  std::optional<Color> color;

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::string describe(const Violation& v) {
  std::string s = to_string(v.kind);
  if (v.vertex) s += " vertex " + std::to_string(*v.vertex);
  if (v.edge) s += " edge " + to_string(*v.edge);
  if (v.color) s += " color " + std::to_string(*v.color);
  return s;
}

struct IntervalReport {
  std::vector<Violation> violations;

  bool verdict() const { return violations.empty(); }

  std::size_t count(ViolationKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        violations.begin(), violations.end(),
        [kind](const Violation& v) { return v.kind == kind; }));
  }
};

/**
 * Checks that c is an interval edge coloring of g with colors 1..c.span():
 * every edge has a color in range, no color repeats at a vertex, the colors
 * at each vertex x form d(x) consecutive integers, and every color in
 * 1..span labels some edge.
 *
 * All violations are collected. Isolated vertices satisfy the consecutive
 * condition vacuously.
 */
inline IntervalReport verify_interval(const Graph& g, const EdgeColoring& c) {
  IntervalReport report;
  auto add = [&report](ViolationKind kind, std::optional<Vertex> x,
                       std::optional<Edge> e, std::optional<Color> col) {
    report.violations.push_back({kind, x, e, col});
  };

  // Both edge lists are sorted, so one merged pass maps colors to edge indices.
  std::vector<std::optional<Color>> by_index(g.edge_count());
  {
    const auto edges = g.edges();
    std::size_t k = 0;
    for (const auto& [e, col] : c.assignment()) {
      while (k < edges.size() && edges[k] < e) ++k;
      if (k < edges.size() && edges[k] == e)
        by_index[k] = col;
      else
        add(ViolationKind::EdgeNotInGraph, std::nullopt, e, col);
    }
  }
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!by_index[k])
      add(ViolationKind::EdgeUncolored, std::nullopt, g.edge(k), std::nullopt);
    else if (*by_index[k] < 1 || *by_index[k] > c.span())
      add(ViolationKind::ColorOutOfRange, std::nullopt, g.edge(k), *by_index[k]);
  }

  std::vector<Color> at_vertex;
  for (Vertex x = 1; x <= g.vertex_count(); ++x) {
    at_vertex.clear();
    bool fully_colored = true;
    for (std::size_t k : g.incident(x)) {
      if (by_index[k])
        at_vertex.push_back(*by_index[k]);
      else
        fully_colored = false;
    }
    std::sort(at_vertex.begin(), at_vertex.end());
    for (std::size_t k = 1; k < at_vertex.size(); ++k)
      if (at_vertex[k] == at_vertex[k - 1] &&
          (k == 1 || at_vertex[k - 2] != at_vertex[k]))
        add(ViolationKind::NotProper, x, std::nullopt, at_vertex[k]);

    at_vertex.erase(std::unique(at_vertex.begin(), at_vertex.end()), at_vertex.end());
    if (fully_colored && !at_vertex.empty() &&
        at_vertex.back() - at_vertex.front() + 1 != static_cast<int>(at_vertex.size()))
      add(ViolationKind::NotConsecutive, x, std::nullopt, std::nullopt);
  }

  std::vector<bool> seen(static_cast<std::size_t>(c.span()) + 1, false);
  for (const auto& col : by_index)
    if (col && *col >= 1 && *col <= c.span()) seen[*col] = true;
  for (Color col = 1; col <= c.span(); ++col)
    if (!seen[col]) add(ViolationKind::ColorUnused, std::nullopt, std::nullopt, col);

  return report;
}

/// Maps every color col to span + 1 - col.
inline EdgeColoring reflect(const EdgeColoring& c) {
  EdgeColoring out(c.span());
  for (const auto& [e, col] : c.assignment()) out.set(e, c.span() + 1 - col);
  return out;
}

}  // namespace ivc
