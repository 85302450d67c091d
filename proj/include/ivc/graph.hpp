#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ivc {

/// 1-based vertex id, as in u_1..u_m.
using Vertex = int;

/// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds the canonical (min, max) form of an unordered pair.
constexpr Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

/**
 * Immutable simple undirected graph on vertices 1..vertex_count.
 *
 * Edges are kept sorted lexicographically, so an edge index is stable and
 * matches the order used by the text formats.
 */
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
    if (vertex_count < 1)
      throw std::invalid_argument("graph needs at least one vertex");
    for (auto& e : edges) {
      if (e.u == e.v)
        throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
      e = make_edge(e.u, e.v);
      if (e.u < 1 || e.v > vertex_count)
        throw std::invalid_argument("edge " + to_string(e) + " out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
      throw std::invalid_argument("duplicate edge " + to_string(*dup));
    edges_ = std::move(edges);

    incident_.resize(static_cast<std::size_t>(vertex_count) + 1);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      incident_[edges_[k].u].push_back(k);
      incident_[edges_[k].v].push_back(k);
    }
    for (Vertex x = 1; x <= vertex_count; ++x)
      max_degree_ = std::max(max_degree_, static_cast<int>(incident_[x].size()));
  }

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  bool contains(Vertex x) const { return x >= 1 && x <= vertex_count_; }

  int degree(Vertex x) const { return static_cast<int>(incident(x).size()); }

  /// Delta(G).
  int max_degree() const { return max_degree_; }

  /// Indices into edges() of the edges at x, in increasing order.
  std::span<const std::size_t> incident(Vertex x) const {
    if (!contains(x))
      throw std::out_of_range("vertex " + std::to_string(x) + " not in graph");
    return incident_[x];
  }

  /// Either orientation of the pair may be given.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const {
    const Edge key = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  bool is_regular() const {
    for (Vertex x = 1; x <= vertex_count_; ++x)
      if (degree(x) != max_degree_) return false;
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  int max_degree_ = 0;
};

/// K_m on vertices 1..m.
inline Graph complete_graph(int m) {
  if (m < 1) throw std::invalid_argument("complete_graph: m must be positive");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (Vertex i = 1; i <= m; ++i)
    for (Vertex j = i + 1; j <= m; ++j) edges.push_back({i, j});
  return Graph(m, std::move(edges));
}

inline bool is_triangle_free(const Graph& g) {
  // Every triangle {a<b<c} is seen once from its smallest edge (a,b).
  for (const Edge& e : g.edges()) {
    for (std::size_t k : g.incident(e.u)) {
      const Edge& f = g.edge(k);
      const Vertex w = f.u == e.u ? f.v : f.u;
      if (w > e.v && g.has_edge(e.v, w)) return false;
    }
  }
  return true;
}

inline bool is_complete(const Graph& g) {
  const auto m = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == m * (m - 1) / 2;
}

}  // namespace ivc
