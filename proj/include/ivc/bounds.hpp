#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivc/graph.hpp"

// Bounds on W(G), the largest t for which G has an interval t-coloring.
//
// The chromatic index and the class of interval-colorable graphs are not
// computed here. The only facts used about them are that K_2n has a proper
// coloring with 2n-1 = Delta colors (see round_robin) and that K_2n is
// interval-colorable (see construct).

namespace ivc {

namespace detail {

inline void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive");
}

/// floor(log2(k)) for k >= 1, from the bit length.
constexpr int floor_log2(std::uint64_t k) { return static_cast<int>(std::bit_width(k)) - 1; }

}  // namespace detail

/// W(K_2n) >= 3n - 2, witnessed by construct(n).
inline long long complete_lower_bound(int n) {
  detail::require_positive(n, "complete_lower_bound");
  return 3LL * n - 2;
}

/// W(K_2n) >= 2n - 1 + floor(log2(2n - 1)).
inline long long logarithmic_lower_bound(int n) {
  detail::require_positive(n, "logarithmic_lower_bound");
  const auto m = 2ULL * static_cast<std::uint64_t>(n) - 1;
  return static_cast<long long>(m) + detail::floor_log2(m);
}

/// W(G) <= 2|V| - 3 for G with at least one edge.
inline long long edge_upper_bound(const Graph& g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("edge_upper_bound: graph has no edges");
  return 2LL * g.vertex_count() - 3;
}

/// W(G) <= 2|V| - 4 for |V| >= 3.
inline long long order_upper_bound(const Graph& g) {
  if (g.vertex_count() < 3)
    throw std::invalid_argument("order_upper_bound: graph has fewer than 3 vertices");
  return 2LL * g.vertex_count() - 4;
}

/// W(G) <= |V| - 1 when G has no triangle; nullopt otherwise.
inline std::optional<long long> triangle_free_upper_bound(const Graph& g) {
  if (!is_triangle_free(g)) return std::nullopt;
  return static_cast<long long>(g.vertex_count()) - 1;
}

struct BoundEntry {
  std::string name;  // the formula, e.g. "3n-2"
  std::optional<long long> value;
  std::string reason;  // why the bound does not apply, when value is empty

  bool applicable() const { return value.has_value(); }
};

struct BoundsReport {
  std::string subject;
  std::vector<BoundEntry> lower;
  std::vector<BoundEntry> upper;

  std::optional<long long> best_lower() const {
    std::optional<long long> best;
    for (const auto& b : lower)
      if (b.value && (!best || *b.value > *best)) best = b.value;
    return best;
  }

  std::optional<long long> best_upper() const {
    std::optional<long long> best;
    for (const auto& b : upper)
      if (b.value && (!best || *b.value < *best)) best = b.value;
    return best;
  }
};

inline constexpr const char* kCompleteLowerName = "3n-2";
inline constexpr const char* kLogLowerName = "2n-1+floor(log2(2n-1))";
inline constexpr const char* kEdgeUpperName = "2|V|-3";
inline constexpr const char* kOrderUpperName = "2|V|-4";
inline constexpr const char* kTriangleFreeUpperName = "|V|-1";

namespace detail {

inline void add_upper_bounds(BoundsReport& r, long long vertex_count, bool has_edges,
                             bool triangle_free) {
  if (has_edges)
    r.upper.push_back({kEdgeUpperName, 2 * vertex_count - 3, {}});
  else
    r.upper.push_back({kEdgeUpperName, std::nullopt, "graph has no edges"});

  if (vertex_count >= 3)
    r.upper.push_back({kOrderUpperName, 2 * vertex_count - 4, {}});
  else
    r.upper.push_back({kOrderUpperName, std::nullopt, "needs |V| >= 3"});

  if (triangle_free)
    r.upper.push_back({kTriangleFreeUpperName, vertex_count - 1, {}});
  else
    r.upper.push_back({kTriangleFreeUpperName, std::nullopt, "graph contains a triangle"});
}

}  // namespace detail

/// All bounds for K_2n. Inapplicable bounds are listed with a reason.
inline BoundsReport bounds_for_k2n(int n) {
  detail::require_positive(n, "bounds_for_k2n");
  BoundsReport r;
  r.subject = "K_" + std::to_string(2LL * n) + " (n=" + std::to_string(n) + ")";
  r.lower.push_back({kCompleteLowerName, complete_lower_bound(n), {}});
  r.lower.push_back({kLogLowerName, logarithmic_lower_bound(n), {}});
  // K_2n has an edge, and is triangle-free only for n = 1.
  detail::add_upper_bounds(r, 2LL * n, true, n == 1);
  return r;
}

/// Bounds for an arbitrary graph. The lower bounds only apply to K_2n.
inline BoundsReport bounds_for_graph(const Graph& g) {
  BoundsReport r;
  r.subject = "graph with " + std::to_string(g.vertex_count()) + " vertices and " +
              std::to_string(g.edge_count()) + " edges";
  if (is_complete(g) && g.vertex_count() % 2 == 0) {
    const int n = g.vertex_count() / 2;
    r.subject += " (K_" + std::to_string(2 * n) + ", n=" + std::to_string(n) + ")";
    r.lower.push_back({kCompleteLowerName, complete_lower_bound(n), {}});
    r.lower.push_back({kLogLowerName, logarithmic_lower_bound(n), {}});
  } else {
    r.lower.push_back({kCompleteLowerName, std::nullopt, "graph is not K_2n"});
    r.lower.push_back({kLogLowerName, std::nullopt, "graph is not K_2n"});
  }
  detail::add_upper_bounds(r, g.vertex_count(), g.edge_count() > 0, is_triangle_free(g));
  return r;
}

}  // namespace ivc
