#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivc/bounds.hpp"
#include "ivc/coloring.hpp"
#include "ivc/graph.hpp"

namespace ivc {

/// Order in which the search assigns colors to edges.
enum class EdgeOrder {
  Lexicographic,  // by (i, j)
  VertexSweep,    // all edges of the highest-degree vertex first, then the next
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000ULL;

/// Largest span the search accepts; palettes are 64-bit masks.
inline constexpr int kMaxSearchSpan = 64;

struct SearchConfig {
  int t = 1;
  std::uint64_t node_budget = kDefaultNodeBudget;  // 0 = unlimited
  EdgeOrder edge_order = EdgeOrder::Lexicographic;
};

enum class SearchStatus { Found, ExhaustedNoSolution, BudgetExceeded };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::ExhaustedNoSolution: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNoSolution;
  std::optional<EdgeColoring> coloring;  // set iff Found
  std::uint64_t nodes_explored = 0;
};

namespace detail {

inline std::vector<std::size_t> edge_sequence(const Graph& g, EdgeOrder order) {
  std::vector<std::size_t> seq;
  seq.reserve(g.edge_count());
  if (order == EdgeOrder::Lexicographic) {
    for (std::size_t k = 0; k < g.edge_count(); ++k) seq.push_back(k);
    return seq;
  }
  std::vector<Vertex> vertices;
  for (Vertex x = 1; x <= g.vertex_count(); ++x) vertices.push_back(x);
  std::stable_sort(vertices.begin(), vertices.end(),
                   [&g](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<bool> taken(g.edge_count(), false);
  for (Vertex x : vertices)
    for (std::size_t k : g.incident(x))
      if (!taken[k]) {
        taken[k] = true;
        seq.push_back(k);
      }
  return seq;
}

/**
 * Depth-first assignment of colors 1..t to edges in a fixed order.
 *
 * Per vertex it tracks the mask of colors present. A color is admissible
 * at a vertex of degree d
 * when it is new there and the hull of the vertex's colors stays within d
 * consecutive values; this also guarantees the holes in the hull can still
 * be filled by the remaining edges. Color usage is checked at the leaves
 * with a prune when fewer edges remain than unused colors.
 */
class IntervalSearch {
 public:
  IntervalSearch(const Graph& g, const SearchConfig& cfg)
      : g_(g), t_(cfg.t), budget_(cfg.node_budget), order_(edge_sequence(g, cfg.edge_order)) {
    const auto vc = static_cast<std::size_t>(g.vertex_count()) + 1;
    mask_.assign(vc, 0);
    degree_.assign(vc, 0);
    for (Vertex x = 1; x <= g.vertex_count(); ++x) degree_[x] = g.degree(x);
    use_count_.assign(static_cast<std::size_t>(t_) + 1, 0);
    unused_ = t_;
    color_.assign(g.edge_count(), 0);
    endpoints_.reserve(order_.size());
    for (std::size_t k : order_) endpoints_.push_back(g.edge(k));
  }

  SearchOutcome run() {
    SearchOutcome out;
    if (g_.max_degree() <= t_ && descend(0)) {
      out.status = SearchStatus::Found;
      EdgeColoring c(t_);
      for (std::size_t k = 0; k < order_.size(); ++k) c.set(endpoints_[k], color_[k]);
      out.coloring = std::move(c);
    } else {
      out.status = out_of_budget_ ? SearchStatus::BudgetExceeded
                                  : SearchStatus::ExhaustedNoSolution;
    }
    out.nodes_explored = nodes_;
    return out;
  }

 private:
  static constexpr std::uint64_t bit(Color c) { return std::uint64_t{1} << (c - 1); }

  bool admissible(Vertex x, Color c) const {
    const std::uint64_t m = mask_[x];
    if (m & bit(c)) return false;
    if (m == 0) return true;
    const int low = std::countr_zero(m) + 1;
    const int high = 64 - std::countl_zero(m);
    return std::max(high, c) - std::min(low, c) + 1 <= degree_[x];
  }

  bool descend(std::size_t depth) {
    if (budget_ != 0 && nodes_ >= budget_) {
      out_of_budget_ = true;
      return false;
    }
    ++nodes_;
    const std::size_t left = order_.size() - depth;
    if (left == 0) return unused_ == 0;
    if (left < static_cast<std::size_t>(unused_)) return false;

    const Edge e = endpoints_[depth];
    // Colorings are closed under c -> t+1-c, so the first edge only needs
    // the lower half of the range.
    const Color last = depth == 0 ? (t_ + 1) / 2 : t_;
    for (Color c = 1; c <= last; ++c) {
      if (!admissible(e.u, c) || !admissible(e.v, c)) continue;
      mask_[e.u] |= bit(c);
      mask_[e.v] |= bit(c);
      if (use_count_[c]++ == 0) --unused_;
      color_[depth] = c;

      if (descend(depth + 1)) return true;

      if (--use_count_[c] == 0) ++unused_;
      mask_[e.u] &= ~bit(c);
      mask_[e.v] &= ~bit(c);
      if (out_of_budget_) return false;
    }
    return false;
  }

  const Graph& g_;
  int t_;
  std::uint64_t budget_;
  std::vector<std::size_t> order_;
  std::vector<Edge> endpoints_;
  std::vector<std::uint64_t> mask_;
  std::vector<int> degree_;
  std::vector<int> use_count_;
  int unused_ = 0;
  std::vector<Color> color_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
};

}  // namespace detail

/**
 * Decides whether g has an interval coloring with colors exactly 1..cfg.t.
 *
 * ExhaustedNoSolution means the whole tree was searched; BudgetExceeded
 * means the node budget ran out first and nothing is claimed. The result is
 * deterministic for a given graph and config.
 */
inline SearchOutcome find_interval_coloring(const Graph& g, const SearchConfig& cfg) {
  if (cfg.t < 1 || cfg.t > kMaxSearchSpan)
    throw std::invalid_argument("search span must be in 1.." +
                                std::to_string(kMaxSearchSpan) + ", got " +
                                std::to_string(cfg.t));
  return detail::IntervalSearch(g, cfg).run();
}

struct ProbeResult {
  int t = 0;
  SearchStatus status = SearchStatus::ExhaustedNoSolution;
  std::uint64_t nodes = 0;
};

struct WResult {
  int w = 0;  // 0 when no t <= cap was found
  bool complete = false;
  std::optional<EdgeColoring> witness;
  int effective_cap = 0;
  std::vector<ProbeResult> probes;  // in probe order, largest t first
};

struct WOptions {
  std::uint64_t budget = kDefaultNodeBudget;
  EdgeOrder order = EdgeOrder::Lexicographic;
  // Off: only the trivial cap t <= |E| is applied, so every span above the
  // answer is refuted by search alone.
  bool tighten_with_bounds = true;
};

/**
 * Largest t <= t_cap for which g has an interval t-coloring.
 *
 * Every color needs an edge, so t <= |E|. With tighten_with_bounds the cap
 * is also lowered to 2|V|-3, 2|V|-4 and, for triangle-free graphs, |V|-1.
 * Spans are probed from the cap downward and the first Found wins. complete
 * is false if any larger span ended in BudgetExceeded, since that span was
 * never ruled out.
 */
inline WResult compute_w(const Graph& g, int t_cap, const WOptions& opts = {}) {
  if (t_cap < 1) throw std::invalid_argument("compute_w: t_cap must be positive");
  WResult r;
  long long cap = std::min<long long>(t_cap, static_cast<long long>(g.edge_count()));
  if (opts.tighten_with_bounds) {
    if (g.edge_count() > 0) cap = std::min(cap, edge_upper_bound(g));
    if (g.vertex_count() >= 3) cap = std::min(cap, order_upper_bound(g));
    if (auto b = triangle_free_upper_bound(g)) cap = std::min(cap, *b);
  }
  // Spans beyond the search limit are never probed.
  bool gap = cap > kMaxSearchSpan;
  r.effective_cap = static_cast<int>(std::clamp<long long>(cap, 0, kMaxSearchSpan));

  for (int t = r.effective_cap; t >= std::max(1, g.max_degree()); --t) {
    auto out = find_interval_coloring(g, {t, opts.budget, opts.order});
    r.probes.push_back({t, out.status, out.nodes_explored});
    if (out.status == SearchStatus::BudgetExceeded) gap = true;
    if (out.status == SearchStatus::Found) {
      r.w = t;
      r.witness = std::move(out.coloring);
      break;
    }
  }
  r.complete = !gap;
  return r;
}

inline WResult compute_w(const Graph& g, int t_cap, std::uint64_t budget) {
  return compute_w(g, t_cap, WOptions{budget});
}

}  // namespace ivc
