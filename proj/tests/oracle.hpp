#pragma once

// Reference implementations used only by tests. They share no code path
// with the library routines they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "ivc/coloring.hpp"
#include "ivc/graph.hpp"

namespace ivc::oracle {

struct CaseHit {
  int case_id;
  Color color;
};

/// Walks every clause's index box literally, loop by loop, and records each
/// (i, j) it admits with the clause's color. A pair covered twice gets two
/// entries.
inline std::map<std::pair<int, int>, std::vector<CaseHit>> enumerate_clauses(int n) {
  std::map<std::pair<int, int>, std::vector<CaseHit>> hits;
  auto add = [&](int id, int i, int j, int color) { hits[{i, j}].push_back({id, color}); };
  const int h = n / 2;
  const int k = (n - 1) / 2;

  for (int i = 1; i <= h; ++i)
    for (int j = 2; j <= n; ++j)
      if (i < j && i + j <= n + 1) add(1, i, j, i + j - 2);
  for (int i = 2; i <= n - 1; ++i)
    for (int j = h + 2; j <= n; ++j)
      if (i < j && i + j >= n + 2) add(2, i, j, i + j + n - 3);
  for (int i = 3; i <= n; ++i)
    for (int j = n + 1; j <= 2 * n - 2; ++j)
      if (j - i <= n - 2) add(3, i, j, n + j - i);
  for (int i = 1; i <= n; ++i)
    for (int j = n + 1; j <= 2 * n; ++j)
      if (j - i >= n) add(4, i, j, j - i);
  for (int i = 2; i <= 1 + k; ++i)
    for (int j = n + 1; j <= n + k; ++j)
      if (j - i == n - 1) add(5, i, j, 2 * (i - 1));
  for (int i = k + 2; i <= n; ++i)
    for (int j = n + 1 + k; j <= 2 * n - 1; ++j)
      if (j - i == n - 1) add(6, i, j, i + j - 2);
  for (int i = n + 1; i <= n + h - 1; ++i)
    for (int j = n + 2; j <= 2 * n - 2; ++j)
      if (i < j && i + j <= 3 * n - 1) add(7, i, j, i + j - 2 * n);
  for (int i = n + 1; i <= 2 * n - 1; ++i)
    for (int j = n + h + 1; j <= 2 * n; ++j)
      if (i < j && i + j >= 3 * n) add(8, i, j, i + j - n - 1);
  return hits;
}

/// Interval check written from the definition alone: proper, every color
/// 1..t used, and each vertex's colors are exactly {a, a+1, ..., a+d-1}.
inline bool is_interval_coloring(const Graph& g, const std::vector<Color>& by_edge, int t) {
  std::vector<int> used(static_cast<std::size_t>(t) + 1, 0);
  for (Color c : by_edge) {
    if (c < 1 || c > t) return false;
    used[c] = 1;
  }
  if (std::accumulate(used.begin(), used.end(), 0) != t) return false;
  for (Vertex x = 1; x <= g.vertex_count(); ++x) {
    std::vector<Color> p;
    for (std::size_t k : g.incident(x)) p.push_back(by_edge[k]);
    if (p.empty()) continue;
    std::sort(p.begin(), p.end());
    for (std::size_t a = 0; a < p.size(); ++a)
      if (p[a] != p[0] + static_cast<Color>(a)) return false;
  }
  return true;
}

/// Existence of an interval t-coloring by enumerating all proper colorings.
/// No interval or usage pruning.
inline bool brute_force_exists(const Graph& g, int t) {
  const std::size_t m = g.edge_count();
  std::vector<Color> col(m, 0);
  std::vector<std::set<Color>> at(static_cast<std::size_t>(g.vertex_count()) + 1);
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == m) return is_interval_coloring(g, col, t);
    const Edge e = g.edge(k);
    for (Color c = 1; c <= t; ++c) {
      if (at[e.u].count(c) || at[e.v].count(c)) continue;
      at[e.u].insert(c);
      at[e.v].insert(c);
      col[k] = c;
      const bool ok = self(self, k + 1);
      at[e.u].erase(c);
      at[e.v].erase(c);
      if (ok) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

/// One representative per isomorphism class of graphs on exactly v vertices.
inline std::vector<Graph> nonisomorphic_graphs(int v) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) pairs.emplace_back(i, j);
  std::vector<int> perm(static_cast<std::size_t>(v));

  auto canonical = [&](std::uint32_t mask) {
    std::uint32_t best = UINT32_MAX;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::uint32_t img = 0;
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (!(mask >> b & 1U)) continue;
        int a = perm[pairs[b].first], c = perm[pairs[b].second];
        if (a > c) std::swap(a, c);
        const auto pos = std::find(pairs.begin(), pairs.end(), std::make_pair(a, c)) - pairs.begin();
        img |= 1U << pos;
      }
      best = std::min(best, img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };

  std::set<std::uint32_t> classes;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) classes.insert(canonical(mask));

  std::vector<Graph> out;
  for (std::uint32_t mask : classes) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1U) edges.push_back({pairs[b].first + 1, pairs[b].second + 1});
    out.emplace_back(v, std::move(edges));
  }
  return out;
}

}  // namespace ivc::oracle
