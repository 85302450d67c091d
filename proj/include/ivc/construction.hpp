#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivc/coloring.hpp"
#include "ivc/graph.hpp"

namespace ivc {

/// Names one of the eight index-range clauses of the 3n-2 coloring of K_2n,
/// numbered 1..8 in the order they are stated.
struct CaseId {
  int value = 0;

  friend constexpr auto operator<=>(const CaseId&, const CaseId&) = default;
};

inline constexpr int kCaseCount = 8;

namespace detail {

inline void check_pair(int n, Vertex i, Vertex j) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (i < 1 || i >= j || j > 2 * n)
    throw std::invalid_argument("need 1 <= i < j <= 2n, got i=" + std::to_string(i) +
                                " j=" + std::to_string(j) + " n=" + std::to_string(n));
}

constexpr bool in(int x, int lo, int hi) { return lo <= x && x <= hi; }

}  // namespace detail

/**
 * Bit k-1 is set iff clause k admits the pair (i, j), i < j, of K_2n.
 *
 * Each clause is an index box plus a side condition. A box whose lower end
 * exceeds its upper end is empty.
 */
inline std::bitset<kCaseCount> matching_cases(int n, Vertex i, Vertex j) {
  detail::check_pair(n, i, j);
  using detail::in;
  const int half = n / 2;
  const int half_below = (n - 1) / 2;
  std::bitset<kCaseCount> hit;
  hit[0] = in(i, 1, half) && in(j, 2, n) && i + j <= n + 1;
  hit[1] = in(i, 2, n - 1) && in(j, half + 2, n) && i + j >= n + 2;
  hit[2] = in(i, 3, n) && in(j, n + 1, 2 * n - 2) && j - i <= n - 2;
  hit[3] = in(i, 1, n) && in(j, n + 1, 2 * n) && j - i >= n;
  hit[4] = in(i, 2, 1 + half_below) && in(j, n + 1, n + half_below) && j - i == n - 1;
  hit[5] = in(i, half_below + 2, n) && in(j, n + 1 + half_below, 2 * n - 1) && j - i == n - 1;
  hit[6] = in(i, n + 1, n + half - 1) && in(j, n + 2, 2 * n - 2) && i + j <= 3 * n - 1;
  hit[7] = in(i, n + 1, 2 * n - 1) && in(j, n + half + 1, 2 * n) && i + j >= 3 * n;
  return hit;
}

/// The unique clause covering (i, j). Throws std::logic_error if the clauses
/// fail to partition the pairs at this n.
inline CaseId classify_edge(int n, Vertex i, Vertex j) {
  const auto hit = matching_cases(n, i, j);
  if (hit.count() != 1)
    throw std::logic_error("pair (" + std::to_string(i) + "," + std::to_string(j) +
                           ") matches " + std::to_string(hit.count()) +
                           " cases at n=" + std::to_string(n));
  for (int k = 0; k < kCaseCount; ++k)
    if (hit[k]) return CaseId{k + 1};
  return CaseId{};  // unreachable
}

inline Color case_color(CaseId id, int n, Vertex i, Vertex j) {
  switch (id.value) {
    case 1: return i + j - 2;
    case 2: return i + j + n - 3;
    case 3: return n + j - i;
    case 4: return j - i;
    case 5: return 2 * (i - 1);
    case 6: return i + j - 2;
    case 7: return i + j - 2 * n;
    case 8: return i + j - n - 1;
  }
  throw std::invalid_argument("case id out of range: " + std::to_string(id.value));
}

/// Interval edge coloring of K_2n with colors 1..3n-2.
inline EdgeColoring construct(int n) {
  if (n < 1) throw std::invalid_argument("construct: n must be positive");
  EdgeColoring c(3 * n - 2);
  for (Vertex i = 1; i <= 2 * n; ++i)
    for (Vertex j = i + 1; j <= 2 * n; ++j)
      c.set(i, j, case_color(classify_edge(n, i, j), n, i, j));
  return c;
}

/**
 * 1-factorization of K_2n by the circle method, one color per round.
 *
 * Vertex 2n is fixed; vertices 1..2n-1 sit on a circle of size m = 2n-1.
 * In round r (0-based), i and j are paired when i + j = 2r (mod m), and the
 * vertex with 2i = 2r meets vertex 2n. The result uses colors 1..2n-1 and
 * every color class is a perfect matching.
 */
inline EdgeColoring round_robin(int n) {
  if (n < 1) throw std::invalid_argument("round_robin: n must be positive");
  const int m = 2 * n - 1;
  const long long inverse_of_two = (m + 1) / 2;
  EdgeColoring c(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b)
      c.set(a + 1, b + 1, static_cast<Color>((a + b) * inverse_of_two % m) + 1);
    c.set(a + 1, 2 * n, a + 1);
  }
  return c;
}

struct CaseStats {
  CaseId id;
  std::size_t edges = 0;
  Color min_color = 0;  // 0 when the case covers no edge
  Color max_color = 0;
};

/// Edge count and color range of each clause over all pairs of K_2n.
inline std::array<CaseStats, kCaseCount> case_statistics(int n) {
  if (n < 1) throw std::invalid_argument("case_statistics: n must be positive");
  std::array<CaseStats, kCaseCount> stats;
  for (int k = 0; k < kCaseCount; ++k) stats[k].id = CaseId{k + 1};
  for (Vertex i = 1; i <= 2 * n; ++i) {
    for (Vertex j = i + 1; j <= 2 * n; ++j) {
      const CaseId id = classify_edge(n, i, j);
      const Color col = case_color(id, n, i, j);
      auto& s = stats[id.value - 1];
      if (s.edges == 0 || col < s.min_color) s.min_color = col;
      if (s.edges == 0 || col > s.max_color) s.max_color = col;
      ++s.edges;
    }
  }
  return stats;
}

}  // namespace ivc
