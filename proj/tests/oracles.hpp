#pragma once
// Test-only reference computations. None of these call into the library.
#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

/// mu(0..n_max) as an unbounded knapsack, item-major: each triangular part
/// C(i,2) with weight i relaxes the whole array before the next part.
inline std::vector<std::int64_t> mu_knapsack(std::int64_t n_max) {
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> best(static_cast<std::size_t>(n_max + 1), inf);
  best[0] = 0;
  for (std::int64_t i = 2; i * (i - 1) / 2 <= n_max; ++i) {
    const std::int64_t part = i * (i - 1) / 2;
    for (std::int64_t n = part; n <= n_max; ++n) {
      best[n] = std::min(best[n], best[n - part] + i);
    }
  }
  return best;
}

/// Points (m, n) of the monoid generated by (i, C(i,2)), i >= 1, inside the
/// box [0, m_max) x [0, n_max), by breadth-first closure from (0, 0).
inline std::set<std::pair<std::int64_t, std::int64_t>> t_grid(std::int64_t m_max, std::int64_t n_max) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen{{0, 0}};
  std::deque<std::pair<std::int64_t, std::int64_t>> queue{{0, 0}};
  while (!queue.empty()) {
    auto [m, n] = queue.front();
    queue.pop_front();
    for (std::int64_t i = 1; m + i < m_max && n + i * (i - 1) / 2 < n_max; ++i) {
      std::pair<std::int64_t, std::int64_t> next{m + i, n + i * (i - 1) / 2};
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

/// Gaps of <a, a+b, 2a+3b, ...> found by plain reachability up to `limit`.
inline std::vector<std::int64_t> gaps(std::int64_t a, std::int64_t b, std::int64_t limit) {
  std::vector<char> in(static_cast<std::size_t>(limit + 1), 0);
  in[0] = 1;
  for (std::int64_t n = 1;; ++n) {
    const std::int64_t y = n * a + n * (n - 1) / 2 * b;
    if (y > limit) break;
    for (std::int64_t x = y; x <= limit; ++x) in[x] |= in[x - y];
  }
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x <= limit; ++x) {
    if (!in[x]) out.push_back(x);
  }
  return out;
}

inline std::vector<std::pair<std::int64_t, std::int64_t>> coprime_grid(std::int64_t a_lo, std::int64_t a_hi,
                                                                       std::int64_t b_lo, std::int64_t b_hi) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    for (std::int64_t b = b_lo; b <= b_hi; ++b) {
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace oracle
