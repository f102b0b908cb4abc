#ifndef WALLCROSS_TESTS_ORACLES_HPP_
#define WALLCROSS_TESTS_ORACLES_HPP_

// Brute-force reference computations used only by the tests. None of these
// call into the library code paths they are compared against.

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

inline void partitions_rec(int n, int max_part, Parts& cur, std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

/// All partitions of n, lexicographically descending.
inline std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  Parts cur;
  partitions_rec(n, n, cur, out);
  return out;
}

/// Reduced fractions a/b with b <= n and 0 < a/b < num/den, ascending.
inline std::vector<std::pair<long, long>> farey(int n, long num = 1, long den = 1) {
  std::vector<std::pair<long, long>> out;
  for (long b = 1; b <= n; ++b)
    for (long a = 1; a < b; ++a)
      if (std::gcd(a, b) == 1 && a * den < num * b) out.push_back({a, b});
  std::sort(out.begin(), out.end(),
            [](auto& l, auto& r) { return l.first * r.second < r.first * l.second; });
  return out;
}

inline long euler_phi(long k) {
  long r = 0;
  for (long j = 1; j <= k; ++j)
    if (std::gcd(j, k) == 1) ++r;
  return r;
}

/// Conjugate by counting boxes column by column on the explicit box set.
inline Parts transpose(const Parts& p) {
  std::set<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    for (int c = 0; c < p[static_cast<std::size_t>(r)]; ++c) cells.insert({c, r});
  Parts out;
  for (auto [r, c] : cells) {
    if (static_cast<int>(out.size()) <= r) out.resize(static_cast<std::size_t>(r) + 1, 0);
    ++out[static_cast<std::size_t>(r)];
  }
  return out;
}

/// The n smallest cells of an (n x n) square under (f, row) with
/// f = a*col + (b-a)*row; shallow rows win ties.
inline Parts smallest_boxes(int n, long a, long b) {
  std::vector<std::tuple<long, int, int>> cells;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) cells.push_back({a * c + (b - a) * r, r, c});
  std::sort(cells.begin(), cells.end());
  Parts rows(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) ++rows[static_cast<std::size_t>(std::get<1>(cells[static_cast<std::size_t>(k)]) - 1)];
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return rows;
}

}  // namespace oracle

#endif  // WALLCROSS_TESTS_ORACLES_HPP_
