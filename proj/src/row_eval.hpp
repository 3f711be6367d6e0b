#pragma once

// 64-bit fast path for scanning integer boxes against a row system.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qip/linear.hpp"

namespace qip::detail {

struct FastRows {
  std::size_t dim = 0;
  std::size_t count = 0;
  std::vector<std::int64_t> a;  // row-major, count x dim
  std::vector<std::int64_t> b;

  const std::int64_t* row(std::size_t r) const { return a.data() + r * dim; }
};

/// nullopt unless every |a . x| + |b| over the box stays below 2^62.
std::optional<FastRows> compile_rows(std::span<const LinearInequality> rows, std::size_t dim, const Box& box);

/// Calls f(x, slack) for every lattice point of `box` in lexicographic order,
/// where slack[r] = b_r - a_r . x. Stops early when f returns false.
template <class F>
void scan_box(const FastRows& rows, const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi, F&& f) {
  const std::size_t n = lo.size();
  std::vector<std::int64_t> x = lo;
  std::vector<std::int64_t> slack(rows.b);
  for (std::size_t r = 0; r < rows.count; ++r)
    for (std::size_t i = 0; i < n; ++i) slack[r] -= rows.row(r)[i] * lo[i];
  while (true) {
    if (!f(static_cast<const std::vector<std::int64_t>&>(x), static_cast<const std::vector<std::int64_t>&>(slack)))
      return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t r = 0; r < rows.count; ++r) slack[r] -= rows.row(r)[i];
        break;
      }
      const std::int64_t span = hi[i] - lo[i];
      for (std::size_t r = 0; r < rows.count; ++r) slack[r] += rows.row(r)[i] * span;
      x[i] = lo[i];
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

inline bool all_nonnegative(const std::vector<std::int64_t>& slack) {
  for (auto s : slack)
    if (s < 0) return false;
  return true;
}

std::vector<std::int64_t> to_i64(std::span<const Integer> v);

}  // namespace qip::detail
