#include "qip/exact_lp.hpp"

#include <stdexcept>

namespace qip {

std::optional<RatVector> nonnegative_solution(const std::vector<RatVector>& M, const RatVector& c) {
  const std::size_t m = M.size();
  if (c.size() != m) throw std::invalid_argument("nonnegative_solution: rhs length mismatch");
  const std::size_t n = m == 0 ? 0 : M.front().size();
  for (const auto& row : M)
    if (row.size() != n) throw std::invalid_argument("nonnegative_solution: ragged matrix");

  // Columns: n structural, m artificial, then rhs.
  const std::size_t width = n + m + 1;
  std::vector<RatVector> t(m, RatVector(width, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = c[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -M[i][j] : M[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = flip ? -c[i] : c[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective (minimize the artificial sum).
  RatVector cost(width, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == width - 1) cost[j] -= t[i][j];

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // cannot happen for a bounded phase-one problem
    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[width - 1] != 0) return std::nullopt;
  RatVector lambda(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) lambda[basis[i]] = t[i][width - 1];
  return lambda;
}

bool in_convex_hull(const std::vector<RatVector>& points, const RatVector& p) {
  if (points.empty()) return false;
  const std::size_t d = p.size();
  std::vector<RatVector> M(d + 1, RatVector(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != d) throw std::invalid_argument("in_convex_hull: dimension mismatch");
    for (std::size_t i = 0; i < d; ++i) M[i][j] = points[j][i];
    M[d][j] = 1;
  }
  RatVector c = p;
  c.push_back(1);
  return nonnegative_solution(M, c).has_value();
}

}  // namespace qip
