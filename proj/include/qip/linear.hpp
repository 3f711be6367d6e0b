#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qip/number.hpp"

namespace qip {

/// coeffs . x <= rhs, or < when strict.
struct LinearInequality {
  IntVector coeffs;
  Integer rhs;
  bool strict = false;

  std::size_t dim() const { return coeffs.size(); }
  bool is_trivial() const;

  /// Divides coefficients and rhs by their common gcd.
  void normalize();

  bool satisfied_by(std::span<const Integer> x) const;
  bool satisfied_by(std::span<const Rational> x) const;

  friend bool operator==(const LinearInequality&, const LinearInequality&) = default;
};

/// Same shape with rational data, as written before denominators are cleared.
struct RationalInequality {
  RatVector coeffs;
  Rational rhs;
  bool strict = false;
};

/// Multiplies through by the least common denominator. Keeps the strict flag.
LinearInequality clear_denominators(const RationalInequality& ineq);

/// Closed integer inequality with the same integer solutions as a strict one:
/// clears denominators, then rewrites a < b as a <= b - 1.
LinearInequality sharpen_strict(const RationalInequality& ineq);
LinearInequality sharpen_strict(const LinearInequality& ineq);

/// Per-coordinate closed integer intervals.
struct Box {
  IntVector lo;
  IntVector hi;

  Box() = default;
  Box(IntVector lo_, IntVector hi_);

  std::size_t dim() const { return lo.size(); }
  /// Number of integer points.
  Integer volume() const;
  bool contains(std::span<const Integer> x) const;

  friend bool operator==(const Box&, const Box&) = default;
};

/// Product of two boxes, coordinates of `a` first.
Box operator*(const Box& a, const Box& b);

struct HPolytope {
  std::size_t dim = 0;
  std::vector<LinearInequality> rows;

  HPolytope() = default;
  HPolytope(std::size_t dim_, std::vector<LinearInequality> rows_);

  static HPolytope from_box(const Box& box);

  bool contains(std::span<const Integer> x) const;
  bool contains(std::span<const Rational> x) const;

  void add_row(IntVector coeffs, Integer rhs);
  /// gcd-reduce every row, drop trivially true rows and duplicates, sort by (coeffs, rhs).
  void canonicalize();

  friend bool operator==(const HPolytope&, const HPolytope&) = default;
};

/// Rows of `a` and `b` together; both must share a dimension.
HPolytope intersect(const HPolytope& a, const HPolytope& b);

struct VPolytope {
  std::size_t dim = 0;
  std::vector<RatVector> vertices;

  VPolytope() = default;
  VPolytope(std::size_t dim_, std::vector<RatVector> vertices_);

  /// Sort lexicographically and drop duplicates.
  void canonicalize();

  friend bool operator==(const VPolytope&, const VPolytope&) = default;
};

RatVector to_rational(std::span<const Integer> x);

std::string to_string(const LinearInequality& row);

}  // namespace qip
