#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qip/linear.hpp"

namespace qip {

/// Largest ambient dimension for exact V<->H conversion.
inline constexpr std::size_t kMaxExactDim = 8;

/// Default ceiling on candidate lattice points for a single enumeration.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Facet description of conv(vertices). Rows come out gcd-reduced and sorted;
/// a lower-dimensional hull gets one pair of opposite rows per missing
/// direction, in reduced echelon form.
HPolytope hull_facets(const VPolytope& v);

/// Extreme points of a bounded system, sorted. An empty system yields no
/// vertices. Throws UnboundedError when the solution set is unbounded.
VPolytope vertices(const HPolytope& h);

/// P = conv(points) + cone(rays) + span(lines) for any rational polyhedron.
/// `points` is empty exactly when P is empty.
struct Decomposition {
  std::vector<RatVector> points;
  std::vector<IntVector> rays;
  std::vector<IntVector> lines;

  bool bounded() const { return rays.empty() && lines.empty(); }
};
Decomposition decompose(const HPolytope& h);

/// Extreme points among a (possibly redundant) point list.
VPolytope extreme_points(const VPolytope& v);

/// Floor/ceil box around the vertices. nullopt when it holds no integer point
/// (empty polytope, or a slab thinner than one lattice step).
std::optional<Box> bounding_box(const HPolytope& h);

/// H ∩ Z^dim in lexicographic order. Throws BudgetExceeded when the bounding
/// box has more than `budget` lattice points.
std::vector<IntVector> integer_points(const HPolytope& h, std::uint64_t budget = kDefaultEnumerationBudget);

/// Integer points of `box` that satisfy every row of `h`, lexicographic.
std::vector<IntVector> integer_points_in_box(const HPolytope& h, const Box& box,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace qip

namespace qip {

/// Dimension of the affine hull of a point set (-1 for no points).
int affine_dimension(const std::vector<RatVector>& points);

/// Pulling triangulation of conv(v): simplices with affinely independent
/// vertices (k+1 of them for a k-dimensional hull), interiors disjoint,
/// union equal to the hull.
std::vector<VPolytope> triangulate(const VPolytope& v);

}  // namespace qip
