#pragma once

#include <optional>
#include <vector>

#include "qip/number.hpp"

namespace qip {

/// Some lambda >= 0 with M lambda = c, or nullopt. Phase-one simplex over
/// exact rationals, Bland's rule.
std::optional<RatVector> nonnegative_solution(const std::vector<RatVector>& M, const RatVector& c);

/// Whether p is a convex combination of the given points.
bool in_convex_hull(const std::vector<RatVector>& points, const RatVector& p);

}  // namespace qip
