#pragma once

// Exact double description method for cones {z : H z >= 0} over the integers.

#include <vector>

#include "qip/number.hpp"

namespace qip::detail {

struct ConeGenerators {
  /// Basis of the lineality space (primitive integer vectors).
  std::vector<IntVector> lines;
  /// Extreme rays modulo the lineality space (primitive integer vectors).
  std::vector<IntVector> rays;
};

/// Minimal generators of {z in R^dim : h . z >= 0 for all h in constraints}.
ConeGenerators cone_generators(const std::vector<IntVector>& constraints, std::size_t dim);

}  // namespace qip::detail
