#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qip/linear.hpp"

namespace qip {

/// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}. Throws on negative n.
Integer fibonacci(long n);

/// The d Fibonacci points phi_i = (F_{2i-1}, F_{2i-2}), the box J that holds
/// them, and the two polygons that cover the rest of J: R1 strictly above the
/// chain phi_1..phi_d and R2 strictly below it.
struct FibGadget {
  int d = 0;
  std::vector<IntVector> phi;
  Box J;
  HPolytope R1;
  HPolytope R2;
};

FibGadget build_gadget(int d);

enum class ChainSide { above, on, below };

/// Position of an integer point of J relative to the piecewise-linear chain.
ChainSide side_of_chain(const FibGadget& g, std::span<const Integer> y);

struct PropertyCheck {
  bool pass = true;
  std::string detail;
  std::optional<IntVector> counterexample;
};

struct GadgetReport {
  /// [0] increasing convex chain, [1] primitive segments and empty triangles
  /// (the Fibonacci identity), [2] the breakpoints are the only lattice
  /// points on the chain, [3] above == R1, [4] below == R2.
  std::array<PropertyCheck, 5> properties;
  std::size_t points_scanned = 0;
  /// Whether dropping the i = d row of R2 leaves R2 ∩ J unchanged.
  bool last_r2_row_redundant = false;

  bool all_pass() const;
};

/// Exhaustive check over J ∩ Z^2. Requires d <= 12.
GadgetReport check_properties(const FibGadget& g);

}  // namespace qip
