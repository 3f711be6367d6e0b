#pragma once

#include <cstdint>
#include <vector>

#include "qip/linear.hpp"

namespace qip {

/// Good simultaneous approximation: is there x in [1, N] with every x*alpha_i
/// within eps of an integer?
struct GsaInstance {
  std::vector<Rational> alpha;
  Integer N;
  Rational eps;

  std::size_t d() const { return alpha.size(); }
  /// eps >= 1/2 makes every x a solution.
  bool trivial() const { return eps * 2 >= 1; }
};

/// Validates (d >= 1, N >= 1, eps > 0) and shifts negative alpha_i into [0, 1).
GsaInstance normalize(GsaInstance inst);

/// Repeats alpha_1 until d >= min_d; the answer and the count are unchanged.
GsaInstance pad_dimension(const GsaInstance& inst, std::size_t min_d);

/// Distance from beta to the nearest integer.
Rational frac_dist(const Rational& beta);

/// max_i frac_dist(x * alpha_i).
Rational gsa_norm(const Integer& x, std::span<const Rational> alpha);

bool gsa_decide(const GsaInstance& inst, std::uint64_t budget = 100'000'000);
Integer gsa_count(const GsaInstance& inst, std::uint64_t budget = 100'000'000);

/// {1 <= x <= N, alpha_i x - eps <= w <= alpha_i x + eps} over (x, w); i is 1-based.
HPolytope band_polygon(const GsaInstance& inst, std::size_t i);

/// {1 <= x <= N, alpha_i x + eps < w < alpha_i x - eps + 1} with both strict
/// edges sharpened to closed integer rows; i is 1-based.
HPolytope gap_polygon(const GsaInstance& inst, std::size_t i);

/// The four corners (1, a+-eps), (N, aN+-eps) of the band, as (x, w).
std::vector<RatVector> band_vertices(const GsaInstance& inst, std::size_t i);

/// Integers w with (x, w) in the polygon, for a polygon over (x, w).
std::vector<Integer> w_slice(const HPolytope& polygon, const Integer& x);

}  // namespace qip
