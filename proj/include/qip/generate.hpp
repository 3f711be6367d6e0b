#pragma once

#include <cstdint>
#include <random>

#include "qip/gsa.hpp"
#include "qip/sentence.hpp"

namespace qip {

/// Seeded source with portable bounded draws (std distributions differ
/// between standard libraries, so they are not used).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// alpha_i = p/q with 1 <= q <= den and 0 <= p < q; eps drawn from
/// {1/6, 1/4, 1/3} unless `eps` is positive.
GsaInstance random_gsa(Rng& rng, std::size_t d, const Integer& N, long den, const Rational& eps = 0);

/// Alternating prefix ending in exists, uniformly random literals.
Q3SatInstance random_q3sat(Rng& rng, int k, int ell, std::size_t clauses);

/// Alternating prefix of length k whose last quantifier is exists.
std::vector<Quantifier> alternating_prefix(int k, Quantifier last = Quantifier::exists);

}  // namespace qip
