#include "qip/generate.hpp"

#include <limits>
#include <stdexcept>

namespace qip {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do v = engine_();
  while (v >= limit);
  return v % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::between: empty range");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

GsaInstance random_gsa(Rng& rng, std::size_t d, const Integer& N, long den, const Rational& eps) {
  if (d < 1 || d > 16) throw std::invalid_argument("random_gsa: d must be in [1, 16]");
  if (N < 1) throw std::invalid_argument("random_gsa: N must be positive");
  if (den < 1) throw std::invalid_argument("random_gsa: den must be positive");
  GsaInstance g;
  g.N = N;
  for (std::size_t i = 0; i < d; ++i) {
    const long q = rng.between(1, den);
    const long p = rng.between(0, q - 1);
    g.alpha.push_back(make_rational(p, q));
  }
  static const Rational choices[] = {Rational(1, 6), Rational(1, 4), Rational(1, 3)};
  g.eps = eps > 0 ? eps : choices[rng.below(3)];
  return g;
}

std::vector<Quantifier> alternating_prefix(int k, Quantifier last) {
  std::vector<Quantifier> p(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const bool same = (k - 1 - j) % 2 == 0;
    p[j] = same ? last : (last == Quantifier::exists ? Quantifier::forall : Quantifier::exists);
  }
  return p;
}

Q3SatInstance random_q3sat(Rng& rng, int k, int ell, std::size_t clauses) {
  if (k < 1 || ell < 1 || clauses < 1) throw std::invalid_argument("random_q3sat: k, ell, clauses must be positive");
  Q3SatInstance q;
  q.k = k;
  q.ell = ell;
  q.prefix = alternating_prefix(k);
  for (std::size_t c = 0; c < clauses; ++c) {
    Clause cl;
    for (auto& lit : cl) {
      lit.block = static_cast<int>(rng.between(1, k));
      lit.index = static_cast<int>(rng.between(1, ell));
      lit.positive = rng.coin();
    }
    q.clauses.push_back(cl);
  }
  q.validate();
  return q;
}

}  // namespace qip
