#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qip {

using Integer = mpz_class;
/// Exact rational; gmp keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

Integer gcd_of(const Integer& a, const Integer& b);
Integer lcm_of(const Integer& a, const Integer& b);

/// gcd of the absolute values of all entries; 0 for an all-zero span.
Integer content(std::span<const Integer> v);

/// Divides by the content in place (no-op for the zero vector).
void make_primitive(IntVector& v);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);

/// True when |v| fits comfortably in an int64 (with 2 bits of headroom).
bool fits_i64(const Integer& v);
std::int64_t to_i64(const Integer& v);

/// Decimal text; throws std::invalid_argument on malformed input.
Integer parse_integer(const std::string& text);
/// Accepts "p", "p/q".
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& v);
std::string to_string(const Rational& q);

/// Lexicographic comparison of equal-length vectors.
template <typename T>
int lex_compare(std::span<const T> a, std::span<const T> b) {
  const auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

}  // namespace qip
