#include "qip/linear.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qip {

namespace {

bool all_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool row_less(const LinearInequality& a, const LinearInequality& b) {
  const int c = lex_compare<Integer>(a.coeffs, b.coeffs);
  if (c != 0) return c < 0;
  return a.rhs < b.rhs;
}

}  // namespace

bool LinearInequality::is_trivial() const { return all_zero(coeffs); }

void LinearInequality::normalize() {
  Integer g = content(coeffs);
  if (g == 0) {
    // 0 <= rhs: keep only the sign information.
    if (strict)
      rhs = rhs > 0 ? 1 : -1;
    else
      rhs = rhs >= 0 ? 0 : -1;
    return;
  }
  g = gcd_of(g, rhs);
  if (g == 1) return;
  for (auto& c : coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(rhs.get_mpz_t(), rhs.get_mpz_t(), g.get_mpz_t());
}

bool LinearInequality::satisfied_by(std::span<const Integer> x) const {
  const Integer lhs = dot(coeffs, x);
  return strict ? lhs < rhs : lhs <= rhs;
}

bool LinearInequality::satisfied_by(std::span<const Rational> x) const {
  if (x.size() != coeffs.size()) throw std::invalid_argument("inequality/point dimension mismatch");
  Rational lhs = 0;
  for (std::size_t i = 0; i < x.size(); ++i) lhs += coeffs[i] * x[i];
  return strict ? lhs < rhs : lhs <= rhs;
}

LinearInequality clear_denominators(const RationalInequality& ineq) {
  Integer l = ineq.rhs.get_den();
  for (const auto& c : ineq.coeffs) l = lcm_of(l, c.get_den());
  LinearInequality out;
  out.coeffs.reserve(ineq.coeffs.size());
  for (const auto& c : ineq.coeffs) out.coeffs.emplace_back(c.get_num() * (l / c.get_den()));
  out.rhs = ineq.rhs.get_num() * (l / ineq.rhs.get_den());
  out.strict = ineq.strict;
  return out;
}

LinearInequality sharpen_strict(const LinearInequality& ineq) {
  LinearInequality out = ineq;
  if (out.strict) {
    out.rhs -= 1;
    out.strict = false;
  }
  return out;
}

LinearInequality sharpen_strict(const RationalInequality& ineq) {
  return sharpen_strict(clear_denominators(ineq));
}

Box::Box(IntVector lo_, IntVector hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size()) throw std::invalid_argument("box bounds of different length");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw std::invalid_argument("box with lo > hi in coordinate " + std::to_string(i));
}

Integer Box::volume() const {
  Integer v = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i] + 1;
  return v;
}

bool Box::contains(std::span<const Integer> x) const {
  if (x.size() != lo.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

Box operator*(const Box& a, const Box& b) {
  IntVector lo = a.lo, hi = a.hi;
  lo.insert(lo.end(), b.lo.begin(), b.lo.end());
  hi.insert(hi.end(), b.hi.begin(), b.hi.end());
  return Box(std::move(lo), std::move(hi));
}

HPolytope::HPolytope(std::size_t dim_, std::vector<LinearInequality> rows_) : dim(dim_), rows(std::move(rows_)) {
  for (const auto& r : rows) {
    if (r.dim() != dim) throw std::invalid_argument("row dimension differs from polytope dimension");
    if (r.strict) throw std::invalid_argument("HPolytope rows must be closed; sharpen strict rows first");
  }
}

HPolytope HPolytope::from_box(const Box& box) {
  HPolytope h;
  h.dim = box.dim();
  for (std::size_t i = 0; i < h.dim; ++i) {
    IntVector up(h.dim, 0), down(h.dim, 0);
    up[i] = 1;
    down[i] = -1;
    h.add_row(std::move(up), box.hi[i]);
    h.add_row(std::move(down), -box.lo[i]);
  }
  h.canonicalize();
  return h;
}

bool HPolytope::contains(std::span<const Integer> x) const {
  if (x.size() != dim) throw std::invalid_argument("point/polytope dimension mismatch");
  return std::all_of(rows.begin(), rows.end(), [&](const LinearInequality& r) { return r.satisfied_by(x); });
}

bool HPolytope::contains(std::span<const Rational> x) const {
  if (x.size() != dim) throw std::invalid_argument("point/polytope dimension mismatch");
  return std::all_of(rows.begin(), rows.end(), [&](const LinearInequality& r) { return r.satisfied_by(x); });
}

void HPolytope::add_row(IntVector coeffs, Integer rhs) {
  if (coeffs.size() != dim) throw std::invalid_argument("row dimension differs from polytope dimension");
  rows.push_back(LinearInequality{std::move(coeffs), std::move(rhs), false});
}

void HPolytope::canonicalize() {
  std::vector<LinearInequality> kept;
  kept.reserve(rows.size());
  for (auto r : rows) {
    r.normalize();
    if (r.is_trivial() && r.rhs >= 0) continue;
    kept.push_back(std::move(r));
  }
  std::sort(kept.begin(), kept.end(), row_less);
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  rows = std::move(kept);
}

HPolytope intersect(const HPolytope& a, const HPolytope& b) {
  if (a.dim != b.dim) throw std::invalid_argument("intersect: dimension mismatch");
  HPolytope out = a;
  out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
  out.canonicalize();
  return out;
}

VPolytope::VPolytope(std::size_t dim_, std::vector<RatVector> vertices_) : dim(dim_), vertices(std::move(vertices_)) {
  for (const auto& v : vertices)
    if (v.size() != dim) throw std::invalid_argument("vertex dimension differs from polytope dimension");
}

void VPolytope::canonicalize() {
  std::sort(vertices.begin(), vertices.end(),
            [](const RatVector& a, const RatVector& b) { return lex_compare<Rational>(a, b) < 0; });
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
}

RatVector to_rational(std::span<const Integer> x) {
  RatVector out;
  out.reserve(x.size());
  for (const auto& v : x) out.emplace_back(v);
  return out;
}

std::string to_string(const LinearInequality& row) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
    if (row.coeffs[i] == 0) continue;
    if (!first) os << (row.coeffs[i] > 0 ? " + " : " - ");
    else if (row.coeffs[i] < 0) os << "-";
    const Integer a = abs(row.coeffs[i]);
    if (a != 1) os << a.get_str() << "*";
    os << "x" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  os << (row.strict ? " < " : " <= ") << row.rhs.get_str();
  return os.str();
}

}  // namespace qip
