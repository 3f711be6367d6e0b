#include "qip/gsa.hpp"

#include <stdexcept>

#include "qip/errors.hpp"

namespace qip {

namespace {

void check_index(const GsaInstance& inst, std::size_t i) {
  if (i < 1 || i > inst.d()) throw std::out_of_range("GSA coordinate index out of range: " + std::to_string(i));
}

void check_budget(const Integer& N, std::uint64_t budget) {
  if (N > Integer(std::to_string(budget)))
    throw BudgetExceeded("GSA enumeration over [1, " + N.get_str() + "] exceeds budget", "x in [1,N]");
}

HPolytope xw_polygon(const GsaInstance& inst, const RationalInequality& lower, const RationalInequality& upper) {
  HPolytope h;
  h.dim = 2;
  h.add_row({-1, 0}, -1);
  h.add_row({1, 0}, inst.N);
  for (const auto& r : {lower, upper}) {
    const LinearInequality row = r.strict ? sharpen_strict(r) : clear_denominators(r);
    h.rows.push_back(row);
  }
  h.canonicalize();
  return h;
}

}  // namespace

GsaInstance normalize(GsaInstance inst) {
  if (inst.alpha.empty()) throw std::invalid_argument("GSA instance needs at least one alpha");
  if (inst.N < 1) throw std::invalid_argument("GSA instance needs N >= 1");
  if (inst.eps <= 0) throw std::invalid_argument("GSA instance needs eps > 0");
  for (auto& a : inst.alpha)
    if (a < 0) a -= Rational(floor_of(a));
  return inst;
}

GsaInstance pad_dimension(const GsaInstance& inst, std::size_t min_d) {
  GsaInstance out = inst;
  while (out.alpha.size() < min_d) out.alpha.push_back(inst.alpha.front());
  return out;
}

Rational frac_dist(const Rational& beta) {
  const Rational down = beta - Rational(floor_of(beta));
  const Rational up = Rational(ceil_of(beta)) - beta;
  return down < up ? down : up;
}

Rational gsa_norm(const Integer& x, std::span<const Rational> alpha) {
  Rational best = 0;
  for (const auto& a : alpha) {
    Rational f = frac_dist(Rational(x) * a);
    if (f > best) best = f;
  }
  return best;
}

bool gsa_decide(const GsaInstance& inst, std::uint64_t budget) {
  check_budget(inst.N, budget);
  if (inst.trivial()) return inst.N >= 1;
  for (Integer x = 1; x <= inst.N; ++x)
    if (gsa_norm(x, inst.alpha) <= inst.eps) return true;
  return false;
}

Integer gsa_count(const GsaInstance& inst, std::uint64_t budget) {
  check_budget(inst.N, budget);
  if (inst.trivial()) return inst.N;
  Integer count = 0;
  for (Integer x = 1; x <= inst.N; ++x)
    if (gsa_norm(x, inst.alpha) <= inst.eps) ++count;
  return count;
}

HPolytope band_polygon(const GsaInstance& inst, std::size_t i) {
  check_index(inst, i);
  const Rational& a = inst.alpha[i - 1];
  // a x - eps <= w  <=>  a x - w <= eps
  RationalInequality lower{{a, Rational(-1)}, inst.eps, false};
  // w <= a x + eps  <=>  -a x + w <= eps
  RationalInequality upper{{Rational(-a), Rational(1)}, inst.eps, false};
  return xw_polygon(inst, lower, upper);
}

HPolytope gap_polygon(const GsaInstance& inst, std::size_t i) {
  check_index(inst, i);
  const Rational& a = inst.alpha[i - 1];
  // a x + eps < w  <=>  a x - w < -eps
  RationalInequality lower{{a, Rational(-1)}, Rational(-inst.eps), true};
  // w < a x - eps + 1  <=>  -a x + w < 1 - eps
  RationalInequality upper{{Rational(-a), Rational(1)}, Rational(1 - inst.eps), true};
  return xw_polygon(inst, lower, upper);
}

std::vector<RatVector> band_vertices(const GsaInstance& inst, std::size_t i) {
  check_index(inst, i);
  const Rational& a = inst.alpha[i - 1];
  const Rational N(inst.N);
  return {{Rational(1), a - inst.eps}, {Rational(1), a + inst.eps}, {N, a * N - inst.eps}, {N, a * N + inst.eps}};
}

std::vector<Integer> w_slice(const HPolytope& polygon, const Integer& x) {
  if (polygon.dim != 2) throw std::invalid_argument("w_slice expects a polygon over (x, w)");
  bool have_lo = false, have_hi = false;
  Integer lo, hi;
  for (const auto& r : polygon.rows) {
    const Integer rest = r.rhs - r.coeffs[0] * x;
    const Integer& c = r.coeffs[1];
    if (c == 0) {
      if (rest < 0) return {};
      continue;
    }
    const Rational bound = make_rational(rest, c);
    if (c > 0) {
      const Integer b = floor_of(bound);
      if (!have_hi || b < hi) hi = b;
      have_hi = true;
    } else {
      const Integer b = ceil_of(bound);
      if (!have_lo || b > lo) lo = b;
      have_lo = true;
    }
  }
  if (!have_lo || !have_hi) throw UnboundedError("w_slice: slice is unbounded");
  std::vector<Integer> out;
  for (Integer w = lo; w <= hi; ++w) out.push_back(w);
  return out;
}

}  // namespace qip
