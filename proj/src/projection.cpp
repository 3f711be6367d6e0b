#include <algorithm>
#include <stdexcept>

#include "qip/errors.hpp"
#include "qip/polyhedra.hpp"
#include "qip/reductions.hpp"

namespace qip {

namespace {

std::string join_list(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

bool contains_all(const HPolytope& h, const std::vector<RatVector>& pts) {
  return std::all_of(pts.begin(), pts.end(), [&](const RatVector& p) { return h.contains(std::span<const Rational>(p)); });
}

// Closed upper edge w <= u(x) of the sharpened gap, as (c_x, c_w, r) with c_w > 0.
struct Edge {
  Integer cx, cw, r;
  Rational at(const Integer& x) const { return make_rational(r - cx * x, cw); }
};

}  // namespace

ProjectionReduction count_gsa_to_projection(const GsaInstance& raw) {
  const GsaInstance inst = normalize(raw);
  const std::size_t d = inst.d();
  const Integer& N = inst.N;
  ProjectionReduction out;
  out.instance.N = N;

  Rational amax = 0;
  for (const auto& a : inst.alpha) amax = std::max(amax, a);
  out.T = ceil_of(1 + Rational(N) * amax);
  for (std::size_t i = 1; i <= d; ++i) out.m.push_back(4 * out.T * Integer(i) * Integer(2 * d - i));

  std::vector<RatVector> lower, upper;
  for (std::size_t i = 1; i <= d; ++i) {
    const Rational y(static_cast<long>(i));
    lower.push_back({Rational(N), y, Rational(0)});
    lower.push_back({Rational(1), y, Rational(0)});
  }
  upper = lower;

  if (inst.trivial()) {
    // Every x is a solution and every gap is empty: U = V.
    VPolytope v(3, lower);
    out.instance.U = out.instance.V = hull_facets(v);
  } else {
    for (std::size_t i = 1; i <= d; ++i) {
      const Rational& a = inst.alpha[i - 1];
      const Rational m(out.m[i - 1]);
      const Rational y(static_cast<long>(i));
      // lower edge w = a x + eps (unsharpened), upper edge sharpened from w < a x - eps + 1
      const LinearInequality up = sharpen_strict(RationalInequality{{Rational(-a), Rational(1)}, Rational(1 - inst.eps), true});
      const Edge e{up.coeffs[0], up.coeffs[1], up.rhs};
      for (const Integer& x : {Integer(1), N}) {
        lower.push_back({Rational(x), y, Rational(a * x + inst.eps + m)});
        upper.push_back({Rational(x), y, e.at(x) + m});
      }

      const HPolytope gap = gap_polygon(inst, i);
      HPolytope R;
      R.dim = 3;
      R.add_row({0, 1, 0}, Integer(i));
      R.add_row({0, -1, 0}, -Integer(i));
      for (const auto& r : gap.rows) R.add_row({r.coeffs[0], 0, r.coeffs[1]}, r.rhs + r.coeffs[1] * out.m[i - 1]);
      R.canonicalize();
      out.translated_gaps.push_back(std::move(R));
    }
    out.instance.U = hull_facets(VPolytope(3, lower));
    out.instance.V = hull_facets(VPolytope(3, upper));
  }
  if (!contains_all(out.instance.V, lower)) throw std::logic_error("count_gsa_to_projection: U is not inside V");

  out.provenance.reduction = "gsa-proj";
  out.provenance.add("d", std::to_string(d));
  out.provenance.add("N", to_string(N));
  out.provenance.add("eps", to_string(inst.eps));
  out.provenance.add("T", to_string(out.T));
  out.provenance.add("m", join_list(out.m));
  return out;
}

std::vector<VPolytope> complement_to_simplices(const HPolytope& P, const HPolytope& Q) {
  if (P.dim != Q.dim) throw std::invalid_argument("complement_to_simplices: dimension mismatch");
  VPolytope pv, qv;
  try {
    pv = vertices(P);
    qv = vertices(Q);
  } catch (const UnboundedError&) {
    throw std::invalid_argument("complement_to_simplices: both polytopes must be bounded");
  }
  if (!contains_all(Q, pv.vertices)) throw std::invalid_argument("complement_to_simplices: P is not inside Q");

  HPolytope p = P;
  p.canonicalize();
  std::vector<VPolytope> out;
  // Integer points of Q \ P split by the first row of P they violate.
  HPolytope region = Q;
  for (const auto& row : p.rows) {
    HPolytope piece = region;
    IntVector neg(row.coeffs.size());
    for (std::size_t c = 0; c < neg.size(); ++c) neg[c] = -row.coeffs[c];
    piece.add_row(neg, -row.rhs - 1);
    const VPolytope v = vertices(piece);
    if (!v.vertices.empty())
      for (auto& s : triangulate(v)) out.push_back(std::move(s));
    region.rows.push_back(row);
  }
  return out;
}

}  // namespace qip
