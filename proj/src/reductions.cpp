#include "qip/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "qip/compress.hpp"
#include "qip/errors.hpp"
#include "qip/polyhedra.hpp"

namespace qip {

namespace {

// (head, y, tail) as one rational point.
RatVector join(std::span<const Rational> head, std::span<const Integer> y, std::span<const Rational> tail) {
  RatVector p(head.begin(), head.end());
  for (const auto& c : y) p.emplace_back(c);
  p.insert(p.end(), tail.begin(), tail.end());
  return p;
}

// a row of a 2-D polygon over y placed into dimension n at offset `at`.
IntVector embed(const IntVector& coeffs, std::size_t n, std::size_t at) {
  IntVector out(n, 0);
  for (std::size_t c = 0; c < coeffs.size(); ++c) out[at + c] = coeffs[c];
  return out;
}

Integer ceil_T(const GsaInstance& inst) {
  Rational top = 0;
  for (const auto& a : inst.alpha) top = std::max(top, a);
  return ceil_of(1 + Rational(inst.N) * top);
}

GsaInstance prepared(const GsaInstance& inst, bool& padded) {
  GsaInstance g = normalize(inst);
  padded = g.d() < 2;
  return pad_dimension(g, 2);
}

}  // namespace

EaeReduction gsa_to_three_quantifiers(const GsaInstance& raw) {
  EaeReduction out;
  bool padded = false;
  out.instance = prepared(raw, padded);
  const GsaInstance& inst = out.instance;
  const std::size_t d = inst.d();
  out.gadget = build_gadget(static_cast<int>(d));
  const FibGadget& g = out.gadget;
  const Integer& N = inst.N;

  out.P.dim = 4;
  for (std::size_t i = 1; i <= d; ++i)
    for (const auto& v : band_vertices(inst, i))
      out.P.vertices.push_back(join({&v[0], 1}, g.phi[i - 1], {&v[1], 1}));
  out.P.canonicalize();

  auto lift_region = [&](const HPolytope& R) {
    HPolytope h;
    h.dim = 4;
    h.add_row({-1, 0, 0, 0}, 0);
    h.add_row({1, 0, 0, 0}, N);
    h.add_row({0, 0, 0, 1}, 0);
    h.add_row({0, 0, 0, -1}, 0);
    for (const auto& r : R.rows) h.add_row(embed(r.coeffs, 4, 1), r.rhs);
    h.canonicalize();
    return h;
  };
  auto lift_vertices = [&](const HPolytope& R) {
    VPolytope v;
    v.dim = 4;
    for (const auto& y : vertices(R).vertices)
      for (const Integer& x : {Integer(0), N}) {
        RatVector p{Rational(x)};
        p.insert(p.end(), y.begin(), y.end());
        p.emplace_back(0);
        v.vertices.push_back(std::move(p));
      }
    v.canonicalize();
    return v;
  };
  out.R1_lift = lift_region(g.R1);
  out.R2_lift = lift_region(g.R2);

  CompressedVertices cv = compress_union_vertices({lift_vertices(g.R1), lift_vertices(g.R2), out.P});
  out.tags = cv.tags;
  out.sentence.blocks = {QuantBlock::over(Quantifier::exists, Box({1}, {N})), QuantBlock::over(Quantifier::forall, g.J),
                         QuantBlock::unbounded(3)};
  out.sentence.constraint = hull_facets(cv.lifted);
  out.sentence.validate();

  out.provenance.reduction = "gsa-eae";
  out.provenance.add("d", std::to_string(d));
  out.provenance.add("padded", padded ? "true" : "false");
  out.provenance.add("N", to_string(N));
  out.provenance.add("eps", to_string(inst.eps));
  out.provenance.add("ell", std::to_string(cv.width));
  out.provenance.add("J", "[" + to_string(g.J.lo[0]) + "," + to_string(g.J.hi[0]) + "]x[" + to_string(g.J.lo[1]) +
                              "," + to_string(g.J.hi[1]) + "]");
  return out;
}

HPolytope literal_polytope(int k, int ell, const Literal& lit) {
  if (k < 1 || ell < 1) throw std::invalid_argument("literal_polytope: k and ell must be positive");
  if (lit.block < 1 || lit.block > k || lit.index < 1 || lit.index > ell)
    throw std::invalid_argument("literal_polytope: literal out of range");
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  const std::size_t xj = static_cast<std::size_t>(lit.block) - 1;
  const std::size_t w = n - 1;
  const Integer top = (Integer(1) << ell) - 1;

  HPolytope h;
  h.dim = n;
  for (std::size_t c = 0; c < n; ++c) {
    h.add_row(embed({-1}, n, c), 0);
    h.add_row(embed({1}, n, c), top);
  }
  const Rational scale = make_rational(1, Integer(1) << (lit.index - 1));
  // positive: x/2^(s-1) - 1 < 2w + 1 <= x/2^(s-1); negative: same window for 2w
  const Rational shift = lit.positive ? 2 : 1;
  RationalInequality low(RatVector(n, Rational(0)), shift, true);
  low.coeffs[xj] = scale;
  low.coeffs[w] = -2;
  RationalInequality high(RatVector(n, Rational(0)), lit.positive ? Rational(-1) : Rational(0), false);
  high.coeffs[xj] = -scale;
  high.coeffs[w] = 2;
  h.rows.push_back(sharpen_strict(low));
  h.rows.push_back(clear_denominators(high));
  h.canonicalize();
  return h;
}

QsatReduction q3sat_to_sentence(const Q3SatInstance& inst) {
  inst.validate();
  QsatReduction out;
  std::vector<Clause> clauses = inst.clauses;
  if (clauses.size() == 1) clauses.push_back(clauses.front());
  out.clauses_used = clauses.size();
  const std::size_t k = static_cast<std::size_t>(inst.k);
  const std::size_t n = k + 5;  // (x, y1, y2, w, v1, v2)
  out.gadget = build_gadget(static_cast<int>(clauses.size()));
  const FibGadget& g = out.gadget;
  const Integer top = (Integer(1) << inst.ell) - 1;

  VPolytope G;
  G.dim = n;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    std::vector<VPolytope> lits;
    for (const auto& lit : clauses[i]) lits.push_back(vertices(literal_polytope(inst.k, inst.ell, lit)));
    const CompressedVertices Gi = compress_union_vertices(lits);
    for (const auto& v : Gi.lifted.vertices)
      G.vertices.push_back(join({v.data(), k}, g.phi[i], {v.data() + k, v.size() - k}));
  }
  G.canonicalize();

  auto lift_region = [&](const HPolytope& R) {
    VPolytope out_v;
    out_v.dim = n;
    const auto ys = vertices(R).vertices;
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
      RatVector x(k);
      for (std::size_t j = 0; j < k; ++j) x[j] = (mask >> j) & 1 ? Rational(top) : Rational(0);
      for (const auto& y : ys) {
        RatVector p = x;
        p.insert(p.end(), y.begin(), y.end());
        p.resize(n, Rational(0));
        out_v.vertices.push_back(std::move(p));
      }
    }
    out_v.canonicalize();
    return out_v;
  };

  CompressedVertices cv = compress_union_vertices({lift_region(g.R1), lift_region(g.R2), G});
  const std::size_t dim = cv.lifted.dim;

  IntVector lo, hi;
  for (std::size_t c = k + 2; c < dim; ++c) {
    Rational mn = cv.lifted.vertices.front()[c], mx = mn;
    for (const auto& v : cv.lifted.vertices) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    lo.push_back(floor_of(mn));
    hi.push_back(ceil_of(mx));
  }

  for (std::size_t j = 0; j < k; ++j) out.sentence.blocks.push_back(QuantBlock::over(inst.prefix[j], Box({0}, {top})));
  out.sentence.blocks.push_back(QuantBlock::over(Quantifier::forall, g.J));
  out.sentence.blocks.push_back(QuantBlock::over(Quantifier::exists, Box(lo, hi)));
  if (dim <= kMaxExactDim)
    out.sentence.constraint = hull_facets(cv.lifted);
  else
    out.sentence.constraint = cv.lifted;
  out.sentence.validate();

  out.provenance.reduction = "q3sat";
  out.provenance.add("k", std::to_string(inst.k));
  out.provenance.add("ell", std::to_string(inst.ell));
  out.provenance.add("clauses", std::to_string(inst.clauses.size()));
  out.provenance.add("d", std::to_string(clauses.size()));
  out.provenance.add("padded", clauses.size() != inst.clauses.size() ? "true" : "false");
  out.provenance.add("form", dim <= kMaxExactDim ? "facets" : "vertices");
  return out;
}

TwoQuantReduction gsa_to_two_quantifiers(const GsaInstance& raw) {
  TwoQuantReduction out;
  bool padded = false;
  out.gsa = prepared(raw, padded);
  const GsaInstance& inst = out.gsa;
  const std::size_t d = inst.d();
  out.gadget = build_gadget(static_cast<int>(d));
  const FibGadget& g = out.gadget;
  const Integer& N = inst.N;
  out.T = ceil_T(inst);
  const Rational T(out.T);
  const Rational one(1), Nq(N);

  VPolytope L, M;
  L.dim = M.dim = 4;
  for (std::size_t i = 1; i <= d; ++i) {
    const Rational& a = inst.alpha[i - 1];
    const auto& y = g.phi[i - 1];
    const Rational lo_l = -1;
    for (const auto& [x, top] : {std::pair{one, Rational(a + inst.eps - 1)}, std::pair{Nq, Rational(a * Nq + inst.eps - 1)}}) {
      L.vertices.push_back(join({&x, 1}, y, {&lo_l, 1}));
      L.vertices.push_back(join({&x, 1}, y, {&top, 1}));
    }
    for (const auto& [x, bottom] : {std::pair{one, Rational(a - inst.eps)}, std::pair{Nq, Rational(a * Nq - inst.eps)}}) {
      M.vertices.push_back(join({&x, 1}, y, {&bottom, 1}));
      M.vertices.push_back(join({&x, 1}, y, {&T, 1}));
    }
  }
  L.canonicalize();
  M.canonicalize();

  HPolytope U1;
  U1.dim = 4;
  U1.add_row({-1, 0, 0, 0}, -1);
  U1.add_row({1, 0, 0, 0}, N);
  U1.add_row({0, 0, 0, -1}, 1);
  U1.add_row({0, 0, 0, 1}, out.T);
  for (const auto& r : g.R1.rows) U1.add_row(embed(r.coeffs, 4, 1), r.rhs);
  U1.canonicalize();

  VPolytope U2v = L;
  for (const auto& y : vertices(g.R2).vertices)
    for (const Rational& x : {one, Nq})
      for (const Rational& w : {Rational(-1), T}) {
        RatVector p{x};
        p.insert(p.end(), y.begin(), y.end());
        p.push_back(w);
        U2v.vertices.push_back(std::move(p));
      }
  U2v.canonicalize();

  out.instance.parts = {U1, hull_facets(U2v), hull_facets(M)};
  out.instance.I = Box({1}, {N});
  out.instance.K = Box({g.J.lo[0], g.J.lo[1], -1}, {g.J.hi[0], g.J.hi[1], out.T});

  out.provenance.reduction = "gsa-two-quant";
  out.provenance.add("d", std::to_string(d));
  out.provenance.add("padded", padded ? "true" : "false");
  out.provenance.add("N", to_string(N));
  out.provenance.add("eps", to_string(inst.eps));
  out.provenance.add("T", to_string(out.T));
  return out;
}

std::vector<LinearSystem> dbs_split(const std::vector<IntVector>& A, const IntVector& b, std::size_t d2) {
  if (A.size() != b.size()) throw std::invalid_argument("dbs_split: A and b differ in length");
  if (d2 < 1 || d2 > 20) throw std::invalid_argument("dbs_split: d2 out of range");
  const std::size_t m = A.size();
  const std::size_t r = std::size_t(1) << d2;
  if (m < r)
    throw std::invalid_argument("dbs_split: need at least " + std::to_string(r) + " rows, got " + std::to_string(m));
  for (const auto& row : A)
    if (row.size() < d2) throw std::invalid_argument("dbs_split: rows narrower than d2");

  std::vector<LinearSystem> out;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    LinearSystem s;
    s.rows = idx;
    for (auto i : idx) {
      s.A.push_back(A[i]);
      s.b.push_back(b[i]);
    }
    out.push_back(std::move(s));
    std::size_t pos = r;
    while (pos > 0 && idx[pos - 1] == m - r + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace qip
