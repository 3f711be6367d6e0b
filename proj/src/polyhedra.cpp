#include "qip/polyhedra.hpp"

#include <algorithm>
#include <stdexcept>

#include "double_description.hpp"
#include "qip/errors.hpp"
#include "row_eval.hpp"

namespace qip {

namespace detail {

std::optional<FastRows> compile_rows(std::span<const LinearInequality> rows, std::size_t dim, const Box& box) {
  static const Integer limit = Integer(1) << 62;
  if (box.dim() != dim) throw std::invalid_argument("compile_rows: box dimension mismatch");
  IntVector mag(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    mag[i] = std::max(abs(box.lo[i]), abs(box.hi[i]));
    if (!fits_i64(mag[i])) return std::nullopt;
  }
  FastRows out;
  out.dim = dim;
  out.count = rows.size();
  out.a.reserve(rows.size() * dim);
  for (const auto& r : rows) {
    Integer bound = abs(r.rhs);
    for (std::size_t i = 0; i < dim; ++i) bound += abs(r.coeffs[i]) * mag[i];
    if (bound >= limit) return std::nullopt;
    for (std::size_t i = 0; i < dim; ++i) out.a.push_back(r.coeffs[i].get_si());
    out.b.push_back(r.rhs.get_si());
  }
  return out;
}

std::vector<std::int64_t> to_i64(std::span<const Integer> v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(qip::to_i64(x));
  return out;
}

}  // namespace detail

namespace {

void check_dim(std::size_t dim, const char* what) {
  if (dim == 0) throw std::invalid_argument(std::string(what) + ": dimension must be positive");
  if (dim > kMaxExactDim)
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(dim) + " exceeds the exact-conversion cap of " +
                         std::to_string(kMaxExactDim));
}

// Homogenized point (q, q*v) with q the common denominator of v.
IntVector lift_point(const RatVector& v) {
  Integer q = 1;
  for (const auto& c : v) q = lcm_of(q, c.get_den());
  IntVector h;
  h.reserve(v.size() + 1);
  h.push_back(q);
  for (const auto& c : v) h.push_back(c.get_num() * (q / c.get_den()));
  return h;
}

// Fraction-free Gauss-Jordan on the coordinates 1..n of each vector;
// returns pivot columns (positive pivot entries).
std::vector<std::size_t> reduce_equations(std::vector<IntVector>& eqs) {
  std::vector<std::size_t> pivots;
  if (eqs.empty()) return pivots;
  const std::size_t width = eqs.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 1; c < width && rank < eqs.size(); ++c) {
    std::size_t sel = rank;
    while (sel < eqs.size() && eqs[sel][c] == 0) ++sel;
    if (sel == eqs.size()) continue;
    std::swap(eqs[rank], eqs[sel]);
    if (eqs[rank][c] < 0)
      for (auto& x : eqs[rank]) x = -x;
    make_primitive(eqs[rank]);
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (i == rank || eqs[i][c] == 0) continue;
      const Integer p = eqs[rank][c], s = eqs[i][c];
      for (std::size_t j = 0; j < width; ++j) {
        eqs[i][j] *= p;
        mpz_submul(eqs[i][j].get_mpz_t(), s.get_mpz_t(), eqs[rank][j].get_mpz_t());
      }
      make_primitive(eqs[i]);
    }
    pivots.push_back(c);
    ++rank;
  }
  eqs.resize(rank);
  return pivots;
}

}  // namespace

HPolytope hull_facets(const VPolytope& vin) {
  check_dim(vin.dim, "hull_facets");
  if (vin.vertices.empty()) throw std::invalid_argument("hull_facets: empty vertex list");
  VPolytope v = vin;
  v.canonicalize();
  const std::size_t n = v.dim;

  std::vector<IntVector> cons;
  cons.reserve(v.vertices.size());
  for (const auto& p : v.vertices) cons.push_back(lift_point(p));
  auto gens = detail::cone_generators(cons, n + 1);

  std::vector<IntVector> eqs = std::move(gens.lines);
  const auto pivots = reduce_equations(eqs);

  HPolytope out;
  out.dim = n;
  for (const auto& e : eqs) {
    IntVector a(e.begin() + 1, e.end());
    IntVector neg_a(n);
    for (std::size_t i = 0; i < n; ++i) neg_a[i] = -a[i];
    // e0 + a.x = 0
    out.add_row(std::move(a), -e[0]);
    out.add_row(std::move(neg_a), e[0]);
  }
  for (auto& r : gens.rays) {
    for (std::size_t k = 0; k < eqs.size(); ++k) {
      const std::size_t c = pivots[k];
      if (r[c] == 0) continue;
      const Integer p = eqs[k][c], s = r[c];
      for (std::size_t j = 0; j <= n; ++j) {
        r[j] *= p;
        mpz_submul(r[j].get_mpz_t(), s.get_mpz_t(), eqs[k][j].get_mpz_t());
      }
    }
    make_primitive(r);
    IntVector a(n);
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = -r[i + 1];
      nonzero = nonzero || a[i] != 0;
    }
    // r0 + r.x >= 0  <=>  -r.x <= r0
    if (nonzero) out.add_row(std::move(a), r[0]);
  }
  out.canonicalize();
  return out;
}

Decomposition decompose(const HPolytope& h) {
  check_dim(h.dim, "decompose");
  const std::size_t n = h.dim;
  std::vector<IntVector> cons;
  cons.reserve(h.rows.size() + 1);
  IntVector t(n + 1, 0);
  t[0] = 1;
  cons.push_back(std::move(t));
  for (const auto& r : h.rows) {
    IntVector c;
    c.reserve(n + 1);
    c.push_back(r.rhs);
    for (const auto& a : r.coeffs) c.push_back(-a);
    cons.push_back(std::move(c));
  }
  auto gens = detail::cone_generators(cons, n + 1);
  Decomposition out;
  for (auto& r : gens.rays) {
    if (r[0] > 0) {
      RatVector p;
      p.reserve(n);
      for (std::size_t i = 1; i <= n; ++i) p.push_back(make_rational(r[i], r[0]));
      out.points.push_back(std::move(p));
    } else {
      out.rays.emplace_back(r.begin() + 1, r.end());
    }
  }
  for (auto& l : gens.lines) out.lines.emplace_back(l.begin() + 1, l.end());
  std::sort(out.points.begin(), out.points.end(),
            [](const RatVector& a, const RatVector& b) { return lex_compare<Rational>(a, b) < 0; });
  return out;
}

VPolytope vertices(const HPolytope& h) {
  Decomposition d = decompose(h);
  if (d.points.empty()) return VPolytope(h.dim, {});
  if (!d.bounded()) throw UnboundedError("vertices: the system is unbounded");
  VPolytope out(h.dim, std::move(d.points));
  out.canonicalize();
  return out;
}

VPolytope extreme_points(const VPolytope& v) {
  if (v.vertices.empty()) return v;
  return vertices(hull_facets(v));
}

std::optional<Box> bounding_box(const HPolytope& h) {
  const VPolytope v = vertices(h);
  if (v.vertices.empty()) return std::nullopt;
  IntVector lo(h.dim), hi(h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) {
    Rational mn = v.vertices.front()[i], mx = mn;
    for (const auto& p : v.vertices) {
      if (p[i] < mn) mn = p[i];
      if (p[i] > mx) mx = p[i];
    }
    lo[i] = ceil_of(mn);
    hi[i] = floor_of(mx);
    if (lo[i] > hi[i]) return std::nullopt;
  }
  return Box(std::move(lo), std::move(hi));
}

std::vector<IntVector> integer_points_in_box(const HPolytope& h, const Box& box, std::uint64_t budget) {
  if (box.dim() != h.dim) throw std::invalid_argument("integer_points_in_box: dimension mismatch");
  const Integer vol = box.volume();
  if (vol > Integer(std::to_string(budget))) {
    std::string where = "box";
    for (std::size_t i = 0; i < box.dim(); ++i) where += " [" + box.lo[i].get_str() + "," + box.hi[i].get_str() + "]";
    throw BudgetExceeded("enumeration budget exceeded: " + vol.get_str() + " candidate points > " +
                             std::to_string(budget),
                         where);
  }
  std::vector<IntVector> out;
  if (auto fast = detail::compile_rows(h.rows, h.dim, box)) {
    const auto lo = detail::to_i64(box.lo), hi = detail::to_i64(box.hi);
    detail::scan_box(*fast, lo, hi, [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& slack) {
      if (detail::all_nonnegative(slack)) {
        IntVector p;
        p.reserve(x.size());
        for (auto c : x) p.emplace_back(static_cast<long>(c));
        out.push_back(std::move(p));
      }
      return true;
    });
    return out;
  }
  IntVector x = box.lo;
  const std::size_t n = h.dim;
  while (true) {
    if (h.contains(std::span<const Integer>(x))) out.push_back(x);
    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (x[i] < box.hi[i]) {
        ++x[i];
        done = false;
        break;
      }
      x[i] = box.lo[i];
    }
    if (done) break;
  }
  return out;
}

std::vector<IntVector> integer_points(const HPolytope& h, std::uint64_t budget) {
  const auto box = bounding_box(h);
  if (!box) return {};
  return integer_points_in_box(h, *box, budget);
}

}  // namespace qip

namespace qip {

int affine_dimension(const std::vector<RatVector>& points) {
  if (points.empty()) return -1;
  std::vector<RatVector> m;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector d(points[i].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = points[i][c] - points[0][c];
    m.push_back(std::move(d));
  }
  int rank = 0;
  const std::size_t n = points.front().size();
  for (std::size_t c = 0; c < n && rank < static_cast<int>(m.size()); ++c) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

void pull(const std::vector<RatVector>& pts, std::size_t dim, std::vector<VPolytope>& out) {
  const int k = affine_dimension(pts);
  if (static_cast<int>(pts.size()) == k + 1) {
    out.emplace_back(dim, pts);
    out.back().canonicalize();
    return;
  }
  const RatVector& apex = pts.front();
  const HPolytope h = hull_facets(VPolytope(dim, pts));
  for (const auto& row : h.rows) {
    std::vector<RatVector> face;
    bool apex_on = false;
    for (const auto& p : pts) {
      Rational lhs = 0;
      for (std::size_t c = 0; c < dim; ++c) lhs += row.coeffs[c] * p[c];
      if (lhs == row.rhs) {
        face.push_back(p);
        if (&p == &apex) apex_on = true;
      }
    }
    if (apex_on || face.size() == pts.size()) continue;
    std::vector<VPolytope> sub;
    pull(face, dim, sub);
    for (auto& s : sub) {
      s.vertices.push_back(apex);
      s.canonicalize();
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<VPolytope> triangulate(const VPolytope& v) {
  if (v.vertices.empty()) return {};
  VPolytope ext = extreme_points(v);
  std::vector<VPolytope> out;
  pull(ext.vertices, v.dim, out);
  return out;
}

}  // namespace qip
