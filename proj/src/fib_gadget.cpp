#include "qip/fib_gadget.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace qip {

namespace {

using i64 = std::int64_t;

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

struct Pt {
  i64 x, y;
};

i64 cross(Pt o, Pt a, Pt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// Lattice points in the closed triangle abc, counted column by column.
i64 lattice_points_in_triangle(Pt a, Pt b, Pt c) {
  const Pt v[3] = {a, b, c};
  i64 xmin = std::min({a.x, b.x, c.x}), xmax = std::max({a.x, b.x, c.x});
  i64 total = 0;
  for (i64 x = xmin; x <= xmax; ++x) {
    i64 lo = INT64_MIN / 4, hi = INT64_MAX / 4;
    bool empty = false;
    for (int e = 0; e < 3 && !empty; ++e) {
      const Pt p = v[e], q = v[(e + 1) % 3], r = v[(e + 2) % 3];
      const i64 orient = cross(p, q, r);
      // sign(orient) * [(q.x-p.x)(y-p.y) - (q.y-p.y)(x-p.x)] >= 0
      const i64 s = orient > 0 ? 1 : -1;
      const i64 cy = s * (q.x - p.x);
      const i64 rest = -s * (q.y - p.y) * (x - p.x);
      // cy*(y - p.y) + rest >= 0
      if (cy == 0) {
        if (rest < 0) empty = true;
      } else if (cy > 0) {
        lo = std::max(lo, p.y + ceil_div(-rest, cy));
      } else {
        hi = std::min(hi, p.y + floor_div(rest, -cy));
      }
    }
    if (!empty && lo <= hi) total += hi - lo + 1;
  }
  return total;
}

}  // namespace

Integer fibonacci(long n) {
  if (n < 0) throw std::invalid_argument("fibonacci: negative index");
  Integer a = 0, b = 1;
  for (long i = 0; i < n; ++i) {
    Integer c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

FibGadget build_gadget(int d) {
  if (d < 2) throw std::invalid_argument("build_gadget: need d >= 2, got " + std::to_string(d));
  FibGadget g;
  g.d = d;
  std::vector<Integer> F(2 * d + 1);
  for (int i = 0; i <= 2 * d; ++i) F[i] = fibonacci(i);
  for (int i = 1; i <= d; ++i) g.phi.push_back({F[2 * i - 1], F[2 * i - 2]});
  g.J = Box({1, 0}, {F[2 * d - 1], F[2 * d - 2]});

  g.R1.dim = 2;
  g.R1.add_row({-1, 0}, -1);                           // y1 >= 1
  g.R1.add_row({0, 1}, F[2 * d - 2]);                  // y2 <= F_{2d-2}
  g.R1.add_row({F[2 * d - 2], -F[2 * d - 1]}, -1);     // y2 F_{2d-1} - y1 F_{2d-2} >= 1
  g.R1.canonicalize();

  g.R2.dim = 2;
  g.R2.add_row({1, 0}, F[2 * d - 1]);  // y1 <= F_{2d-1}
  g.R2.add_row({0, -1}, 0);            // y2 >= 0
  for (int i = 1; i <= d; ++i) g.R2.add_row({-F[2 * i - 1], F[2 * i]}, -2);
  g.R2.canonicalize();
  return g;
}

ChainSide side_of_chain(const FibGadget& g, std::span<const Integer> y) {
  const Integer& y1 = y[0];
  std::size_t seg = 0;
  while (seg + 2 < g.phi.size() && y1 > g.phi[seg + 1][0]) ++seg;
  const IntVector& p = g.phi[seg];
  const IntVector& q = g.phi[seg + 1];
  const Integer c = (q[0] - p[0]) * (y[1] - p[1]) - (q[1] - p[1]) * (y1 - p[0]);
  if (c > 0) return ChainSide::above;
  if (c < 0) return ChainSide::below;
  return ChainSide::on;
}

bool GadgetReport::all_pass() const {
  for (const auto& p : properties)
    if (!p.pass) return false;
  return true;
}

GadgetReport check_properties(const FibGadget& g) {
  if (g.d > 12) throw std::invalid_argument("check_properties: d <= 12 keeps the scan of J small");
  GadgetReport rep;
  const int d = g.d;
  std::vector<Pt> phi;
  for (const auto& p : g.phi) phi.push_back({p[0].get_si(), p[1].get_si()});

  auto fail = [](PropertyCheck& c, std::string why, std::optional<IntVector> where = std::nullopt) {
    if (!c.pass) return;
    c.pass = false;
    c.detail = std::move(why);
    c.counterexample = std::move(where);
  };

  // increasing, convex chain
  {
    auto& c = rep.properties[0];
    for (int i = 0; i + 1 < d; ++i)
      if (!(phi[i + 1].x > phi[i].x && phi[i + 1].y > phi[i].y))
        fail(c, "chain not strictly increasing at i=" + std::to_string(i + 1), g.phi[i + 1]);
    for (int i = 0; i + 2 < d; ++i)
      if (cross(phi[i], phi[i + 1], phi[i + 2]) >= 0)
        fail(c, "turn at phi_" + std::to_string(i + 2) + " is not strictly clockwise", g.phi[i + 1]);
  }
  // primitive steps, unimodular consecutive triples
  {
    auto& c = rep.properties[1];
    for (int i = 0; i + 1 < d; ++i) {
      const i64 dx = phi[i + 1].x - phi[i].x, dy = phi[i + 1].y - phi[i].y;
      if (std::gcd(dx, dy) != 1) fail(c, "segment " + std::to_string(i + 1) + " has interior lattice points", g.phi[i]);
      const i64 pts = lattice_points_in_triangle({0, 0}, phi[i], phi[i + 1]);
      if (pts != 3)
        fail(c, "triangle (0, phi_" + std::to_string(i + 1) + ", phi_" + std::to_string(i + 2) + ") holds " +
                    std::to_string(pts) + " lattice points",
             g.phi[i]);
    }
    for (int i = 0; i <= 2 * d - 4; ++i) {
      const Integer lhs = fibonacci(i) * fibonacci(i + 3) - fibonacci(i + 1) * fibonacci(i + 2);
      const Integer rhs = (i % 2 == 1) ? 1 : -1;  // (-1)^(i-1)
      if (lhs != rhs) fail(c, "F_i F_{i+3} - F_{i+1} F_{i+2} != (-1)^(i-1) at i=" + std::to_string(i));
    }
  }
  // off-chain points, above and below, by a full scan of J.
  {
    HPolytope r2_short = g.R2;
    {
      // Same system without the i = d row.
      HPolytope tmp;
      tmp.dim = 2;
      const Integer fa = fibonacci(2 * d - 1), fb = fibonacci(2 * d);
      for (const auto& r : g.R2.rows) {
        IntVector dropped{-fa, fb};
        LinearInequality cand{dropped, -2, false};
        cand.normalize();
        if (r == cand) continue;
        tmp.rows.push_back(r);
      }
      r2_short = tmp;
    }
    rep.last_r2_row_redundant = true;
    auto& off_chain = rep.properties[2];
    auto& above = rep.properties[3];
    auto& below = rep.properties[4];
    const i64 x_hi = g.J.hi[0].get_si(), y_hi = g.J.hi[1].get_si();
    std::vector<i64> r1a, r1b, r1c, r2a, r2b, r2c, rsa, rsb, rsc;
    auto unpack = [](const HPolytope& h, std::vector<i64>& a, std::vector<i64>& b, std::vector<i64>& c) {
      for (const auto& r : h.rows) {
        a.push_back(r.coeffs[0].get_si());
        b.push_back(r.coeffs[1].get_si());
        c.push_back(r.rhs.get_si());
      }
    };
    unpack(g.R1, r1a, r1b, r1c);
    unpack(g.R2, r2a, r2b, r2c);
    unpack(r2_short, rsa, rsb, rsc);
    auto member = [](const std::vector<i64>& a, const std::vector<i64>& b, const std::vector<i64>& c, i64 x, i64 y) {
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] * x + b[k] * y > c[k]) return false;
      return true;
    };
    std::size_t seg = 0;
    for (i64 x = 1; x <= x_hi; ++x) {
      while (seg + 2 < phi.size() && x > phi[seg + 1].x) ++seg;
      const Pt p = phi[seg], q = phi[seg + 1];
      for (i64 y = 0; y <= y_hi; ++y) {
        ++rep.points_scanned;
        bool on_phi = false;
        for (const auto& f : phi)
          if (f.x == x && f.y == y) on_phi = true;
        const i64 cr = cross(p, q, {x, y});
        const bool in1 = member(r1a, r1b, r1c, x, y);
        const bool in2 = member(r2a, r2b, r2c, x, y);
        if (in2 != member(rsa, rsb, rsc, x, y)) rep.last_r2_row_redundant = false;
        if (on_phi) {
          if (in1) fail(above, "a Fibonacci point lies in R1", IntVector{x, y});
          if (in2) fail(below, "a Fibonacci point lies in R2", IntVector{x, y});
          continue;
        }
        if (cr == 0) fail(off_chain, "lattice point on the chain other than a Fibonacci point", IntVector{x, y});
        if ((cr > 0) != in1) fail(above, "strictly-above set differs from R1", IntVector{x, y});
        if ((cr < 0) != in2) fail(below, "strictly-below set differs from R2", IntVector{x, y});
      }
    }
  }
  return rep;
}

}  // namespace qip
