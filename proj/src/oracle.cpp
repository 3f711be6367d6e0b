#include "qip/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "qip/errors.hpp"
#include "qip/exact_lp.hpp"
#include "row_eval.hpp"

namespace qip {

namespace {

void check_budget(const std::vector<QuantBlock>& blocks, std::uint64_t budget) {
  const Integer limit(std::to_string(budget));
  Integer total = 1;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    total *= blocks[i].box->volume();
    if (total > limit)
      throw BudgetExceeded("sentence needs " + to_string(total) + " membership tests after block " + std::to_string(i + 1) +
                               ", budget is " + std::to_string(budget),
                           "block " + std::to_string(i + 1) + " (" + to_string(blocks[i].q) + ", " +
                               to_string(blocks[i].box->volume()) + " points)");
  }
}

Box concat(const std::vector<QuantBlock>& blocks) {
  Box out(blocks.front().box->lo, blocks.front().box->hi);
  for (std::size_t i = 1; i < blocks.size(); ++i) out = out * *blocks[i].box;
  return out;
}

// Matrix of a sentence: a disjunction of facet systems, or one vertex set.
struct Matrix {
  std::vector<HPolytope> parts;
  const VPolytope* vform = nullptr;
};

class Evaluator {
 public:
  Evaluator(const std::vector<QuantBlock>& blocks, const Matrix& m) : blocks_(blocks), m_(m) {
    std::size_t off = 0;
    for (const auto& b : blocks_) {
      offset_.push_back(off);
      off += b.dim;
    }
    dim_ = off;
    if (m_.vform && !m_.vform->vertices.empty()) {
      lo_v_.assign(dim_, Rational(0));
      hi_v_ = lo_v_;
      for (std::size_t c = 0; c < dim_; ++c) {
        lo_v_[c] = hi_v_[c] = m_.vform->vertices.front()[c];
        for (const auto& v : m_.vform->vertices) {
          lo_v_[c] = std::min(lo_v_[c], v[c]);
          hi_v_[c] = std::max(hi_v_[c], v[c]);
        }
      }
    }
    compile();
  }

  bool run() {
    point_.assign(dim_, 0);
    if (fast_) return fast_eval(0, fast_b_);
    big_point_.assign(dim_, Integer(0));
    return slow_eval(0);
  }

 private:
  void compile() {
    std::vector<LinearInequality> all;
    for (const auto& p : m_.parts) {
      part_end_.push_back(all.size() + p.rows.size());
      all.insert(all.end(), p.rows.begin(), p.rows.end());
    }
    const Box box = concat(blocks_);
    for (std::size_t c = 0; c < dim_; ++c)
      if (!fits_i64(box.lo[c]) || !fits_i64(box.hi[c])) return;
    auto full = detail::compile_rows(all, dim_, box);
    if (!full) return;
    fast_ = true;
    fast_b_ = full->b;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      detail::FastRows fr;
      fr.dim = blocks_[k].dim;
      fr.count = full->count;
      for (std::size_t r = 0; r < full->count; ++r)
        for (std::size_t c = 0; c < fr.dim; ++c) fr.a.push_back(full->row(r)[offset_[k] + c]);
      block_rows_.push_back(std::move(fr));
      lo_.push_back(detail::to_i64(blocks_[k].box->lo));
      hi_.push_back(detail::to_i64(blocks_[k].box->hi));
    }
  }

  bool leaf_fast(const std::vector<std::int64_t>& slack) const {
    if (m_.vform) return in_vform();
    std::size_t begin = 0;
    for (std::size_t end : part_end_) {
      bool ok = true;
      for (std::size_t r = begin; r < end && ok; ++r) ok = slack[r] >= 0;
      if (ok) return true;
      begin = end;
    }
    return false;
  }

  bool in_vform() const {
    if (m_.vform->vertices.empty()) return false;
    RatVector p(dim_);
    for (std::size_t c = 0; c < dim_; ++c) {
      p[c] = fast_ ? Rational(static_cast<long>(point_[c])) : Rational(big_point_[c]);
      if (p[c] < lo_v_[c] || p[c] > hi_v_[c]) return false;
    }
    return in_convex_hull(m_.vform->vertices, p);
  }

  bool fast_eval(std::size_t level, const std::vector<std::int64_t>& slack) {
    detail::FastRows fr = block_rows_[level];
    fr.b = slack;
    const bool exists = blocks_[level].q == Quantifier::exists;
    const bool last = level + 1 == blocks_.size();
    bool result = !exists;
    const std::size_t off = offset_[level];
    detail::scan_box(fr, lo_[level], hi_[level], [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& s) {
      std::copy(x.begin(), x.end(), point_.begin() + off);
      const bool v = last ? leaf_fast(s) : fast_eval(level + 1, s);
      if (v == exists) {
        result = exists;
        return false;
      }
      return true;
    });
    return result;
  }

  bool leaf_slow() const {
    if (m_.vform) return in_vform();
    for (const auto& p : m_.parts)
      if (p.contains(std::span<const Integer>(big_point_))) return true;
    return false;
  }

  bool slow_eval(std::size_t level) {
    const Box& box = *blocks_[level].box;
    const bool exists = blocks_[level].q == Quantifier::exists;
    const bool last = level + 1 == blocks_.size();
    const std::size_t off = offset_[level], n = blocks_[level].dim;
    for (std::size_t c = 0; c < n; ++c) big_point_[off + c] = box.lo[c];
    while (true) {
      const bool v = last ? leaf_slow() : slow_eval(level + 1);
      if (v == exists) return exists;
      std::size_t i = n;
      bool advanced = false;
      while (i > 0) {
        --i;
        if (big_point_[off + i] < box.hi[i]) {
          ++big_point_[off + i];
          advanced = true;
          break;
        }
        big_point_[off + i] = box.lo[i];
      }
      if (!advanced) return !exists;
    }
  }

  const std::vector<QuantBlock>& blocks_;
  const Matrix& m_;
  std::vector<std::size_t> offset_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> part_end_;
  bool fast_ = false;
  std::vector<std::int64_t> fast_b_;
  std::vector<detail::FastRows> block_rows_;
  std::vector<std::vector<std::int64_t>> lo_, hi_;
  std::vector<std::int64_t> point_;
  IntVector big_point_;
  RatVector lo_v_, hi_v_;
};

bool evaluate(const std::vector<QuantBlock>& blocks, const Matrix& m, std::uint64_t budget) {
  for (const auto& b : blocks)
    if (!b.box) throw std::invalid_argument("evaluate: unbounded block left in sentence");
  check_budget(blocks, budget);
  for (const auto& b : blocks)
    if (b.box->volume() == 0) return b.q == Quantifier::forall;
  Evaluator ev(blocks, m);
  return ev.run();
}

}  // namespace

Box innermost_box(const QuantSentence& s, const Integer& pad) {
  s.validate();
  const QuantBlock& last = s.blocks.back();
  const std::size_t n = region_dim(s.constraint);
  const std::size_t from = n - last.dim;
  IntVector lo(last.dim), hi(last.dim);
  if (last.box) {
    lo = last.box->lo;
    hi = last.box->hi;
  } else if (const auto* h = std::get_if<HPolytope>(&s.constraint)) {
    const auto bb = bounding_box(*h);
    // No integer point at all: any box gives the same (false) matrix.
    for (std::size_t c = 0; c < last.dim; ++c) {
      lo[c] = bb ? bb->lo[from + c] : Integer(0);
      hi[c] = bb ? bb->hi[from + c] : Integer(0);
    }
  } else {
    const auto& v = std::get<VPolytope>(s.constraint);
    if (v.vertices.empty()) {
      std::fill(lo.begin(), lo.end(), Integer(0));
      std::fill(hi.begin(), hi.end(), Integer(0));
    } else {
      for (std::size_t c = 0; c < last.dim; ++c) {
        Rational mn = v.vertices.front()[from + c], mx = mn;
        for (const auto& p : v.vertices) {
          mn = std::min(mn, p[from + c]);
          mx = std::max(mx, p[from + c]);
        }
        lo[c] = floor_of(mn);
        hi[c] = ceil_of(mx);
      }
    }
  }
  for (std::size_t c = 0; c < last.dim; ++c) {
    lo[c] -= pad;
    hi[c] += pad;
  }
  return Box(lo, hi);
}

QuantSentence bounded_form(const QuantSentence& s, const Integer& pad) {
  QuantSentence out = s;
  if (!out.blocks.back().box || pad != 0) out.blocks.back().box = innermost_box(s, pad);
  return out;
}

bool eval_sentence(const QuantSentence& s, std::uint64_t budget) {
  const QuantSentence b = bounded_form(s);
  Matrix m;
  if (const auto* h = std::get_if<HPolytope>(&b.constraint))
    m.parts.push_back(*h);
  else
    m.vform = &std::get<VPolytope>(b.constraint);
  return evaluate(b.blocks, m, budget);
}

bool eval_union_sentence(const UnionSentence& s, std::uint64_t budget) {
  s.validate();
  for (const auto& b : s.blocks)
    if (!b.box) throw std::invalid_argument("eval_union_sentence: every block needs a box");
  Matrix m;
  m.parts = s.parts;
  return evaluate(s.blocks, m, budget);
}

bool clauses_hold(const Q3SatInstance& inst, const std::vector<bool>& bits) {
  for (const auto& clause : inst.clauses) {
    bool sat = false;
    for (const auto& lit : clause)
      if (bits[static_cast<std::size_t>((lit.block - 1) * inst.ell + lit.index - 1)] == lit.positive) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

bool eval_q3sat(const Q3SatInstance& inst) {
  inst.validate();
  if (inst.k * inst.ell > 20) throw BudgetExceeded("eval_q3sat: k * ell exceeds 20", "prefix");
  const std::size_t ell = static_cast<std::size_t>(inst.ell);
  std::vector<bool> bits(static_cast<std::size_t>(inst.k) * ell);
  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    if (j == static_cast<std::size_t>(inst.k)) return clauses_hold(inst, bits);
    const bool exists = inst.prefix[j] == Quantifier::exists;
    for (std::uint32_t mask = 0; mask < (1u << ell); ++mask) {
      for (std::size_t s = 0; s < ell; ++s) bits[j * ell + s] = (mask >> s) & 1;
      if (rec(j + 1) == exists) return exists;
    }
    return !exists;
  };
  return rec(0);
}

Integer project_count(const HPolytope& Q, const HPolytope& P, std::uint64_t budget) {
  if (Q.dim != P.dim) throw std::invalid_argument("project_count: dimension mismatch");
  std::set<Integer> xs;
  for (const auto& p : integer_points(Q, budget))
    if (!xs.count(p[0]) && !P.contains(std::span<const Integer>(p))) xs.insert(p[0]);
  return Integer(static_cast<unsigned long>(xs.size()));
}

Integer project_count_union(const std::vector<HPolytope>& parts, std::uint64_t budget) {
  std::set<Integer> xs;
  for (const auto& part : parts)
    for (const auto& p : integer_points(part, budget)) xs.insert(p[0]);
  return Integer(static_cast<unsigned long>(xs.size()));
}

Integer project_count_simplices(const std::vector<VPolytope>& simplices, std::uint64_t budget) {
  std::vector<HPolytope> parts;
  parts.reserve(simplices.size());
  for (const auto& s : simplices) parts.push_back(hull_facets(s));
  return project_count_union(parts, budget);
}

std::optional<IntVector> find_integer_point(const HPolytope& h, std::uint64_t budget) {
  if (h.dim == 0 || h.dim > 2) throw DimensionError("find_integer_point: only dimensions 1 and 2 are supported");
  const Decomposition dec = decompose(h);
  if (dec.points.empty()) return std::nullopt;

  // Any integer point can be shifted by integer ray and line multiples into
  // conv(points) + [0,1]-combinations of the rays and lines.
  std::vector<Rational> lo(h.dim), hi(h.dim);
  for (std::size_t c = 0; c < h.dim; ++c) {
    lo[c] = hi[c] = dec.points.front()[c];
    for (const auto& p : dec.points) {
      lo[c] = std::min(lo[c], p[c]);
      hi[c] = std::max(hi[c], p[c]);
    }
    for (const auto* gens : {&dec.rays, &dec.lines})
      for (const auto& g : *gens) {
        if (g[c] < 0) lo[c] += Rational(g[c]);
        if (g[c] > 0) hi[c] += Rational(g[c]);
      }
  }

  const Integer lo0 = ceil_of(lo[0]), hi0 = floor_of(hi[0]);
  if (hi0 - lo0 + 1 > Integer(std::to_string(budget)))
    throw BudgetExceeded("find_integer_point: search range too wide", "coordinate 1");
  for (Integer x = lo0; x <= hi0; ++x) {
    if (h.dim == 1) {
      if (h.contains(std::span<const Integer>(IntVector{x}))) return IntVector{x};
      continue;
    }
    Integer ylo = ceil_of(lo[1]), yhi = floor_of(hi[1]);
    bool empty = false;
    for (const auto& r : h.rows) {
      const Integer rest = r.rhs - r.coeffs[0] * x;
      const Integer& c = r.coeffs[1];
      if (c == 0) {
        if (rest < 0) empty = true;
      } else if (c > 0) {
        yhi = std::min(yhi, floor_of(make_rational(rest, c)));
      } else {
        ylo = std::max(ylo, ceil_of(make_rational(rest, c)));
      }
      if (empty) break;
    }
    if (!empty && ylo <= yhi) return IntVector{x, ylo};
  }
  return std::nullopt;
}

}  // namespace qip
