#pragma once

// Reference implementations the library is checked against. They share no
// code with the double-description or oracle paths: extreme points come from
// an exact LP, membership in a hull from the same LP, and lattice scans are
// plain nested loops over Integer coordinates.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "qip/exact_lp.hpp"
#include "qip/generate.hpp"
#include "qip/linear.hpp"

namespace qip::testing {

inline IntVector iv(std::initializer_list<long> v) {
  IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline RatVector rv(std::initializer_list<Rational> v) { return RatVector(v); }

/// Points of `pts` not in the hull of the others.
inline std::vector<RatVector> extreme_by_lp(std::vector<RatVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<RatVector> rest;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) rest.push_back(pts[j]);
    if (rest.empty() || !in_convex_hull(rest, pts[i])) out.push_back(pts[i]);
  }
  return out;
}

/// Calls f on every integer point of the box, lexicographically.
inline void for_each_point(const Box& box, const std::function<void(const IntVector&)>& f) {
  IntVector x = box.lo;
  const std::size_t n = box.dim();
  while (true) {
    f(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < box.hi[i]) {
        ++x[i];
        break;
      }
      x[i] = box.lo[i];
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

inline std::set<IntVector> scan(const Box& box, const std::function<bool(const IntVector&)>& keep) {
  std::set<IntVector> out;
  for_each_point(box, [&](const IntVector& x) {
    if (keep(x)) out.insert(x);
  });
  return out;
}

/// Textbook recursive evaluation of Q1 b1 ... Qk bk : pred(b1..bk).
inline bool naive_eval(const std::vector<std::pair<bool, Box>>& blocks, const std::function<bool(const IntVector&)>& pred,
                       std::size_t level = 0, IntVector prefix = {}) {
  if (level == blocks.size()) return pred(prefix);
  const bool exists = blocks[level].first;
  bool result = !exists;
  bool done = false;
  for_each_point(blocks[level].second, [&](const IntVector& x) {
    if (done) return;
    IntVector p = prefix;
    p.insert(p.end(), x.begin(), x.end());
    if (naive_eval(blocks, pred, level + 1, p) == exists) {
      result = exists;
      done = true;
    }
  });
  return result;
}

/// Random rational point with coordinates p/q, |p/q| <= range, q <= den.
inline RatVector random_point(Rng& rng, std::size_t dim, long range, long den) {
  RatVector p;
  for (std::size_t c = 0; c < dim; ++c) {
    const long q = rng.between(1, den);
    p.push_back(make_rational(rng.between(-range * q, range * q), q));
  }
  return p;
}

}  // namespace qip::testing
