#include "double_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace qip::detail {

namespace {

class ZeroSet {
 public:
  explicit ZeroSet(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }

  void set_prefix(std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) set(i);
  }

  ZeroSet operator&(const ZeroSet& o) const {
    ZeroSet r;
    r.words_.resize(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool subset_of(const ZeroSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector v;
  ZeroSet zero;
};

// a := s0 * a - s * b, then primitive.
void eliminate(IntVector& a, const Integer& s0, const Integer& s, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] *= s0;
    mpz_submul(a[i].get_mpz_t(), s.get_mpz_t(), b[i].get_mpz_t());
  }
  make_primitive(a);
}

}  // namespace

ConeGenerators cone_generators(const std::vector<IntVector>& constraints, std::size_t dim) {
  std::vector<const IntVector*> order;
  order.reserve(constraints.size());
  for (const auto& h : constraints) {
    if (h.size() != dim) throw std::invalid_argument("cone constraint of wrong length");
    if (std::any_of(h.begin(), h.end(), [](const Integer& x) { return x != 0; })) order.push_back(&h);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const IntVector* a, const IntVector* b) { return lex_compare<Integer>(*a, *b) < 0; });
  order.erase(std::unique(order.begin(), order.end(), [](const IntVector* a, const IntVector* b) { return *a == *b; }),
              order.end());

  const std::size_t m = order.size();
  std::vector<IntVector> lines;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, 0);
    e[i] = 1;
    lines.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < m; ++k) {
    const IntVector& h = *order[k];

    auto pivot = lines.end();
    Integer s0;
    for (auto it = lines.begin(); it != lines.end(); ++it) {
      s0 = dot(h, *it);
      if (s0 != 0) {
        pivot = it;
        break;
      }
    }
    if (pivot != lines.end()) {
      IntVector l0 = std::move(*pivot);
      lines.erase(pivot);
      if (s0 < 0) {
        for (auto& x : l0) x = -x;
        s0 = -s0;
      }
      for (auto& l : lines) {
        const Integer s = dot(h, l);
        if (s != 0) eliminate(l, s0, s, l0);
      }
      for (auto& r : rays) {
        const Integer s = dot(h, r.v);
        if (s != 0) eliminate(r.v, s0, s, l0);
        r.zero.set(k);
      }
      Ray fresh{std::move(l0), ZeroSet(m)};
      fresh.zero.set_prefix(k);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(h, rays[i].v);
      const int s = sgn(value[i]);
      (s > 0 ? pos : s < 0 ? neg : zer).push_back(i);
    }
    if (neg.empty()) {
      for (auto i : zer) rays[i].zero.set(k);
      continue;
    }

    const std::size_t lin = lines.size();
    const std::size_t need = dim > lin + 2 ? dim - lin - 2 : 0;
    std::vector<Ray> next;
    next.reserve(pos.size() + zer.size());
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        ZeroSet common = rays[p].zero & rays[n].zero;
        if (common.count() < need) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v = rays[n].v;
        Integer neg_val = value[n];
        eliminate(v, value[p], neg_val, rays[p].v);
        common.set(k);
        next.push_back(Ray{std::move(v), std::move(common)});
      }
    }
    for (std::size_t p : pos) next.push_back(std::move(rays[p]));
    for (std::size_t z : zer) {
      rays[z].zero.set(k);
      next.push_back(std::move(rays[z]));
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lines = std::move(lines);
  out.rays.reserve(rays.size());
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace qip::detail
