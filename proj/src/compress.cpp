#include "qip/compress.hpp"

#include <map>
#include <stdexcept>

#include "qip/errors.hpp"
#include "qip/polyhedra.hpp"

namespace qip {

std::size_t tag_width(std::size_t r) {
  if (r == 0) throw std::invalid_argument("tag_width: r must be positive");
  std::size_t l = 0;
  while ((std::size_t{1} << l) < r) ++l;
  return l;
}

std::vector<IntVector> union_tags(std::size_t r) {
  const std::size_t l = tag_width(r);
  std::vector<IntVector> tags;
  for (std::size_t j = 0; j < r; ++j) {
    IntVector t(l);
    for (std::size_t b = 0; b < l; ++b) t[b] = static_cast<long>((j >> b) & 1U);
    tags.push_back(std::move(t));
  }
  return tags;
}

CompressedVertices compress_union_vertices(const std::vector<VPolytope>& parts) {
  if (parts.empty()) throw std::invalid_argument("compress_union: empty part list");
  const std::size_t n = parts.front().dim;
  CompressedVertices out;
  out.width = tag_width(parts.size());
  out.tags = union_tags(parts.size());
  out.lifted.dim = n + out.width;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].dim != n) throw std::invalid_argument("compress_union: parts of different dimension");
    for (const auto& v : parts[j].vertices) {
      RatVector p = v;
      for (const auto& t : out.tags[j]) p.emplace_back(t);
      out.lifted.vertices.push_back(std::move(p));
    }
  }
  out.lifted.canonicalize();
  return out;
}

CompressedUnion compress_union(const std::vector<HPolytope>& parts) {
  if (parts.empty()) throw std::invalid_argument("compress_union: empty part list");
  const std::size_t n = parts.front().dim;
  const std::size_t l = tag_width(parts.size());
  if (n + l > kMaxExactDim)
    throw DimensionError("compress_union: dimension " + std::to_string(n + l) + " exceeds " +
                         std::to_string(kMaxExactDim));
  if (parts.size() == 1) return {parts.front(), union_tags(1)};

  std::vector<VPolytope> vparts;
  vparts.reserve(parts.size());
  for (const auto& p : parts) {
    if (p.dim != n) throw std::invalid_argument("compress_union: parts of different dimension");
    vparts.push_back(vertices(p));
  }
  CompressedVertices cv = compress_union_vertices(vparts);
  CompressedUnion out;
  out.tags = std::move(cv.tags);
  if (cv.lifted.vertices.empty()) {
    out.U.dim = n + l;
    out.U.add_row(IntVector(n + l, 0), -1);
    out.U.canonicalize();
    return out;
  }
  out.U = hull_facets(cv.lifted);
  return out;
}

PigeonholeWitness pigeonhole_witness(const std::vector<IntVector>& points, const std::vector<IntVector>& tags) {
  const std::size_t r = points.size();
  if (r < 2) throw std::invalid_argument("pigeonhole_witness: need at least two points");
  if (tags.size() != r) throw std::invalid_argument("pigeonhole_witness: one tag per point");
  const std::size_t l = tags.front().size();
  for (const auto& t : tags)
    if (t.size() != l) throw std::invalid_argument("pigeonhole_witness: tags of different width");
  if (l >= tag_width(r))
    throw std::invalid_argument("pigeonhole_witness: tag width " + std::to_string(l) + " is not below ceil(log2 " +
                                std::to_string(r) + ")");
  const std::size_t n = points.front().size();
  for (const auto& p : points) {
    if (p.size() != n) throw std::invalid_argument("pigeonhole_witness: points of different dimension");
    for (const auto& c : p)
      if (c % 2 != 0) throw std::invalid_argument("pigeonhole_witness: coordinates must be even");
  }
  {
    std::vector<RatVector> pts;
    for (const auto& p : points) pts.push_back(to_rational(p));
    VPolytope all(n, pts);
    VPolytope before = all;
    before.canonicalize();
    if (before.vertices.size() != r) throw std::invalid_argument("pigeonhole_witness: repeated points");
    if (extreme_points(all).vertices.size() != r)
      throw std::invalid_argument("pigeonhole_witness: points are not in convex position");
  }

  std::map<std::vector<int>, std::size_t> seen;
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<int> parity;
    for (const auto& t : tags[k]) parity.push_back(mpz_odd_p(t.get_mpz_t()) ? 1 : 0);
    auto [it, fresh] = seen.emplace(parity, k);
    if (fresh) continue;
    const std::size_t i = it->second;
    PigeonholeWitness w{i, k, {}};
    for (std::size_t c = 0; c < n; ++c) w.midpoint.push_back((points[i][c] + points[k][c]) / 2);
    for (std::size_t c = 0; c < l; ++c) w.midpoint.push_back((tags[i][c] + tags[k][c]) / 2);
    return w;
  }
  throw std::logic_error("pigeonhole_witness: no parity collision despite r > 2^l");
}

}  // namespace qip
