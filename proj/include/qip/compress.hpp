#pragma once

#include <optional>
#include <vector>

#include "qip/linear.hpp"

namespace qip {

/// ceil(log2 r) for r >= 1.
std::size_t tag_width(std::size_t r);

/// Distinct 0/1 tags, tag_j = binary of j (0-based), low bit first.
std::vector<IntVector> union_tags(std::size_t r);

/// Vertex form of the folded union: every vertex of part j, extended by tag_j.
/// Parts must be bounded; empty parts contribute nothing.
struct CompressedVertices {
  std::size_t width = 0;
  std::vector<IntVector> tags;
  VPolytope lifted;
};
CompressedVertices compress_union_vertices(const std::vector<VPolytope>& parts);

/// One polytope U in dimension n + ceil(log2 r) whose integer points project
/// onto exactly the integer points of the union of the parts. For r = 1 the
/// part is returned unchanged.
struct CompressedUnion {
  HPolytope U;
  std::vector<IntVector> tags;
};
CompressedUnion compress_union(const std::vector<HPolytope>& parts);

/// Given r lifted points (p_i, q_i) with p_i in convex position with even
/// coordinates and fewer tag bits than ceil(log2 r), finds i < j with
/// q_i = q_j (mod 2). Their midpoint is integral and its projection
/// (p_i + p_j)/2 is not among the p's.
struct PigeonholeWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  IntVector midpoint;
};
PigeonholeWitness pigeonhole_witness(const std::vector<IntVector>& points, const std::vector<IntVector>& tags);

}  // namespace qip
