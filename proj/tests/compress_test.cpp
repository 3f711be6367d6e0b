#include <gtest/gtest.h>

#include "qip/compress.hpp"
#include "qip/errors.hpp"
#include "qip/polyhedra.hpp"
#include "support.hpp"

namespace qip {
namespace {

using testing::iv;

HPolytope interval(long a, long b) { return HPolytope::from_box(Box(iv({a}), iv({b}))); }

TEST(Tags, WidthAndOrder) {
  EXPECT_EQ(tag_width(1), 0u);
  EXPECT_EQ(tag_width(2), 1u);
  EXPECT_EQ(tag_width(3), 2u);
  EXPECT_EQ(tag_width(4), 2u);
  EXPECT_EQ(tag_width(5), 3u);
  EXPECT_EQ(union_tags(3), (std::vector<IntVector>{iv({0, 0}), iv({1, 0}), iv({0, 1})}));
}

TEST(CompressUnion, TwoIntervals) {
  const CompressedUnion cu = compress_union({interval(0, 1), interval(3, 4)});
  EXPECT_EQ(cu.U.dim, 2u);
  EXPECT_EQ(integer_points(cu.U), (std::vector<IntVector>{iv({0, 0}), iv({1, 0}), iv({3, 1}), iv({4, 1})}));
  EXPECT_EQ(cu.U, hull_facets(VPolytope(2, {{0, 0}, {1, 0}, {3, 1}, {4, 1}})));
}

TEST(CompressUnion, SinglePartIsUnchanged) {
  const HPolytope p = hull_facets(VPolytope(2, {{0, 0}, {3, 1}, {1, 2}}));
  const CompressedUnion cu = compress_union({p});
  EXPECT_EQ(cu.U, p);
  EXPECT_EQ(cu.tags, (std::vector<IntVector>{IntVector{}}));
}

TEST(CompressUnion, ThreePartsUseTwoTagBits) {
  const CompressedUnion cu = compress_union({interval(0, 0), interval(2, 2), interval(5, 6)});
  EXPECT_EQ(cu.U.dim, 3u);
  EXPECT_EQ(cu.tags.size(), 3u);
}

TEST(CompressUnion, Errors) {
  EXPECT_THROW(compress_union({}), std::invalid_argument);
  std::vector<HPolytope> many(3, HPolytope::from_box(Box(IntVector(7, Integer(0)), IntVector(7, Integer(1)))));
  EXPECT_THROW(compress_union(many), DimensionError);
  EXPECT_THROW(compress_union({interval(0, 1), HPolytope::from_box(Box(iv({0, 0}), iv({1, 1})))}), std::invalid_argument);
}

TEST(CompressUnion, ProjectionAndSliceIdentities) {
  Rng rng(97);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng.below(3), r = 1 + rng.below(5);
    std::vector<HPolytope> parts;
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<RatVector> pts;
      for (std::size_t k = 0; k < n + 1; ++k) {
        RatVector p;
        for (std::size_t c = 0; c < n; ++c) p.emplace_back(rng.between(-5, 5));
        pts.push_back(p);
      }
      parts.push_back(hull_facets(VPolytope(n, pts)));
    }
    const CompressedUnion cu = compress_union(parts);
    const auto upts = integer_points(cu.U);
    std::set<IntVector> proj, uni;
    for (const auto& p : upts) proj.insert(IntVector(p.begin(), p.begin() + n));
    for (const auto& part : parts)
      for (const auto& p : integer_points(part)) uni.insert(p);
    EXPECT_EQ(proj, uni);
    for (std::size_t j = 0; j < r; ++j) {
      std::set<IntVector> slice;
      for (const auto& p : upts)
        if (IntVector(p.begin() + n, p.end()) == cu.tags[j]) slice.insert(IntVector(p.begin(), p.begin() + n));
      const auto own = integer_points(parts[j]);
      EXPECT_EQ(slice, std::set<IntVector>(own.begin(), own.end()));
    }
  }
}

TEST(Pigeonhole, ThreePointsOneBit) {
  const std::vector<IntVector> pts{iv({0, 0}), iv({4, 0}), iv({0, 4})};
  const auto w = pigeonhole_witness(pts, {iv({0}), iv({1}), iv({2})});
  EXPECT_EQ(w.i, 0u);
  EXPECT_EQ(w.j, 2u);
  EXPECT_EQ(w.midpoint, iv({0, 2, 1}));
}

TEST(Pigeonhole, RejectsBadInput) {
  const std::vector<IntVector> two{iv({0, 0}), iv({2, 2})};
  EXPECT_THROW(pigeonhole_witness(two, {iv({0}), iv({1})}), std::invalid_argument);
  const std::vector<IntVector> odd{iv({0, 0}), iv({1, 0}), iv({0, 2})};
  EXPECT_THROW(pigeonhole_witness(odd, {iv({0}), iv({1}), iv({0})}), std::invalid_argument);
  const std::vector<IntVector> inside{iv({0, 0}), iv({4, 0}), iv({2, 0})};
  EXPECT_THROW(pigeonhole_witness(inside, {iv({0}), iv({1}), iv({0})}), std::invalid_argument);
}

TEST(Pigeonhole, FivePointsTwoBits) {
  Rng rng(8);
  const std::vector<IntVector> pts{iv({0, 0}), iv({4, 0}), iv({6, 4}), iv({2, 8}), iv({-2, 4})};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<IntVector> tags;
    for (int k = 0; k < 5; ++k) tags.push_back(iv({rng.between(-3, 3), rng.between(-3, 3)}));
    const auto w = pigeonhole_witness(pts, tags);
    ASSERT_NE(w.i, w.j);
    const IntVector mid(w.midpoint.begin(), w.midpoint.begin() + 2);
    EXPECT_EQ(std::count(pts.begin(), pts.end(), mid), 0);
  }
}

}  // namespace
}  // namespace qip
