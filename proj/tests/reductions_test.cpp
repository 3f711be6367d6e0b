#include <gtest/gtest.h>

#include "qip/compress.hpp"
#include "qip/errors.hpp"
#include "qip/oracle.hpp"
#include "qip/polyhedra.hpp"
#include "qip/reductions.hpp"
#include "support.hpp"

namespace qip {
namespace {

using testing::iv;

Literal L(int block, int index, bool positive = true) { return Literal{block, index, positive}; }

GsaInstance gsa(std::vector<Rational> alpha, long N, Rational eps) { return {std::move(alpha), Integer(N), eps}; }

// Truth of the sentence by the textbook reading with the matrix tested row by row.
bool naive_truth(const QuantSentence& s) {
  const QuantSentence b = bounded_form(s);
  std::vector<std::pair<bool, Box>> blocks;
  for (const auto& blk : b.blocks) blocks.emplace_back(blk.q == Quantifier::exists, *blk.box);
  const auto& h = std::get<HPolytope>(b.constraint);
  return testing::naive_eval(blocks, [&](const IntVector& x) { return h.contains(std::span<const Integer>(x)); });
}

TEST(ThreeQuantifiers, SpecInstances) {
  const GsaInstance a = gsa({Rational(1, 3), Rational(2, 3)}, 3, Rational(1, 3));
  const GsaInstance b = gsa({Rational(1, 2), Rational(1, 2)}, 1, Rational(1, 4));
  const GsaInstance c = gsa({Rational(1, 2), Rational(1, 3)}, 6, Rational(1, 6));
  EXPECT_TRUE(eval_sentence(gsa_to_three_quantifiers(a).sentence));
  EXPECT_FALSE(eval_sentence(gsa_to_three_quantifiers(b).sentence));
  EXPECT_TRUE(eval_sentence(gsa_to_three_quantifiers(c).sentence));
  EXPECT_TRUE(naive_truth(gsa_to_three_quantifiers(a).sentence));
  EXPECT_FALSE(naive_truth(gsa_to_three_quantifiers(b).sentence));
}

TEST(ThreeQuantifiers, Shape) {
  const EaeReduction r = gsa_to_three_quantifiers(gsa({Rational(1, 3), Rational(3, 4)}, 5, Rational(1, 4)));
  ASSERT_EQ(r.sentence.blocks.size(), 3u);
  EXPECT_EQ(r.sentence.blocks[0].q, Quantifier::exists);
  EXPECT_EQ(*r.sentence.blocks[0].box, Box(iv({1}), iv({5})));
  EXPECT_EQ(r.sentence.blocks[1].q, Quantifier::forall);
  EXPECT_EQ(*r.sentence.blocks[1].box, Box(iv({1, 0}), iv({2, 1})));
  EXPECT_FALSE(r.sentence.blocks[2].box.has_value());
  EXPECT_EQ(r.sentence.blocks[2].dim, 3u);
  EXPECT_EQ(region_dim(r.sentence.constraint), 6u);
  EXPECT_EQ(r.tags.size(), 3u);
  EXPECT_EQ(r.tags[0].size(), 2u);
}

TEST(ThreeQuantifiers, PHasFourDVertices) {
  for (std::size_t d = 2; d <= 4; ++d) {
    Rng rng(d);
    const GsaInstance g = random_gsa(rng, d, 9, 7);
    const EaeReduction r = gsa_to_three_quantifiers(g);
    EXPECT_EQ(r.P.vertices.size(), 4 * d);
    EXPECT_EQ(extreme_points(r.P).vertices.size(), 4 * d);
    // each lifted band is a 2-dimensional face: its slice over phi_i is the band
    const HPolytope ph = hull_facets(r.P);
    for (std::size_t i = 1; i <= d; ++i) {
      const auto& phi = r.gadget.phi[i - 1];
      const HPolytope band = band_polygon(r.instance, i);
      for (Integer x = 0; x <= g.N + 1; ++x)
        for (Integer w = -2; w <= g.N + 2; ++w) {
          const IntVector p{x, phi[0], phi[1], w};
          ASSERT_EQ(ph.contains(std::span<const Integer>(p)), band.contains(std::span<const Integer>(IntVector{x, w})));
        }
    }
  }
}

TEST(ThreeQuantifiers, PBoundingBoxMatchesVertexScan) {
  Rng rng(4);
  const EaeReduction r = gsa_to_three_quantifiers(random_gsa(rng, 2, 8, 6));
  const Box bb = *bounding_box(hull_facets(r.P));
  for (std::size_t c = 0; c < 4; ++c) {
    Rational mn = r.P.vertices.front()[c], mx = mn;
    for (const auto& v : r.P.vertices) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    EXPECT_EQ(bb.lo[c], ceil_of(mn));
    EXPECT_EQ(bb.hi[c], floor_of(mx));
  }
}

TEST(ThreeQuantifiers, PIntegerPointsMatchHalfspaceOracle) {
  Rng rng(9);
  const GsaInstance g = random_gsa(rng, 3, 6, 5);
  const EaeReduction r = gsa_to_three_quantifiers(g);
  const HPolytope ph = hull_facets(r.P);
  const Box bb = *bounding_box(ph);
  const auto got = integer_points(ph);
  const auto expect = testing::scan(bb, [&](const IntVector& x) { return in_convex_hull(r.P.vertices, to_rational(x)); });
  EXPECT_EQ(std::set<IntVector>(got.begin(), got.end()), expect);
}

TEST(ThreeQuantifiers, IntermediateForms) {
  // For each x: (forall i, band slice at x nonempty) iff (forall y in J exists w:
  // (x, y, w) in R'_1 or R'_2 or P).
  Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const GsaInstance g = random_gsa(rng, 2 + rng.below(2), rng.between(1, 8), 6);
    const EaeReduction r = gsa_to_three_quantifiers(g);
    const HPolytope ph = hull_facets(r.P);
    const Integer wmax = g.N + 2;
    for (Integer x = 1; x <= g.N; ++x) {
      bool bands = true;
      for (std::size_t i = 1; i <= r.instance.d(); ++i) bands = bands && !w_slice(band_polygon(r.instance, i), x).empty();
      EXPECT_EQ(bands, gsa_norm(x, r.instance.alpha) <= g.eps);
      bool covered = true;
      testing::for_each_point(r.gadget.J, [&](const IntVector& y) {
        bool some = false;
        for (Integer w = -2; w <= wmax && !some; ++w) {
          const IntVector p{x, y[0], y[1], w};
          some = r.R1_lift.contains(std::span<const Integer>(p)) || r.R2_lift.contains(std::span<const Integer>(p)) ||
                 ph.contains(std::span<const Integer>(p));
        }
        covered = covered && some;
      });
      EXPECT_EQ(bands, covered);
    }
  }
}

TEST(ThreeQuantifiers, SoundOnRandomInstances) {
  Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const GsaInstance g = random_gsa(rng, 2 + rng.below(2), rng.between(1, 12), 8);
    EXPECT_EQ(eval_sentence(gsa_to_three_quantifiers(g).sentence), gsa_decide(g)) << trial;
  }
}

TEST(ThreeQuantifiers, SingleAlphaIsPadded) {
  const EaeReduction r = gsa_to_three_quantifiers(gsa({Rational(1, 3)}, 3, Rational(1, 3)));
  EXPECT_EQ(*r.sentence.blocks[1].box, Box(iv({1, 0}), iv({2, 1})));
  EXPECT_EQ(r.instance.d(), 2u);
  EXPECT_TRUE(eval_sentence(r.sentence));
  EXPECT_FALSE(eval_sentence(gsa_to_three_quantifiers(gsa({Rational(1, 2)}, 1, Rational(1, 4))).sentence));
}

TEST(LiteralGadget, BitWitness) {
  // x = 5, s = 1: 5 is odd, the literal u is true with w = 2.
  const HPolytope pos = literal_polytope(1, 3, L(1, 1));
  std::vector<Integer> ws;
  for (Integer w = 0; w <= 7; ++w)
    if (pos.contains(std::span<const Integer>(IntVector{5, w}))) ws.push_back(w);
  EXPECT_EQ(ws, std::vector<Integer>{2});
  EXPECT_FALSE(literal_polytope(1, 3, L(1, 1, false)).contains(std::span<const Integer>(IntVector{5, 2})));
}

TEST(LiteralGadget, ProjectsOntoBitValue) {
  for (int ell = 1; ell <= 3; ++ell)
    for (int k = 1; k <= 2; ++k)
      for (int s = 1; s <= ell; ++s)
        for (bool positive : {true, false}) {
          const HPolytope h = literal_polytope(k, ell, L(k, s, positive));
          std::map<IntVector, int> witnesses;
          for (const auto& p : integer_points(h)) ++witnesses[IntVector(p.begin(), p.end() - 1)];
          const long top = (1L << ell) - 1;
          const Box xs(IntVector(k, Integer(0)), IntVector(k, Integer(top)));
          testing::for_each_point(xs, [&](const IntVector& x) {
            const bool bit = (x[k - 1].get_si() >> (s - 1)) & 1;
            const int count = witnesses.count(x) ? witnesses[x] : 0;
            ASSERT_EQ(count, bit == positive ? 1 : 0);
          });
        }
}

TEST(Q3SatSentence, SpecExamples) {
  Q3SatInstance a{1, 1, {Quantifier::exists}, {Clause{L(1, 1), L(1, 1), L(1, 1)}}};
  const QsatReduction ra = q3sat_to_sentence(a);
  EXPECT_EQ(region_dim(ra.sentence.constraint), 8u);
  EXPECT_TRUE(std::holds_alternative<HPolytope>(ra.sentence.constraint));
  EXPECT_TRUE(eval_sentence(ra.sentence));
  Q3SatInstance b{1, 2, {Quantifier::exists},
                  {Clause{L(1, 1, false), L(1, 1, false), L(1, 1, false)}, Clause{L(1, 2), L(1, 2), L(1, 2)}}};
  const QsatReduction rb = q3sat_to_sentence(b);
  EXPECT_TRUE(eval_sentence(rb.sentence));
  ASSERT_EQ(rb.sentence.blocks.size(), 3u);
  EXPECT_EQ(*rb.sentence.blocks[0].box, Box(iv({0}), iv({3})));
  EXPECT_EQ(rb.sentence.blocks[2].dim, 5u);
  Q3SatInstance c = b;
  c.clauses.push_back(Clause{L(1, 1), L(1, 1), L(1, 1)});
  EXPECT_FALSE(eval_q3sat(c));
  EXPECT_FALSE(eval_sentence(q3sat_to_sentence(c).sentence));
}

TEST(Q3SatSentence, SoundOnRandomInstances) {
  Rng rng(57);
  for (int trial = 0; trial < 30; ++trial) {
    const Q3SatInstance q = random_q3sat(rng, 1, 1 + rng.below(2), 1 + rng.below(3));
    EXPECT_EQ(eval_sentence(q3sat_to_sentence(q).sentence), eval_q3sat(q)) << trial;
  }
}

TEST(Q3SatSentence, TwoBlocksUseVertexForm) {
  // forall u1 exists u2: (u1 | u2 | u2) & (~u1 | ~u2 | ~u2) is true.
  Q3SatInstance q{2, 1, {Quantifier::forall, Quantifier::exists},
                  {Clause{L(1, 1), L(2, 1), L(2, 1)}, Clause{L(1, 1, false), L(2, 1, false), L(2, 1, false)}}};
  const QsatReduction r = q3sat_to_sentence(q);
  EXPECT_EQ(region_dim(r.sentence.constraint), 9u);
  ASSERT_TRUE(std::holds_alternative<VPolytope>(r.sentence.constraint));
  EXPECT_TRUE(eval_sentence(r.sentence));
  q.clauses.push_back(Clause{L(2, 1), L(2, 1), L(2, 1)});
  EXPECT_FALSE(eval_q3sat(q));
  EXPECT_FALSE(eval_sentence(q3sat_to_sentence(q).sentence));
}

TEST(Q3SatSentence, RejectsBadInstances) {
  Q3SatInstance q{1, 1, {Quantifier::exists}, {Clause{L(2, 1), L(1, 1), L(1, 1)}}};
  EXPECT_THROW(q3sat_to_sentence(q), std::invalid_argument);
  q.k = 0;
  q.prefix.clear();
  EXPECT_THROW(q3sat_to_sentence(q), std::invalid_argument);
}

TEST(Projection, SpecExamples) {
  const GsaInstance a = gsa({Rational(1, 2)}, 2, Rational(1, 4));
  const ProjectionReduction ra = count_gsa_to_projection(a);
  EXPECT_EQ(project_count(ra.instance.V, ra.instance.U), 1);
  EXPECT_EQ(gsa_count(a), 1);
  const GsaInstance b = gsa({Rational(1, 3)}, 3, Rational(1, 3));
  EXPECT_EQ(project_count(count_gsa_to_projection(b).instance.V, count_gsa_to_projection(b).instance.U), 0);
}

TEST(Projection, SpacingAndT) {
  const ProjectionReduction r = count_gsa_to_projection(gsa({Rational(1, 2), Rational(2, 3), Rational(1, 5)}, 7, Rational(1, 6)));
  // T = ceil(1 + 7 * 2/3) = 6, m_i = 4T i (2d - i)
  EXPECT_EQ(r.T, 6);
  EXPECT_EQ(r.m, (std::vector<Integer>{120, 192, 216}));
  for (std::size_t i = 1; i + 1 < r.m.size(); ++i) EXPECT_LT(r.m[i + 1] - r.m[i], r.m[i] - r.m[i - 1] - 4 * r.T + 1);
}

TEST(Projection, SliceIsTranslatedGap) {
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const GsaInstance g = random_gsa(rng, 2, rng.between(1, 10), 8);
    const ProjectionReduction r = count_gsa_to_projection(g);
    const auto& U = r.instance.U;
    const auto& V = r.instance.V;
    const auto box = *bounding_box(V);
    for (std::size_t i = 1; i <= g.d(); ++i) {
      Box plane = box;
      plane.lo[1] = plane.hi[1] = Integer(i);
      const auto diff = testing::scan(plane, [&](const IntVector& p) {
        return V.contains(std::span<const Integer>(p)) && !U.contains(std::span<const Integer>(p));
      });
      const auto gap = testing::scan(plane, [&](const IntVector& p) {
        return r.translated_gaps[i - 1].contains(std::span<const Integer>(p));
      });
      EXPECT_EQ(diff, gap) << trial << " i=" << i;
    }
  }
}

TEST(Projection, ParsimonyOnRandomInstances) {
  Rng rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const GsaInstance g = random_gsa(rng, 1 + rng.below(3), rng.between(1, 12), 8);
    const ProjectionReduction r = count_gsa_to_projection(g);
    EXPECT_EQ(g.N - project_count(r.instance.V, r.instance.U), gsa_count(g)) << trial;
    for (const auto& v : vertices(r.instance.U).vertices) EXPECT_TRUE(r.instance.V.contains(std::span<const Rational>(v)));
  }
}

TEST(Projection, TrivialEpsilon) {
  const GsaInstance g = gsa({Rational(1, 3), Rational(1, 2)}, 5, Rational(1, 2));
  const ProjectionReduction r = count_gsa_to_projection(g);
  EXPECT_EQ(r.instance.U, r.instance.V);
  EXPECT_EQ(g.N - project_count(r.instance.V, r.instance.U), 5);
}

TEST(Simplices, PointRemovedFromCube) {
  const HPolytope Q = HPolytope::from_box(Box(iv({0, 0, 0}), iv({1, 1, 1})));
  const HPolytope P = HPolytope::from_box(Box(iv({0, 0, 0}), iv({0, 0, 0})));
  const auto simplices = complement_to_simplices(P, Q);
  std::set<IntVector> pts;
  for (const auto& s : simplices) {
    EXPECT_EQ(affine_dimension(s.vertices) + 1, static_cast<int>(s.vertices.size()));
    for (const auto& p : integer_points(hull_facets(s))) pts.insert(p);
  }
  EXPECT_EQ(pts.size(), 7u);
  EXPECT_EQ(pts.count(iv({0, 0, 0})), 0u);
  EXPECT_EQ(project_count_simplices(simplices), project_count(Q, P));
}

TEST(Simplices, EqualPolytopesGiveNothing) {
  const HPolytope Q = HPolytope::from_box(Box(iv({0, 0, 0}), iv({2, 1, 1})));
  EXPECT_TRUE(complement_to_simplices(Q, Q).empty());
}

TEST(Simplices, RejectsNonNested) {
  const HPolytope Q = HPolytope::from_box(Box(iv({0, 0, 0}), iv({1, 1, 1})));
  const HPolytope P = HPolytope::from_box(Box(iv({0, 0, 0}), iv({2, 1, 1})));
  EXPECT_THROW(complement_to_simplices(P, Q), std::invalid_argument);
  EXPECT_THROW(complement_to_simplices(HPolytope(3, {}), Q), std::invalid_argument);
}

TEST(Simplices, PointSetsMatchComplement) {
  Rng rng(73);
  for (int trial = 0; trial < 15; ++trial) {
    const GsaInstance g = random_gsa(rng, 1 + rng.below(2), rng.between(1, 6), 6);
    const ProjectionReduction r = count_gsa_to_projection(g);
    const auto simplices = complement_to_simplices(r.instance.U, r.instance.V);
    std::set<IntVector> from_simplices;
    for (const auto& s : simplices)
      for (const auto& p : integer_points(hull_facets(s))) from_simplices.insert(p);
    std::set<IntVector> direct;
    for (const auto& p : integer_points(r.instance.V))
      if (!r.instance.U.contains(std::span<const Integer>(p))) direct.insert(p);
    EXPECT_EQ(from_simplices, direct) << trial;
    EXPECT_EQ(project_count_simplices(simplices), project_count(r.instance.V, r.instance.U));
  }
}

TEST(TwoQuantifiers, SliceCoverage) {
  // alpha = 1/2, eps = 1/4, N = 2, x = 2: band has w = 1, L covers {-1, 0}, M covers {1, 2}.
  const TwoQuantReduction r = gsa_to_two_quantifiers(gsa({Rational(1, 2)}, 2, Rational(1, 4)));
  EXPECT_EQ(r.T, 2);
  const auto& phi = r.gadget.phi[0];
  std::vector<Integer> in_l, in_m;
  for (Integer w = -1; w <= 2; ++w) {
    const IntVector p{2, phi[0], phi[1], w};
    if (r.instance.parts[1].contains(std::span<const Integer>(p))) in_l.push_back(w);
    if (r.instance.parts[2].contains(std::span<const Integer>(p))) in_m.push_back(w);
  }
  EXPECT_EQ(in_l, (std::vector<Integer>{-1, 0}));
  EXPECT_EQ(in_m, (std::vector<Integer>{1, 2}));
  EXPECT_EQ(r.instance.K, Box(iv({1, 0, -1}), iv({2, 1, 2})));
}

TEST(TwoQuantifiers, SpecInstances) {
  EXPECT_FALSE(eval_union_sentence(gsa_to_two_quantifiers(gsa({Rational(1, 2)}, 1, Rational(1, 4))).instance.as_sentence()));
  EXPECT_TRUE(eval_union_sentence(
      gsa_to_two_quantifiers(gsa({Rational(1, 3), Rational(2, 3)}, 3, Rational(1, 3))).instance.as_sentence()));
}

TEST(TwoQuantifiers, SoundOnRandomInstances) {
  Rng rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    const GsaInstance g = random_gsa(rng, 2 + rng.below(2), rng.between(1, 12), 8);
    EXPECT_EQ(eval_union_sentence(gsa_to_two_quantifiers(g).instance.as_sentence()), gsa_decide(g)) << trial;
  }
}

TEST(Dbs, SubsetCount) {
  const std::vector<IntVector> A{iv({1}), iv({-1}), iv({2})};
  const auto subs = dbs_split(A, iv({1, 2, 3}), 1);
  ASSERT_EQ(subs.size(), 3u);
  EXPECT_EQ(subs[0].rows, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(subs[2].rows, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(subs[2].A, (std::vector<IntVector>{iv({-1}), iv({2})}));
  EXPECT_THROW(dbs_split(A, iv({1, 2, 3}), 2), std::invalid_argument);
}

TEST(Dbs, InfeasiblePairIsFound) {
  // y >= 0, y <= 2, y >= 5
  const std::vector<IntVector> A{iv({-1}), iv({1}), iv({-1})};
  const IntVector b = iv({0, 2, -5});
  EXPECT_FALSE(find_integer_point(HPolytope(1, {{A[0], b[0]}, {A[1], b[1]}, {A[2], b[2]}})).has_value());
  bool some_infeasible = false;
  for (const auto& s : dbs_split(A, b, 1)) {
    HPolytope h(1, {});
    for (std::size_t r = 0; r < s.A.size(); ++r) h.add_row(s.A[r], s.b[r]);
    if (!find_integer_point(h)) {
      some_infeasible = true;
      EXPECT_EQ(s.rows, (std::vector<std::size_t>{1, 2}));
    }
  }
  EXPECT_TRUE(some_infeasible);
}

}  // namespace
}  // namespace qip
