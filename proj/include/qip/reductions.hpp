#pragma once

#include <vector>

#include "qip/fib_gadget.hpp"
#include "qip/gsa.hpp"
#include "qip/sentence.hpp"

namespace qip {

/// GSA -> exists x in [1,N] forall y in J exists z in Z^3 : (x, y, z) in U, U in R^6.
/// Coordinates are (x, y1, y2, w, t1, t2). The pieces folded into U are kept
/// for inspection; they live in R^4 over (x, y1, y2, w).
struct EaeReduction {
  QuantSentence sentence;
  GsaInstance instance;  // normalized, padded to d >= 2
  FibGadget gadget;
  VPolytope P;           // hull of the lifted band corners, 4d vertices
  HPolytope R1_lift;     // [0,N] x R1 x {0}
  HPolytope R2_lift;     // [0,N] x R2 x {0}
  std::vector<IntVector> tags;
  Provenance provenance;
};
EaeReduction gsa_to_three_quantifiers(const GsaInstance& inst);

/// Literal gadget over (x_1..x_k, w): 0 <= x_j, w <= 2^ell - 1 and
/// 2w + 1 in (x_j / 2^(s-1) - 1, x_j / 2^(s-1)] for a positive literal,
/// 2w in the same window for a negative one. Its integer points are exactly
/// the x that make the literal true, each with the single witness w.
HPolytope literal_polytope(int k, int ell, const Literal& lit);

struct QsatReduction {
  QuantSentence sentence;
  FibGadget gadget;
  std::size_t clauses_used = 0;  // after padding a lone clause
  Provenance provenance;
};
/// Q3SAT_k -> Q1 x1 ... Qk xk forall y in J exists z in K : U, U in R^(k+7).
/// For k + 7 above the exact-conversion cap U stays in vertex form.
QsatReduction q3sat_to_sentence(const Q3SatInstance& inst);

struct ProjectionReduction {
  ProjectionInstance instance;
  Integer T;
  std::vector<Integer> m;                // m[i-1] translates the plane y = i
  std::vector<HPolytope> translated_gaps;  // R_i over (x, y, w), in plane y = i
  Provenance provenance;
};
/// #GSA -> projection count: gsa_count = N - |E1(V \ U)|.
ProjectionReduction count_gsa_to_projection(const GsaInstance& inst);

/// Simplices whose integer points together are exactly the integer points of
/// Q that violate some row of P. Each simplex has affinely independent
/// vertices; a flat piece comes out as a lower-dimensional simplex.
/// Throws std::invalid_argument unless P is inside Q and both are bounded.
std::vector<VPolytope> complement_to_simplices(const HPolytope& P, const HPolytope& Q);

struct TwoQuantReduction {
  TwoQuantifierInstance instance;
  GsaInstance gsa;  // normalized, padded to d >= 2
  FibGadget gadget;
  Integer T;
  Provenance provenance;
};
/// GSA -> exists x in I forall z in K : (x, z) in U1 or U2 or U3, all in R^4.
TwoQuantReduction gsa_to_two_quantifiers(const GsaInstance& inst);

/// Integer system A (x, y) <= b with y the last d2 columns.
struct LinearSystem {
  std::vector<IntVector> A;
  IntVector b;
  std::vector<std::size_t> rows;  // indices into the parent system
};
/// Every subsystem of 2^d2 rows, in lexicographic order of row indices.
std::vector<LinearSystem> dbs_split(const std::vector<IntVector>& A, const IntVector& b, std::size_t d2);

}  // namespace qip
