#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qip/polyhedra.hpp"
#include "qip/sentence.hpp"

namespace qip {

/// Ceiling on membership tests for one sentence evaluation.
inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

/// The box the innermost block ranges over: its own box, or for an unbounded
/// block the constraint's bounding box on its coordinates, widened by `pad`.
Box innermost_box(const QuantSentence& s, const Integer& pad = 0);

/// Copy of `s` whose unbounded innermost block is replaced by innermost_box(s, pad).
QuantSentence bounded_form(const QuantSentence& s, const Integer& pad = 0);

/// Alternating-quantifier truth over integer boxes, lexicographic with early
/// exits. Throws BudgetExceeded (naming the block) when the product of block
/// sizes exceeds the budget.
bool eval_sentence(const QuantSentence& s, std::uint64_t budget = kDefaultOracleBudget);

/// Same, with membership in any of the parts as the matrix.
bool eval_union_sentence(const UnionSentence& s, std::uint64_t budget = kDefaultOracleBudget);

/// Direct QBF evaluation. Requires k * ell <= 20.
bool eval_q3sat(const Q3SatInstance& inst);

/// Whether the Boolean assignment (block-major, bit s of block j at j*ell + s)
/// satisfies every clause.
bool clauses_hold(const Q3SatInstance& inst, const std::vector<bool>& bits);

/// |{x : some integer (x, ...) lies in Q and violates a row of P}|.
Integer project_count(const HPolytope& Q, const HPolytope& P, std::uint64_t budget = kDefaultEnumerationBudget);

/// |E1| of the union of the parts' integer points.
Integer project_count_union(const std::vector<HPolytope>& parts, std::uint64_t budget = kDefaultEnumerationBudget);

/// project_count_union over simplices given by vertices.
Integer project_count_simplices(const std::vector<VPolytope>& simplices,
                                std::uint64_t budget = kDefaultEnumerationBudget);

/// An integer point of h, or nullopt. Exact for dim <= 2 whether or not h is
/// bounded; throws DimensionError above that.
std::optional<IntVector> find_integer_point(const HPolytope& h, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace qip
