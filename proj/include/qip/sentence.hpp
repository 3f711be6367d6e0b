#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qip/linear.hpp"

namespace qip {

enum class Quantifier { exists, forall };

std::string to_string(Quantifier q);
Quantifier parse_quantifier(const std::string& s);

/// One quantifier block. An empty `box` means an unbounded existential block
/// of `dim` integer variables (only allowed innermost).
struct QuantBlock {
  Quantifier q = Quantifier::exists;
  std::optional<Box> box;
  std::size_t dim = 0;

  static QuantBlock over(Quantifier q, Box box);
  static QuantBlock unbounded(std::size_t dim);

  friend bool operator==(const QuantBlock&, const QuantBlock&) = default;
};

/// A polytope given by facets, or by vertices when facet enumeration is out of reach.
using Region = std::variant<HPolytope, VPolytope>;

std::size_t region_dim(const Region& r);

/// Q1 b1 ... Qk bk : (b1, ..., bk) in constraint.
struct QuantSentence {
  std::vector<QuantBlock> blocks;
  Region constraint;

  std::size_t dim() const;
  /// Throws std::invalid_argument when the shape invariants fail.
  void validate() const;

  friend bool operator==(const QuantSentence&, const QuantSentence&) = default;
};

/// Same prefix shape with a disjunction of polytopes as the matrix.
struct UnionSentence {
  std::vector<QuantBlock> blocks;
  std::vector<HPolytope> parts;

  void validate() const;
};

/// Literal u_{block,index} (1-based) or its negation.
struct Literal {
  int block = 1;
  int index = 1;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// Q1 u_1 ... Qk u_k in {0,1}^ell : AND of 3-literal clauses.
struct Q3SatInstance {
  int k = 1;
  int ell = 1;
  std::vector<Quantifier> prefix;
  std::vector<Clause> clauses;

  /// Prefix alternates and ends with exists; every literal is in range.
  void validate() const;

  friend bool operator==(const Q3SatInstance&, const Q3SatInstance&) = default;
};

/// P subset Q in R^3 with #GSA = N - |E1(V \ U)|.
struct ProjectionInstance {
  HPolytope U;
  HPolytope V;
  Integer N;
};

/// exists x in I forall z in K : (x, z) in U1 or U2 or U3.
struct TwoQuantifierInstance {
  std::array<HPolytope, 3> parts;
  Box I;
  Box K;

  UnionSentence as_sentence() const;
};

/// Ordered key/value parameters describing how an artifact was derived.
struct Provenance {
  std::string reduction;
  std::vector<std::pair<std::string, std::string>> params;

  void add(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
};

}  // namespace qip
