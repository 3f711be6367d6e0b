#pragma once

// JSON forms of the domain types. Arbitrary-precision numbers travel as
// decimal strings, rationals as {"num", "den"}; dimensions and small counts
// are plain JSON numbers.

#include <string>
#include <vector>

#include "json.hpp"
#include "qip/gsa.hpp"
#include "qip/sentence.hpp"

namespace nlohmann {

template <>
struct adl_serializer<mpz_class> {
  static void to_json(json& j, const mpz_class& v);
  static void from_json(const json& j, mpz_class& v);
};

template <>
struct adl_serializer<mpq_class> {
  static void to_json(json& j, const mpq_class& v);
  static void from_json(const json& j, mpq_class& v);
};

}  // namespace nlohmann

namespace qip {

using json = nlohmann::json;

void to_json(json& j, const LinearInequality& r);
void from_json(const json& j, LinearInequality& r);
void to_json(json& j, const HPolytope& h);
void from_json(const json& j, HPolytope& h);
void to_json(json& j, const VPolytope& v);
void from_json(const json& j, VPolytope& v);
void to_json(json& j, const Box& b);
void from_json(const json& j, Box& b);
void to_json(json& j, const QuantBlock& b);
void from_json(const json& j, QuantBlock& b);
void to_json(json& j, const QuantSentence& s);
void from_json(const json& j, QuantSentence& s);
void to_json(json& j, const UnionSentence& s);
void from_json(const json& j, UnionSentence& s);
void to_json(json& j, const GsaInstance& g);
void from_json(const json& j, GsaInstance& g);
void to_json(json& j, const Literal& l);
void from_json(const json& j, Literal& l);
void to_json(json& j, const Q3SatInstance& q);
void from_json(const json& j, Q3SatInstance& q);
void to_json(json& j, const ProjectionInstance& p);
void from_json(const json& j, ProjectionInstance& p);
void to_json(json& j, const TwoQuantifierInstance& t);
void from_json(const json& j, TwoQuantifierInstance& t);
void to_json(json& j, const Provenance& p);
void from_json(const json& j, Provenance& p);

/// A file: {"kind": ..., "provenance": {...}, "data": {...}}.
struct Document {
  std::string kind;
  Provenance provenance;
  json data;
};

json to_json(const Document& doc);
Document parse_document(const json& j);

/// Pretty-printed with a trailing newline; equal inputs give identical bytes.
std::string dump(const json& j);

/// Quantified linear integer arithmetic in SMT-LIB 2. Vertex-form
/// constraints are rejected with std::invalid_argument.
std::string to_smtlib2(const QuantSentence& s);

}  // namespace qip
