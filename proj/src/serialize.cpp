#include "qip/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace nlohmann {

void adl_serializer<mpz_class>::to_json(json& j, const mpz_class& v) { j = v.get_str(); }

void adl_serializer<mpz_class>::from_json(const json& j, mpz_class& v) {
  if (j.is_number_integer()) {
    v = mpz_class(std::to_string(j.get<long long>()));
    return;
  }
  v = qip::parse_integer(j.get<std::string>());
}

void adl_serializer<mpq_class>::to_json(json& j, const mpq_class& v) {
  mpq_class c = v;
  c.canonicalize();
  j = json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

void adl_serializer<mpq_class>::from_json(const json& j, mpq_class& v) {
  if (j.is_object()) {
    v = qip::make_rational(j.at("num").get<mpz_class>(), j.at("den").get<mpz_class>());
    return;
  }
  if (j.is_string()) {
    v = qip::parse_rational(j.get<std::string>());
    return;
  }
  v = mpq_class(j.get<mpz_class>());
}

}  // namespace nlohmann

namespace qip {

void to_json(json& j, const LinearInequality& r) {
  if (r.strict) throw std::invalid_argument("strict rows are not serialized");
  j = json{{"coeffs", r.coeffs}, {"rhs", r.rhs}};
}

void from_json(const json& j, LinearInequality& r) {
  r.coeffs = j.at("coeffs").get<IntVector>();
  r.rhs = j.at("rhs").get<Integer>();
  r.strict = false;
}

void to_json(json& j, const HPolytope& h) { j = json{{"dim", h.dim}, {"rows", h.rows}}; }

void from_json(const json& j, HPolytope& h) {
  h = HPolytope(j.at("dim").get<std::size_t>(), j.at("rows").get<std::vector<LinearInequality>>());
}

void to_json(json& j, const VPolytope& v) { j = json{{"dim", v.dim}, {"vertices", v.vertices}}; }

void from_json(const json& j, VPolytope& v) {
  v = VPolytope(j.at("dim").get<std::size_t>(), j.at("vertices").get<std::vector<RatVector>>());
}

void to_json(json& j, const Box& b) { j = json{{"lo", b.lo}, {"hi", b.hi}}; }

void from_json(const json& j, Box& b) { b = Box(j.at("lo").get<IntVector>(), j.at("hi").get<IntVector>()); }

void to_json(json& j, const QuantBlock& b) {
  j = json{{"q", to_string(b.q)}};
  if (b.box)
    j["box"] = *b.box;
  else
    j["unbounded"] = b.dim;
}

void from_json(const json& j, QuantBlock& b) {
  const Quantifier q = parse_quantifier(j.at("q").get<std::string>());
  if (j.contains("box")) {
    b = QuantBlock::over(q, j.at("box").get<Box>());
  } else {
    if (q != Quantifier::exists) throw std::invalid_argument("unbounded block must be existential");
    b = QuantBlock::unbounded(j.at("unbounded").get<std::size_t>());
  }
}

namespace {

json region_json(const Region& r) {
  return std::visit([](const auto& p) { return json(p); }, r);
}

Region region_from(const json& j) {
  if (j.contains("vertices")) return j.get<VPolytope>();
  return j.get<HPolytope>();
}

}  // namespace

void to_json(json& j, const QuantSentence& s) { j = json{{"blocks", s.blocks}, {"constraint", region_json(s.constraint)}}; }

void from_json(const json& j, QuantSentence& s) {
  s.blocks = j.at("blocks").get<std::vector<QuantBlock>>();
  s.constraint = region_from(j.at("constraint"));
  s.validate();
}

void to_json(json& j, const UnionSentence& s) { j = json{{"blocks", s.blocks}, {"parts", s.parts}}; }

void from_json(const json& j, UnionSentence& s) {
  s.blocks = j.at("blocks").get<std::vector<QuantBlock>>();
  s.parts = j.at("parts").get<std::vector<HPolytope>>();
  s.validate();
}

void to_json(json& j, const GsaInstance& g) { j = json{{"alpha", g.alpha}, {"N", g.N}, {"eps", g.eps}}; }

void from_json(const json& j, GsaInstance& g) {
  g.alpha = j.at("alpha").get<RatVector>();
  g.N = j.at("N").get<Integer>();
  g.eps = j.at("eps").get<Rational>();
  normalize(g);
}

void to_json(json& j, const Literal& l) { j = json{{"block", l.block}, {"index", l.index}, {"positive", l.positive}}; }

void from_json(const json& j, Literal& l) {
  l.block = j.at("block").get<int>();
  l.index = j.at("index").get<int>();
  l.positive = j.at("positive").get<bool>();
}

void to_json(json& j, const Q3SatInstance& q) {
  std::vector<std::string> prefix;
  for (auto p : q.prefix) prefix.push_back(to_string(p));
  json clauses = json::array();
  for (const auto& c : q.clauses) clauses.push_back(json(std::vector<Literal>(c.begin(), c.end())));
  j = json{{"k", q.k}, {"ell", q.ell}, {"prefix", prefix}, {"clauses", clauses}};
}

void from_json(const json& j, Q3SatInstance& q) {
  q.k = j.at("k").get<int>();
  q.ell = j.at("ell").get<int>();
  q.prefix.clear();
  for (const auto& p : j.at("prefix")) q.prefix.push_back(parse_quantifier(p.get<std::string>()));
  q.clauses.clear();
  for (const auto& c : j.at("clauses")) {
    const auto lits = c.get<std::vector<Literal>>();
    if (lits.size() != 3) throw std::invalid_argument("clause must have exactly three literals");
    q.clauses.push_back({lits[0], lits[1], lits[2]});
  }
  q.validate();
}

void to_json(json& j, const ProjectionInstance& p) { j = json{{"U", p.U}, {"V", p.V}, {"N", p.N}}; }

void from_json(const json& j, ProjectionInstance& p) {
  p.U = j.at("U").get<HPolytope>();
  p.V = j.at("V").get<HPolytope>();
  p.N = j.at("N").get<Integer>();
}

void to_json(json& j, const TwoQuantifierInstance& t) {
  j = json{{"parts", std::vector<HPolytope>(t.parts.begin(), t.parts.end())}, {"I", t.I}, {"K", t.K}};
}

void from_json(const json& j, TwoQuantifierInstance& t) {
  const auto parts = j.at("parts").get<std::vector<HPolytope>>();
  if (parts.size() != 3) throw std::invalid_argument("two-quantifier instance needs three parts");
  t.parts = {parts[0], parts[1], parts[2]};
  t.I = j.at("I").get<Box>();
  t.K = j.at("K").get<Box>();
}

void to_json(json& j, const Provenance& p) {
  json params = json::array();
  for (const auto& [k, v] : p.params) params.push_back(json::array({k, v}));
  j = json{{"reduction", p.reduction}, {"params", params}};
}

void from_json(const json& j, Provenance& p) {
  p.reduction = j.at("reduction").get<std::string>();
  p.params.clear();
  for (const auto& kv : j.at("params")) p.add(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
}

json to_json(const Document& doc) {
  json j{{"kind", doc.kind}, {"data", doc.data}};
  if (!doc.provenance.reduction.empty()) j["provenance"] = doc.provenance;
  return j;
}

Document parse_document(const json& j) {
  Document d;
  d.kind = j.at("kind").get<std::string>();
  d.data = j.at("data");
  if (j.contains("provenance")) d.provenance = j.at("provenance").get<Provenance>();
  return d;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string smt_int(const Integer& v) { return v < 0 ? "(- " + Integer(-v).get_str() + ")" : v.get_str(); }

std::string smt_row(const LinearInequality& r, const std::vector<std::string>& names) {
  std::vector<std::string> terms;
  for (std::size_t c = 0; c < r.coeffs.size(); ++c) {
    if (r.coeffs[c] == 0) continue;
    if (r.coeffs[c] == 1)
      terms.push_back(names[c]);
    else
      terms.push_back("(* " + smt_int(r.coeffs[c]) + " " + names[c] + ")");
  }
  std::string lhs;
  if (terms.empty())
    lhs = "0";
  else if (terms.size() == 1)
    lhs = terms.front();
  else {
    lhs = "(+";
    for (const auto& t : terms) lhs += " " + t;
    lhs += ")";
  }
  return "(<= " + lhs + " " + smt_int(r.rhs) + ")";
}

std::string smt_and(const std::vector<std::string>& parts) {
  if (parts.empty()) return "true";
  if (parts.size() == 1) return parts.front();
  std::string s = "(and";
  for (const auto& p : parts) s += "\n  " + p;
  return s + ")";
}

}  // namespace

std::string to_smtlib2(const QuantSentence& s) {
  s.validate();
  const auto* h = std::get_if<HPolytope>(&s.constraint);
  if (!h) throw std::invalid_argument("smtlib2 export needs a facet-form constraint");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < h->dim; ++i) names.push_back("x" + std::to_string(i));

  std::vector<std::string> rows;
  for (const auto& r : h->rows) rows.push_back(smt_row(r, names));
  std::string body = smt_and(rows);

  std::size_t end = h->dim;
  for (std::size_t b = s.blocks.size(); b-- > 0;) {
    const QuantBlock& blk = s.blocks[b];
    const std::size_t begin = end - blk.dim;
    std::string vars;
    std::vector<std::string> bounds;
    for (std::size_t c = begin; c < end; ++c) {
      vars += (c == begin ? "" : " ") + std::string("(") + names[c] + " Int)";
      if (blk.box) {
        bounds.push_back("(<= " + smt_int(blk.box->lo[c - begin]) + " " + names[c] + ")");
        bounds.push_back("(<= " + names[c] + " " + smt_int(blk.box->hi[c - begin]) + ")");
      }
    }
    if (blk.q == Quantifier::exists) {
      bounds.push_back(body);
      body = "(exists (" + vars + ")\n" + smt_and(bounds) + ")";
    } else {
      body = "(forall (" + vars + ")\n(=> " + smt_and(bounds) + "\n" + body + "))";
    }
    end = begin;
  }

  std::ostringstream out;
  out << "(set-logic LIA)\n(assert\n" << body << ")\n(check-sat)\n(exit)\n";
  return out.str();
}

}  // namespace qip
