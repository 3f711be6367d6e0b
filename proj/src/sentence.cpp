#include "qip/sentence.hpp"

#include <stdexcept>

namespace qip {

std::string to_string(Quantifier q) { return q == Quantifier::exists ? "exists" : "forall"; }

Quantifier parse_quantifier(const std::string& s) {
  if (s == "exists") return Quantifier::exists;
  if (s == "forall") return Quantifier::forall;
  throw std::invalid_argument("unknown quantifier '" + s + "'");
}

QuantBlock QuantBlock::over(Quantifier q, Box box) {
  QuantBlock b;
  b.q = q;
  b.dim = box.dim();
  b.box = std::move(box);
  return b;
}

QuantBlock QuantBlock::unbounded(std::size_t dim) {
  QuantBlock b;
  b.q = Quantifier::exists;
  b.dim = dim;
  return b;
}

std::size_t region_dim(const Region& r) {
  return std::visit([](const auto& p) { return p.dim; }, r);
}

namespace {

std::size_t check_blocks(const std::vector<QuantBlock>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("sentence without quantifier blocks");
  std::size_t total = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (b.dim == 0) throw std::invalid_argument("empty quantifier block");
    if (b.box) {
      if (b.box->dim() != b.dim) throw std::invalid_argument("block box dimension mismatch");
    } else {
      if (b.q != Quantifier::exists) throw std::invalid_argument("unbounded block must be existential");
      if (i + 1 != blocks.size()) throw std::invalid_argument("unbounded block must be innermost");
    }
    total += b.dim;
  }
  return total;
}

}  // namespace

std::size_t QuantSentence::dim() const {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.dim;
  return total;
}

void QuantSentence::validate() const {
  const std::size_t total = check_blocks(blocks);
  if (total != region_dim(constraint))
    throw std::invalid_argument("block dimensions sum to " + std::to_string(total) + " but the constraint has dim " +
                                std::to_string(region_dim(constraint)));
}

void UnionSentence::validate() const {
  const std::size_t total = check_blocks(blocks);
  if (parts.empty()) throw std::invalid_argument("union sentence without parts");
  for (const auto& p : parts)
    if (p.dim != total) throw std::invalid_argument("union part dimension mismatch");
}

void Q3SatInstance::validate() const {
  if (k < 1) throw std::invalid_argument("Q3SAT needs k >= 1");
  if (ell < 1) throw std::invalid_argument("Q3SAT needs ell >= 1");
  if (ell > 30) throw std::invalid_argument("Q3SAT ell too large");
  if (prefix.size() != static_cast<std::size_t>(k)) throw std::invalid_argument("Q3SAT prefix length != k");
  if (prefix.back() != Quantifier::exists) throw std::invalid_argument("Q3SAT innermost quantifier must be exists");
  for (std::size_t j = 1; j < prefix.size(); ++j)
    if (prefix[j] == prefix[j - 1]) throw std::invalid_argument("Q3SAT prefix must alternate");
  if (clauses.empty()) throw std::invalid_argument("Q3SAT needs at least one clause");
  for (const auto& c : clauses)
    for (const auto& lit : c)
      if (lit.block < 1 || lit.block > k || lit.index < 1 || lit.index > ell)
        throw std::invalid_argument("literal u_" + std::to_string(lit.block) + "," + std::to_string(lit.index) +
                                    " out of range");
}

UnionSentence TwoQuantifierInstance::as_sentence() const {
  UnionSentence s;
  s.blocks = {QuantBlock::over(Quantifier::exists, I), QuantBlock::over(Quantifier::forall, K)};
  s.parts.assign(parts.begin(), parts.end());
  return s;
}

}  // namespace qip
