// qipc: build, evaluate and cross-check the integer-programming reductions.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qip/errors.hpp"
#include "qip/generate.hpp"
#include "qip/oracle.hpp"
#include "qip/reductions.hpp"
#include "qip/serialize.hpp"

using namespace qip;

namespace {

enum Exit { kPass = 0, kFail = 1, kSkip = 2, kUsage = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return parse_document(json::parse(in));
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void write_document(const std::string& path, const Document& doc) { write_text(path, dump(to_json(doc))); }

std::string gsa_text(const GsaInstance& g) {
  std::ostringstream s;
  s << "alpha=(";
  for (std::size_t i = 0; i < g.alpha.size(); ++i) s << (i ? "," : "") << to_string(g.alpha[i]);
  s << ") N=" << g.N << " eps=" << to_string(g.eps);
  return s.str();
}

std::string q3sat_text(const Q3SatInstance& q) {
  std::ostringstream s;
  for (auto p : q.prefix) s << (p == Quantifier::exists ? 'E' : 'A');
  s << " ell=" << q.ell << " :";
  for (const auto& c : q.clauses) {
    s << " (";
    for (std::size_t i = 0; i < 3; ++i)
      s << (i ? "|" : "") << (c[i].positive ? "" : "~") << "u" << c[i].block << "." << c[i].index;
    s << ")";
  }
  return s.str();
}

Document reduce(const Document& in, const std::string& target) {
  Document out;
  if (in.kind == "gsa") {
    const auto g = in.data.get<GsaInstance>();
    if (target == "eae") {
      auto r = gsa_to_three_quantifiers(g);
      out = {"sentence", r.provenance, r.sentence};
    } else if (target == "proj") {
      auto r = count_gsa_to_projection(g);
      out = {"projection", r.provenance, r.instance};
    } else if (target == "simplices") {
      auto r = count_gsa_to_projection(g);
      auto simplices = complement_to_simplices(r.instance.U, r.instance.V);
      r.provenance.reduction = "gsa-simplices";
      out = {"simplices", r.provenance, json{{"N", r.instance.N}, {"simplices", simplices}}};
    } else if (target == "two-quant") {
      auto r = gsa_to_two_quantifiers(g);
      out = {"two-quant", r.provenance, r.instance};
    } else {
      throw UsageError("target '" + target + "' does not accept a gsa instance");
    }
  } else if (in.kind == "q3sat") {
    if (!target.empty() && target != "qsat") throw UsageError("target '" + target + "' does not accept a q3sat instance");
    auto r = q3sat_to_sentence(in.data.get<Q3SatInstance>());
    out = {"sentence", r.provenance, r.sentence};
  } else if (in.kind == "projection" && target == "simplices") {
    const auto p = in.data.get<ProjectionInstance>();
    Provenance prov = in.provenance;
    prov.reduction = "simplices";
    out = {"simplices", prov, json{{"N", p.N}, {"simplices", complement_to_simplices(p.U, p.V)}}};
  } else {
    throw UsageError("cannot reduce a '" + in.kind + "' document to '" + target + "'");
  }
  return out;
}

int cmd_decide(const Document& d) {
  bool v;
  if (d.kind == "gsa")
    v = gsa_decide(d.data.get<GsaInstance>());
  else if (d.kind == "q3sat")
    v = eval_q3sat(d.data.get<Q3SatInstance>());
  else if (d.kind == "sentence")
    v = eval_sentence(d.data.get<QuantSentence>());
  else if (d.kind == "union-sentence")
    v = eval_union_sentence(d.data.get<UnionSentence>());
  else if (d.kind == "two-quant")
    v = eval_union_sentence(d.data.get<TwoQuantifierInstance>().as_sentence());
  else
    throw UsageError("decide does not handle '" + d.kind + "' documents");
  std::cout << (v ? "true" : "false") << "\n";
  return kPass;
}

int cmd_count(const Document& d) {
  if (d.kind == "gsa") {
    std::cout << gsa_count(d.data.get<GsaInstance>()) << "\n";
  } else if (d.kind == "projection") {
    const auto p = d.data.get<ProjectionInstance>();
    const Integer c = project_count(p.V, p.U);
    std::cout << "projcount " << c << "\nN-projcount " << p.N - c << "\n";
  } else if (d.kind == "simplices") {
    const auto s = d.data.at("simplices").get<std::vector<VPolytope>>();
    const Integer c = project_count_simplices(s);
    std::cout << "projcount " << c << "\nN-projcount " << d.data.at("N").get<Integer>() - c << "\n";
  } else {
    throw UsageError("count does not handle '" + d.kind + "' documents");
  }
  return kPass;
}

struct Verdict {
  bool pass;
  std::string line;
};

Verdict verify_gsa(const GsaInstance& g, const std::string& target) {
  const std::string head = target + " " + gsa_text(g);
  if (target == "eae") {
    const bool a = gsa_decide(g), b = eval_sentence(gsa_to_three_quantifiers(g).sentence);
    return {a == b, head + " decide=" + (a ? "true" : "false") + " sentence=" + (b ? "true" : "false")};
  }
  if (target == "two-quant") {
    const bool a = gsa_decide(g), b = eval_union_sentence(gsa_to_two_quantifiers(g).instance.as_sentence());
    return {a == b, head + " decide=" + (a ? "true" : "false") + " sentence=" + (b ? "true" : "false")};
  }
  if (target == "proj" || target == "simplices") {
    const auto r = count_gsa_to_projection(g);
    const Integer count = gsa_count(g);
    const Integer pc = target == "proj" ? project_count(r.instance.V, r.instance.U)
                                        : project_count_simplices(complement_to_simplices(r.instance.U, r.instance.V));
    return {g.N - pc == count, head + " count=" + count.get_str() + " N-projcount=" + Integer(g.N - pc).get_str()};
  }
  throw UsageError("verify: target '" + target + "' does not accept a gsa instance");
}

Verdict verify_q3sat(const Q3SatInstance& q) {
  const bool a = eval_q3sat(q), b = eval_sentence(q3sat_to_sentence(q).sentence);
  return {a == b, "qsat " + q3sat_text(q) + " qbf=" + (a ? "true" : "false") + " sentence=" + (b ? "true" : "false")};
}

int report(const Verdict& v) {
  std::cout << (v.pass ? "PASS " : "FAIL ") << v.line << "\n";
  return v.pass ? kPass : kFail;
}

int cmd_verify(const Document& d, const std::string& target) {
  if (d.kind == "gsa") {
    if (target.empty()) throw UsageError("verify: a gsa instance needs --target");
    return report(verify_gsa(d.data.get<GsaInstance>(), target));
  }
  if (d.kind == "q3sat") {
    if (!target.empty() && target != "qsat") throw UsageError("verify: target '" + target + "' does not accept a q3sat instance");
    return report(verify_q3sat(d.data.get<Q3SatInstance>()));
  }
  throw UsageError("verify expects a gsa or q3sat instance, got '" + d.kind + "'");
}

int cmd_sweep(const std::string& grid, std::uint64_t seed) {
  if (grid != "small") throw UsageError("unknown grid '" + grid + "'");
  std::size_t trials = 0, passed = 0, skipped = 0;
  auto run = [&](const std::function<Verdict()>& f) {
    ++trials;
    try {
      const Verdict v = f();
      if (v.pass)
        ++passed;
      else
        std::cout << "FAIL " << v.line << "\n";
    } catch (const BudgetExceeded& e) {
      ++skipped;
      std::cout << "SKIP " << e.what() << "\n";
    }
  };
  const Rational eps[] = {Rational(1, 4), Rational(1, 3)};
  for (long den = 2; den <= 4; ++den)
    for (long p = 0; p < den; ++p)
      for (long N = 1; N <= 6; ++N)
        for (const auto& e : eps) {
          const GsaInstance g{{make_rational(p, den), make_rational(1, den)}, N, e};
          for (const char* t : {"eae", "proj", "two-quant"}) run([&] { return verify_gsa(g, t); });
        }
  Rng rng(seed);
  for (int i = 0; i < 20; ++i) {
    const auto q = random_q3sat(rng, 1, 1 + static_cast<int>(rng.below(2)), 1 + rng.below(3));
    run([&] { return verify_q3sat(q); });
  }
  std::cout << (passed + skipped == trials ? "PASS " : "FAIL ") << passed << "/" << trials << " passed, " << skipped
            << " skipped\n";
  if (passed + skipped != trials) return kFail;
  return skipped ? kSkip : kPass;
}

int cmd_export(const Document& d, const std::string& format, const std::string& out) {
  if (d.kind != "sentence") throw UsageError("export expects a sentence document");
  const auto s = d.data.get<QuantSentence>();
  if (format == "native-json")
    write_document(out, {d.kind, d.provenance, s});
  else if (format == "smtlib2-lia")
    write_text(out, to_smtlib2(s));
  else
    throw UsageError("unknown format '" + format + "'");
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduction compiler and brute-force checker for quantified integer programs"};
  app.require_subcommand(1);

  std::string kind, output, input, target, format = "native-json", grid = "small";
  std::uint64_t seed = 1;
  std::size_t d = 2, clauses = 3;
  std::string N = "10", eps;
  long den = 8;
  int k = 1, ell = 2;

  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("kind", kind, "gsa or q3sat")->required()->check(CLI::IsMember({"gsa", "q3sat"}));
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--d", d, "GSA dimension")->check(CLI::Range(1, 16));
  gen->add_option("--N", N, "GSA bound");
  gen->add_option("--den", den, "largest alpha denominator")->check(CLI::Range(1L, 1000000L));
  gen->add_option("--eps", eps, "GSA tolerance p/q (default: drawn from 1/6, 1/4, 1/3)");
  gen->add_option("--k", k, "quantifier blocks")->check(CLI::Range(1, 6));
  gen->add_option("--ell", ell, "Booleans per block")->check(CLI::Range(1, 10));
  gen->add_option("--clauses", clauses, "number of clauses")->check(CLI::Range(1, 64));
  gen->add_option("-o,--output", output, "output file (default stdout)");

  auto* red = app.add_subcommand("reduce", "Compile an instance into a sentence or projection instance");
  red->add_option("input", input)->required();
  red->add_option("--target", target)->required()->check(CLI::IsMember({"eae", "qsat", "proj", "simplices", "two-quant"}));
  red->add_option("-o,--output", output);

  auto* dec = app.add_subcommand("decide", "Evaluate an instance or sentence by enumeration");
  dec->add_option("input", input)->required();

  auto* cnt = app.add_subcommand("count", "Count GSA solutions or projected complement points");
  cnt->add_option("input", input)->required();

  auto* ver = app.add_subcommand("verify", "Run a reduction and compare both oracles");
  ver->add_option("input", input);
  ver->add_option("--target", target)->check(CLI::IsMember({"eae", "qsat", "proj", "simplices", "two-quant"}));
  auto* sweep = ver->add_subcommand("sweep", "Verify every reduction over a built-in grid");
  sweep->add_option("--grid", grid);
  sweep->add_option("--seed", seed);

  auto* exp = app.add_subcommand("export", "Render a sentence for other solvers");
  exp->add_option("input", input)->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"native-json", "smtlib2-lia"}));
  exp->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*gen) {
      Rng rng(seed);
      if (kind == "gsa") {
        const GsaInstance g = random_gsa(rng, d, parse_integer(N), den, eps.empty() ? Rational(0) : parse_rational(eps));
        write_document(output, {"gsa", {}, g});
      } else {
        write_document(output, {"q3sat", {}, random_q3sat(rng, k, ell, clauses)});
      }
      return kPass;
    }
    if (*red) {
      write_document(output, reduce(read_document(input), target));
      return kPass;
    }
    if (*dec) return cmd_decide(read_document(input));
    if (*cnt) return cmd_count(read_document(input));
    if (*ver) {
      if (*sweep) return cmd_sweep(grid, seed);
      if (input.empty()) throw UsageError("verify needs an instance file");
      return cmd_verify(read_document(input), target);
    }
    if (*exp) return cmd_export(read_document(input), format, output);
  } catch (const BudgetExceeded& e) {
    std::cout << "SKIP " << e.what() << " at " << e.where() << "\n";
    return kSkip;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed document: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
