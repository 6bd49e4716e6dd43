#include "tp/zoo.hpp"

#include "tp/parser.hpp"

namespace tp {

namespace {

Definition def(const char* name, const char* text) { return {name, parse_formula(text)}; }

RuleParams formula_param(const Formula& f) {
  RuleParams p;
  p.formula = f;
  return p;
}

}  // namespace

Definition make_liar() { return def("lam", "~T(quote(lam))"); }
Definition make_negated_liar() { return {"nlam", negate(make_liar().definiens)}; }
Definition make_truthteller() { return def("tau", "T(quote(tau))"); }
Definition make_curry() { return def("kappa", "~T(quote(kappa)) | 0 = 1"); }
Definition make_mcgee() { return def("mu", "ex x. ~T(iterT(x, quote(mu)))"); }
Definition make_gupta() { return def("gamma", "all x. (T(x) | ~T(x))"); }
Definition make_revenge() { return def("rho", "~T(quote(rho)) | P(quote(rho))"); }

Environment zoo_environment(const ZooSpec& spec) {
  std::vector<Definition> defs = {make_liar(),  make_negated_liar(), make_truthteller(),
                                  make_curry(), make_mcgee(),        make_gupta(),
                                  make_revenge()};
  auto lookup = [&](const std::string& name) {
    for (const auto& d : defs) {
      if (d.name == name) return d.definiens;
    }
    throw Error(ErrorKind::UndefinedName, name);
  };
  const Formula lam = lookup("lam");
  defs.push_back({"lam_and_true", Formula::conj(lam, parse_formula("0 = 0"))});
  defs.push_back({"lam_and_false", Formula::conj(lam, parse_formula("0 = 1"))});
  for (const char* name : {"lam", "tau", "kappa", "mu", "gamma", "rho"}) {
    Formula f = lookup(name);
    defs.push_back({std::string("lem_") + name, Formula::disj(f, negate(f))});
  }
  defs.push_back(def("plam", "P(quote(lam))"));
  defs.push_back(def("pp_lam", "P(quote(plam))"));
  defs.push_back({"lem_plam", parse_formula("P(quote(lam)) | ~P(quote(lam))")});
  return Environment(std::move(defs), spec.domain, spec.mcgee_k);
}

const std::vector<ZooExpectation>& zoo_expectations() {
  using K = Classification::Kind;
  static const std::vector<ZooExpectation> table = {
      {"lam", {K::Paradoxical, 1}},  {"nlam", {K::Paradoxical, 1}},
      {"kappa", {K::Paradoxical, 1}}, {"lam_and_true", {K::Paradoxical, 2}},
      {"lam_and_false", {K::False}},  {"tau", {K::Independent}},
      {"mu", {K::Independent}},       {"gamma", {K::Independent}},
      {"rho", {K::Independent}},
  };
  return table;
}

std::vector<CorpusEntry> zoo_corpus(std::shared_ptr<const Environment> env) {
  std::vector<CorpusEntry> out;
  const Formula lam = parse_formula("~T(quote(lam))");
  RuleParams t;
  t.term = parse_term("quote(lam)");

  out.push_back({"p_not_pp_lam.json", expand_macro("p-not-pp", t, env), System::TP, false, true, true});
  out.push_back({"not_p_not_pp_lam.json", expand_macro("not-p-not-pp", t, env), System::TP, false,
                 true, true});
  out.push_back({"p_implies_not_tlem_lam.json",
                 expand_macro("p-implies-not-tlem", formula_param(lam), env), System::TP, false,
                 true, true});
  RuleParams atomic = formula_param(parse_formula("T(quote(lam))"));
  atomic.dir = "lr";
  out.push_back({"p_neg_equiv_tlam.json", expand_macro("p-neg-equiv", atomic, env), System::TP,
                 false, true, true});
  out.push_back({"negative_control.json",
                 expand_macro("negative-control", formula_param(lam), env), System::TP, true, true,
                 false});

  {
    // R-all with its eigenvariable free in the conclusion.
    Formula tx = parse_formula("T(x)");
    ProofTree init{Rule::Axiom, formula_param(tx), {{tx}, {tx}}, {}};
    init.params.schema = "init";
    RuleParams p = formula_param(parse_formula("all y. T(y)"));
    p.eigenvariable = "x";
    ProofTree root{Rule::Rall, p, {{tx}, {*p.formula}}, {init}};
    out.push_back({"bad_eigenvariable.json", root, System::SK, false, false, false});
  }
  {
    RuleParams r;
    r.term = parse_term("x");
    ProofTree ref{Rule::Ref, r, {{}, {parse_formula("x = x")}}, {}};
    RuleParams p = formula_param(parse_formula("all x. x = x"));
    p.eigenvariable = "x";
    ProofTree root{Rule::Rall, p, {{}, {*p.formula}}, {ref}};
    out.push_back({"all_reflexive.json", root, System::SK, false, true, true});
  }
  {
    RuleParams r;
    r.term = parse_term("S(u)");
    ProofTree ref{Rule::Ref, r, {{parse_formula("u = u")}, {parse_formula("S(u) = S(u)")}}, {}};
    RuleParams p = formula_param(parse_formula("x = x"));
    p.variable = "x";
    p.eigenvariable = "u";
    p.term = parse_term("5");
    ProofTree root{Rule::IND, p, {{parse_formula("0 = 0")}, {parse_formula("5 = 5")}}, {ref}};
    out.push_back({"induction.json", root, System::PASK, false, true, true});
  }
  {
    ProofTree root{Rule::Arith, {}, {{parse_formula("S(0) = 0")}, {parse_formula("2 + 2 = 4")}}, {}};
    out.push_back({"arithmetic.json", root, System::PASK, false, true, true});
  }
  return out;
}

}  // namespace tp
