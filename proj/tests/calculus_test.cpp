#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tp/calculus.hpp"
#include "tp/zoo.hpp"

using namespace tp;

namespace {

std::shared_ptr<const Environment> env_of(const char* text) {
  return std::make_shared<const Environment>(Environment::parse(text));
}

std::shared_ptr<const Environment> liar_env() { return env_of("#domain 4\nlam := ~T(quote(lam))\n"); }

Formula f(const char* text) { return parse_formula(text); }

Sequent sq(std::initializer_list<const char*> ant, std::initializer_list<const char*> suc) {
  Sequent s;
  for (auto a : ant) s.ant.insert(f(a));
  for (auto b : suc) s.suc.insert(f(b));
  return s;
}

RuleParams with(const char* formula) {
  RuleParams p;
  p.formula = f(formula);
  return p;
}

ProofTree init(const char* formula) {
  RuleParams p = with(formula);
  p.schema = "init";
  return {Rule::Axiom, p, sq({formula}, {formula}), {}};
}

bool accepted(const ProofTree& p, System s = System::TP, bool extra = false,
              std::shared_ptr<const Environment> env = liar_env()) {
  Verdict v = check_proof(p, env, {s, extra});
  return v.accepted;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::filesystem::path kSource = TP_SOURCE_DIR;

}  // namespace

TEST_CASE("axiom instances") {
  auto env = liar_env();
  CodingTable table(env);
  auto canon = [&](const char* text) { return canonicalize_growing(f(text), table); };

  RuleParams lam = with("~T(quote(lam))");
  Sequent i1 = instantiate_axiom("I1", lam, table);
  CHECK(i1.ant == std::set<Formula>{canon("T(<~T(quote(lam)) | T(quote(lam))>)")});
  CHECK(i1.suc == std::set<Formula>{canon("~P(quote(lam))")});

  RuleParams eq;
  eq.term = Term::numeral(0);
  eq.term2 = Term::numeral(0);
  eq.dir = "lr";
  Sequent t1 = instantiate_axiom("T1eq", eq, table);
  CHECK(t1.ant == std::set<Formula>{f("0 = 0")});
  CHECK(t1.suc == std::set<Formula>{canon("T(<0 = 0>)")});
  eq.dir = "rl";
  CHECK(instantiate_axiom("T1eq", eq, table).ant == t1.suc);

  Sequent id = instantiate_axiom("init", with("0 = 1 | T(2)"), table);
  CHECK(id.ant == id.suc);

  // Pi shows up as 0 = 0 or 0 = 1
  CHECK(*instantiate_axiom("P1", lam, table).ant.begin() == f("0 = 0"));
  CHECK(*instantiate_axiom("P1", with("0 = 0"), table).ant.begin() == f("0 = 1"));

  RuleParams t;
  t.term = Term::quote("lam");
  CHECK(instantiate_axiom("notPP", t, table).suc == std::set<Formula>{canon("~P(<P(quote(lam))>)")});

  CHECK_THROWS_AS(instantiate_axiom("T9", lam, table), Error);
  CHECK_THROWS_AS(instantiate_axiom("I1", with("T(x)"), table), Error);
  CHECK_THROWS_AS(instantiate_axiom("T4and", with("0 = 0"), table), Error);
  RuleParams nodir = with("~T(quote(lam))");
  CHECK_THROWS_AS(instantiate_axiom("T3neg", nodir, table), Error);
}

TEST_CASE("schema table") {
  CHECK(find_schema("init")->system == System::SK);
  CHECK(find_schema("T3T")->system == System::TP);
  CHECK(find_schema("notPP")->system == System::TPPlus);
  CHECK(find_schema("I1contra")->extra);
  CHECK(find_schema("nope") == nullptr);
  for (const auto& s : axiom_schemas()) CHECK(find_schema(s.name) == &s);
}

TEST_CASE("structural rules") {
  CHECK(accepted(init("T(0)"), System::SK));

  ProofTree lneg{Rule::Lneg, with("T(0)"), sq({"T(0)", "~T(0)"}, {}), {init("T(0)")}};
  CHECK(accepted(lneg, System::SK));
  ProofTree bad_lneg{Rule::Lneg, with("T(0)"), sq({"~T(0)"}, {"T(0)"}), {init("T(0)")}};
  CHECK_FALSE(accepted(bad_lneg, System::SK));

  ProofTree lw{Rule::LW, with("0 = 1"), sq({"T(0)", "0 = 1"}, {"T(0)"}), {init("T(0)")}};
  ProofTree rw{Rule::RW, with("P(2)"), sq({"T(0)"}, {"T(0)", "P(2)"}), {init("T(0)")}};
  CHECK(accepted(lw, System::SK));
  CHECK(accepted(rw, System::SK));

  ProofTree cut{Rule::Cut, with("T(0)"), sq({"T(0)"}, {"T(0)"}), {init("T(0)"), init("T(0)")}};
  CHECK(accepted(cut, System::SK));
  ProofTree one_premise{Rule::Cut, with("T(0)"), sq({"T(0)"}, {"T(0)"}), {init("T(0)")}};
  Verdict v = check_proof(one_premise, liar_env(), {System::SK});
  CHECK_FALSE(v.accepted);
  REQUIRE(v.diagnostics.size() == 1);
  CHECK(v.diagnostics[0].path == "root");
}

TEST_CASE("canonical forms are interchangeable in proofs") {
  // T(0), T(quote(lam)) and T(<~T(quote(lam))>) are the same sentence
  ProofTree p = init("T(0)");
  p.conclusion = sq({"T(quote(lam))"}, {"T(<~T(quote(lam))>)"});
  CHECK(accepted(p, System::SK));
}

TEST_CASE("propositional rules") {
  ProofTree ror{Rule::Ror, with("T(0) | P(1)"), sq({"T(0)"}, {"T(0) | P(1)"}),
                {ProofTree{Rule::RW, with("P(1)"), sq({"T(0)"}, {"T(0)", "P(1)"}), {init("T(0)")}}}};
  CHECK(accepted(ror, System::SK));

  ProofTree land{Rule::Land, with("T(0) & P(1)"), sq({"T(0) & P(1)"}, {"T(0)"}),
                 {ProofTree{Rule::LW, with("P(1)"), sq({"T(0)", "P(1)"}, {"T(0)"}), {init("T(0)")}}}};
  CHECK(accepted(land, System::SK));

  ProofTree rand{Rule::Rand, with("T(0) & T(0)"), sq({"T(0)"}, {"T(0) & T(0)"}), {init("T(0)"), init("T(0)")}};
  CHECK(accepted(rand, System::SK));

  ProofTree lor{Rule::Lor, with("T(0) | P(1)"), sq({"T(0) | P(1)"}, {"T(0)", "P(1)"}),
                {ProofTree{Rule::RW, with("P(1)"), sq({"T(0)"}, {"T(0)", "P(1)"}), {init("T(0)")}},
                 ProofTree{Rule::RW, with("T(0)"), sq({"P(1)"}, {"T(0)", "P(1)"}), {init("P(1)")}}}};
  CHECK(accepted(lor, System::SK));

  ProofTree wrong_kind{Rule::Ror, with("T(0) & P(1)"), sq({"T(0)"}, {"T(0) & P(1)"}), {init("T(0)")}};
  CHECK_FALSE(accepted(wrong_kind, System::SK));
}

TEST_CASE("quantifier rules and eigenvariables") {
  RuleParams rall = with("all x. x = x");
  rall.eigenvariable = "u";
  RuleParams ref;
  ref.term = Term::variable("u");
  ProofTree good{Rule::Rall, rall, sq({}, {"all x. x = x"}), {ProofTree{Rule::Ref, ref, sq({}, {"u = u"}), {}}}};
  CHECK(accepted(good, System::SK));

  RuleParams bad = with("all y. T(y)");
  bad.eigenvariable = "x";
  ProofTree violating{Rule::Rall, bad, sq({"T(x)"}, {"all y. T(y)"}), {init("T(x)")}};
  Verdict v = check_proof(violating, liar_env(), {System::SK});
  CHECK_FALSE(v.accepted);
  REQUIRE(v.diagnostics.size() == 1);
  CHECK(v.diagnostics[0].path == "root");
  CHECK(v.diagnostics[0].message.find("eigenvariable") != std::string::npos);

  RuleParams lall = with("all x. T(x)");
  lall.term = Term::numeral(2);
  ProofTree left{Rule::Lall, lall, sq({"all x. T(x)"}, {"T(2)"}), {init("T(2)")}};
  CHECK(accepted(left, System::SK));

  RuleParams rex = with("ex x. T(x)");
  rex.term = Term::numeral(2);
  ProofTree right{Rule::Rex, rex, sq({"T(2)"}, {"ex x. T(x)"}), {init("T(2)")}};
  CHECK(accepted(right, System::SK));

  RuleParams lex = with("ex x. T(x)");
  lex.eigenvariable = "u";
  ProofTree lex_bad{Rule::Lex, lex, sq({"ex x. T(x)"}, {"T(u)"}), {init("T(u)")}};
  CHECK_FALSE(accepted(lex_bad, System::SK));
}

TEST_CASE("equality rules") {
  RuleParams ref;
  ref.term = Term::numeral(3);
  CHECK(accepted(ProofTree{Rule::Ref, ref, sq({"T(0)"}, {"3 = 3", "P(1)"}), {}}, System::SK));
  CHECK_FALSE(accepted(ProofTree{Rule::Ref, ref, sq({}, {"3 = 4"}), {}}, System::SK));

  RuleParams repl = with("T(x)");
  repl.variable = "x";
  repl.term = Term::numeral(1);
  repl.term2 = Term::numeral(2);
  ProofTree r{Rule::Repl, repl, sq({"T(2)"}, {"1 != 2", "T(1)"}), {init("T(2)")}};
  CHECK(accepted(r, System::SK));
  ProofTree flipped{Rule::Repl, repl, sq({"T(2)"}, {"2 != 1", "T(1)"}), {init("T(2)")}};
  CHECK_FALSE(accepted(flipped, System::SK));
}

TEST_CASE("arithmetic rules need PA") {
  ProofTree arith{Rule::Arith, {}, sq({}, {"2 + 2 = 4"}), {}};
  CHECK(accepted(arith, System::PASK));
  CHECK_FALSE(accepted(arith, System::SK));
  CHECK(accepted(ProofTree{Rule::Arith, {}, sq({"S(0) = 0"}, {}), {}}, System::PASK));
  CHECK_FALSE(accepted(ProofTree{Rule::Arith, {}, sq({}, {"2 + 2 = 5"}), {}}, System::PASK));
  CHECK_FALSE(accepted(ProofTree{Rule::Arith, {}, sq({}, {"T(0)"}), {}}, System::PASK));
  CHECK_FALSE(accepted(ProofTree{Rule::Arith, {}, sq({}, {"x = x"}), {}}, System::PASK));
}

TEST_CASE("induction") {
  RuleParams ref;
  ref.term = parse_term("S(u)");
  RuleParams ind = with("x = x");
  ind.variable = "x";
  ind.eigenvariable = "u";
  ind.term = Term::numeral(5);
  ProofTree p{Rule::IND, ind, sq({"0 = 0"}, {"5 = 5"}), {ProofTree{Rule::Ref, ref, sq({"u = u"}, {"S(u) = S(u)"}), {}}}};
  CHECK(accepted(p, System::PASK));
  CHECK_FALSE(accepted(p, System::SK));

  ind.term = Term::variable("u");
  ProofTree free_u{Rule::IND, ind, sq({"0 = 0"}, {"u = u"}), {ProofTree{Rule::Ref, ref, sq({"u = u"}, {"S(u) = S(u)"}), {}}}};
  CHECK_FALSE(accepted(free_u, System::PASK));
}

TEST_CASE("axioms are gated by system") {
  RuleParams p = with("~T(quote(lam))");
  p.schema = "I1";
  CodingTable table(liar_env());
  ProofTree ax{Rule::Axiom, p, instantiate_axiom("I1", p, table), {}};
  CHECK_FALSE(accepted(ax, System::SK));
  CHECK_FALSE(accepted(ax, System::PASK));
  CHECK(accepted(ax, System::TP));
  CHECK(accepted(ax, System::TPPlus));

  RuleParams t;
  t.term = Term::quote("lam");
  t.schema = "notPP";
  ProofTree npp{Rule::Axiom, t, instantiate_axiom("notPP", t, table), {}};
  CHECK_FALSE(accepted(npp, System::TP));
  CHECK(accepted(npp, System::TPPlus));

  RuleParams c = with("~T(quote(lam))");
  c.schema = "I1contra";
  ProofTree contra{Rule::Axiom, c, instantiate_axiom("I1contra", c, table), {}};
  CHECK_FALSE(accepted(contra, System::TPPlus));
  CHECK(accepted(contra, System::TP, true));

  ProofTree mismatch = ax;
  mismatch.conclusion.suc.clear();
  CHECK_FALSE(accepted(mismatch));
}

TEST_CASE("bundled proofs: files match the macros and check as expected") {
  auto env = std::make_shared<const Environment>(zoo_environment());
  auto resolve = env_resolver(env);
  for (const auto& e : zoo_corpus(env)) {
    CAPTURE(e.file);
    std::filesystem::path path = kSource / "proofs" / e.file;
    REQUIRE(std::filesystem::exists(path));
    std::string text = slurp(path);
    CHECK(text == print_proof(e.proof));
    ProofTree loaded = load_proof(path.string(), resolve);
    CHECK(print_proof(loaded) == text);
    CHECK(check_proof(loaded, env, {e.system, e.extra_axiom}).accepted == e.accepted);
    if (e.extra_axiom) CHECK_FALSE(check_proof(loaded, env, {e.system, false}).accepted);

    // every system above the intended one accepts an accepted proof
    if (e.accepted) {
      for (System s : {System::SK, System::PASK, System::TP, System::TPPlus}) {
        if (s >= e.system) CHECK(check_proof(loaded, env, {s, e.extra_axiom}).accepted);
      }
    }
  }
  CHECK(slurp(kSource / "zoo" / "zoo.tp") == env->to_dsl());
}

TEST_CASE("proof files round-trip") {
  auto env = std::make_shared<const Environment>(zoo_environment());
  for (const auto& e : zoo_corpus(env)) {
    std::string once = print_proof(e.proof);
    ProofTree back = parse_proof(once, env_resolver(env));
    CHECK(print_proof(back) == once);
    CHECK(back.size() == e.proof.size());
  }
  CHECK_THROWS_AS(parse_proof("{\"rule\": \"Cut\"}"), Error);
  CHECK_THROWS_AS(parse_proof("{\"rule\": \"Zap\", \"conclusion\": {\"ant\": [], \"suc\": []}}"), Error);
  CHECK_THROWS_AS(parse_proof("{\"rule\": \"Ref\", \"params\": {\"colour\": \"red\"}, "
                              "\"conclusion\": {\"ant\": [], \"suc\": []}}"),
                  Error);
  CHECK_THROWS_AS(parse_proof("not json"), Error);
}

TEST_CASE("macros") {
  auto env = liar_env();
  CodingTable table(env);
  auto canon = [&](const char* text) { return canonicalize_growing(f(text), table); };
  RuleParams t;
  t.term = Term::quote("lam");

  ProofTree npp = expand_macro("not-p-not-pp", t, env);
  CHECK(check_proof(npp, env).accepted);
  CHECK(npp.conclusion.ant == std::set<Formula>{canon("~P(quote(lam))")});
  CHECK(npp.conclusion.suc == std::set<Formula>{canon("~P(<~P(quote(lam))>)")});

  ProofTree pp = expand_macro("p-not-pp", t, env);
  CHECK(check_proof(pp, env).accepted);
  CHECK(pp.conclusion.ant == std::set<Formula>{canon("P(quote(lam))")});
  CHECK(pp.conclusion.suc == std::set<Formula>{canon("~P(<P(quote(lam))>)")});

  ProofTree tlem = expand_macro("p-implies-not-tlem", with("~T(quote(lam))"), env);
  CHECK(check_proof(tlem, env).accepted);
  CHECK(tlem.conclusion.ant == std::set<Formula>{canon("T(<~T(quote(lam)) | T(quote(lam))>)")});
  CHECK(tlem.conclusion.suc.empty());

  for (const char* lit : {"T(quote(lam))", "~T(quote(lam))", "P(quote(lam))", "~P(quote(lam))"}) {
    for (const char* dir : {"lr", "rl"}) {
      RuleParams p = with(lit);
      p.dir = dir;
      ProofTree eq = expand_macro("p-neg-equiv", p, env);
      CHECK(eq.rule == Rule::Axiom);
      CHECK(check_proof(eq, env).accepted);
      Formula pos = canon((std::string("P(<") + lit + ">)").c_str());
      Formula neg = canonicalize_growing(Formula::par(Term::quote_formula(negate(f(lit)))), table);
      if (std::string(dir) == "lr") {
        CHECK(eq.conclusion == Sequent{{pos}, {neg}});
      } else {
        CHECK(eq.conclusion == Sequent{{neg}, {pos}});
      }
    }
  }

  ProofTree control = expand_macro("negative-control", with("~T(quote(lam))"), env);
  CHECK_FALSE(check_proof(control, env).accepted);
  CHECK(check_proof(control, env, {System::TP, true}).accepted);
  CHECK(control.conclusion.ant.empty());
  CHECK(control.conclusion.suc == std::set<Formula>{canon("T(quote(lam)) & ~T(quote(lam))")});

  auto guard = [&](const char* name, const RuleParams& p) {
    try {
      expand_macro(name, p, env);
      return false;
    } catch (const Error& e) {
      return e.kind() == ErrorKind::GuardViolation;
    }
  };
  CHECK(guard("p-neg-equiv", with("~T(quote(lam)) & 0 = 0")));
  CHECK(guard("p-implies-not-tlem", with("0 = 0")));
  CHECK(guard("p-implies-not-tlem", with("T(x)")));
  CHECK(guard("p-not-pp", with("0 = 0")));
  CHECK(guard("no-such-macro", t));
}

TEST_CASE("cross validation") {
  auto env = std::make_shared<const Environment>(zoo_environment({20, 3}));
  auto u = SentenceUniverse::close(env);
  auto seq = lfp(u);
  CHECK_FALSE(cross_validate(sq({}, {"0 = 1"}), seq));
  CHECK(cross_validate(sq({}, {"0 = 0"}), seq));
  CHECK(cross_validate(sq({"P(quote(lam))"}, {"~P(quote(plam))"}), seq));
  CHECK(cross_validate(sq({}, {"P(quote(lam))"}), seq));
  CHECK_FALSE(cross_validate(sq({}, {"T(quote(lam)) & ~T(quote(lam))"}), seq));
  CHECK_THROWS_AS(cross_validate(sq({}, {"T(<5 = 7>)"}), seq), Error);
}

TEST_CASE("axiom audit at small zoo fixed points") {
  auto env = std::make_shared<const Environment>(zoo_environment({20, 3}));
  auto u = SentenceUniverse::close(env);
  for (Variant v : {Variant::TP, Variant::TPPlus}) {
    auto audit = audit_axioms(lfp(u, v));
    CHECK(audit.instances > 0);
    CHECK(audit.failures.empty());
  }
  // the audit is not vacuous: an early stage fails it
  auto seq = lfp(u);
  StageSequence early = seq;
  early.stages.erase(early.stages.begin() + 2, early.stages.end());
  early.stages.push_back(early.stages.back());
  CHECK_FALSE(audit_axioms(early).failures.empty());
}
