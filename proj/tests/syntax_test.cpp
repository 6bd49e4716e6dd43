#include <doctest.h>

#include "support/random_universe.hpp"
#include "tp/parser.hpp"
#include "tp/universe.hpp"
#include "tp/zoo.hpp"

using namespace tp;

namespace {

std::shared_ptr<const Environment> env_of(const char* text) {
  return std::make_shared<const Environment>(Environment::parse(text));
}

Formula f(const char* text) { return parse_formula(text); }

}  // namespace

TEST_CASE("negate swaps literal polarity") {
  CHECK(negate(f("0 = 0")) == f("0 != 0"));
  CHECK(negate(f("T(1) & P(2)")) == f("~T(1) | ~P(2)"));
  CHECK(negate(f("all x. T(x)")) == f("ex x. ~T(x)"));
  CHECK(negate(f("P(3)")).kind() == FormulaKind::NotPar);
}

TEST_CASE("negate is an involution") {
  gen::Random r(7);
  gen::Shape s{3, 3, 0.5, 4};
  std::vector<std::string> names{"a", "b"};
  for (int i = 0; i < 500; ++i) {
    Formula phi = gen::random_formula(r, names, s, 3, 4);
    CHECK(negate(negate(phi)) == phi);
    CHECK(!(negate(phi) == phi));
  }
}

TEST_CASE("substitute replaces free occurrences only") {
  Term three = Term::numeral(3);
  CHECK(substitute(f("T(x)"), "x", three) == f("T(3)"));
  CHECK(substitute(f("all x. T(x)"), "x", three) == f("all x. T(x)"));
  CHECK(substitute(f("x = x | ex x. x != x"), "x", Term::numeral(2)) == f("2 = 2 | ex x. x != x"));
  CHECK_THROWS_AS(substitute(f("T(x)"), "x", Term::variable("y")), Error);
  CHECK_THROWS_AS(substitute_term(f("all y. x = y"), "x", Term::variable("y")), Error);
}

TEST_CASE("free variables") {
  CHECK(f("all x. x = y").free_variables() == std::vector<std::string>{"y"});
  CHECK(f("T(<x = 0>)").free_variables() == std::vector<std::string>{"x"});
  CHECK(f("ex x. T(<x = 0>)").is_closed());
}

TEST_CASE("printing parses back to the same formula") {
  gen::Random r(11);
  gen::Shape s{3, 3, 0.5, 4};
  std::vector<std::string> names{"a", "b", "c"};
  for (int i = 0; i < 500; ++i) {
    Formula phi = gen::random_formula(r, names, s, 3, 4);
    CHECK(parse_formula(phi.text()) == phi);
  }
  for (const char* text : {"all x. ex y. (x = y & T(S(x)))", "T(iterT(2, quote(lam)))",
                           "<~T(quote(lam))> = 3", "dot_T(1) = num(2)", "(x + (y * 2)) = 3",
                           "T(dot_neg(dot_and(<0 = 0>, quote(lam))))"}) {
    CHECK(f(text).text() == text);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(f("T(0"), Error);
  CHECK_THROWS_AS(f("0 = "), Error);
  CHECK_THROWS_AS(f("all . T(0)"), Error);
  CHECK_THROWS_AS(parse_term("quote()"), Error);
}

TEST_CASE("environment files") {
  auto env = env_of("#domain 5\n// the liar\nlam := ~T(quote(lam))\ntau := T(quote(tau))\n#base tau\n");
  CHECK(env->domain() == 5);
  CHECK(env->code("lam") == 0);
  CHECK(env->code("tau") == 1);
  CHECK(*env->name_of(1) == "tau");
  CHECK(env->is_declared_base(1));
  CHECK(Environment::parse(env->to_dsl()).to_dsl() == env->to_dsl());

  Environment zoo = zoo_environment();
  CHECK(Environment::parse(zoo.to_dsl()).to_dsl() == zoo.to_dsl());

  CHECK_THROWS_AS(Environment::parse("a := T(quote(b))\n"), Error);
  CHECK_THROWS_AS(Environment::parse("a := 0 = 0\na := 0 = 1\n"), Error);
  CHECK_THROWS_AS(Environment::parse("a := b\nb := a\n"), Error);
  CHECK_THROWS_AS(Environment::parse("a := T(x)\n"), Error);
  CHECK_THROWS_AS(Environment::parse("#domain 0\na := 0 = 0\nb := 0 = 1\n"), Error);
}

TEST_CASE("bare names unfold to their definiens") {
  auto env = env_of("lam := ~T(quote(lam))\nboth := lam & 0 = 0\n");
  CHECK(env->definiens("both") == f("~T(quote(lam)) & 0 = 0"));
}

TEST_CASE("term evaluation") {
  auto env = env_of("#domain 6\n#iter 3\nlam := ~T(quote(lam))\nmu := ex x. ~T(iterT(x, quote(mu)))\n");
  auto u = SentenceUniverse::close(env);
  const CodingTable& t = u->table();
  CHECK(eval_term(Term::numeral(7), t) == 7);
  CHECK(eval_term(parse_term("S(2) + 3 * 4"), t) == 15);
  CHECK(eval_term(Term::quote("lam"), t) == 0);
  CHECK(eval_term(Term::quote("mu"), t) == 1);
  CHECK(eval_term(parse_term("num(4)"), t) == 4);

  Code ttmu = eval_term(parse_term("iterT(2, quote(mu))"), t);
  REQUIRE(u->contains(ttmu));
  CHECK(u->formula(ttmu) == canonicalize(f("T(<T(quote(mu))>)"), t));
  CHECK(eval_term(parse_term("iterT(0, quote(mu))"), t) == 1);
  CHECK(eval_term(parse_term("iterT(4, quote(mu))"), t) == kNoSentence);

  // dot functions build codes of sentences
  CHECK(eval_term(parse_term("dot_neg(quote(lam))"), t) == *u->find(f("T(quote(lam))")));
  CHECK(eval_term(parse_term("dot_negT(quote(lam))"), t) == 0);
  CHECK(eval_term(parse_term("dot_neg(5)"), t) == kNoSentence);
  CHECK_THROWS_AS(eval_term(parse_term("dot_T(3)"), t), Error);
  CHECK_THROWS_AS(eval_term(Term::variable("x"), t), Error);
}

TEST_CASE("coding is a bijection on the universe") {
  auto u = SentenceUniverse::close(std::make_shared<const Environment>(zoo_environment({40, 5})));
  for (std::size_t i = 0; i < u->size(); ++i) {
    Code c = u->code_at(i);
    CHECK(u->index_of(c) == i);
    CHECK(u->find(u->formula(c)) == c);
    CHECK(u->table().decode(c) != nullptr);
  }
  // named codes sit inside the domain, derived ones above it
  for (const auto& d : u->env().definitions()) CHECK(u->code_of_name(d.name) <= u->domain());
  for (std::size_t i = u->env().named_count(); i < u->size(); ++i) CHECK(u->code_at(i) > u->domain());
}

TEST_CASE("closure is idempotent and complete") {
  auto u = SentenceUniverse::close(std::make_shared<const Environment>(zoo_environment({20, 3})));
  CHECK(u->reclose_additions() == 0);
  for (std::size_t i = 0; i < u->size(); ++i) {
    const SentenceInfo& info = u->info_at(i);
    CHECK(u->contains(info.negation));
    CHECK(u->formula(info.negation) == negate(info.formula));
    if (info.formula.is_binary()) {
      CHECK(u->contains(info.left));
      CHECK(u->contains(info.right));
    }
    if (info.formula.is_quantifier()) CHECK(info.instances.size() == u->domain() + 1);
    if (info.formula.is_predicate_literal() && u->table().is_sentence_code(info.argument)) {
      CHECK(u->contains(info.argument));
    }
  }
}

TEST_CASE("canonical forms do not depend on how a sentence is named") {
  auto env = env_of("lam := ~T(quote(lam))\n");
  auto u = SentenceUniverse::close(env, std::vector<Formula>{f("T(<~T(quote(lam))>)"), f("T(0)")});
  CHECK(u->find(f("T(<~T(0)>)")) == u->find(f("T(quote(lam))")));
  CHECK(u->find(f("T(<T(<~T(quote(lam))>)>)")) == std::nullopt);
}

TEST_CASE("closure cap") {
  auto env = env_of("#domain 30\ng := all x. (T(x) | ~T(x))\n");
  ClosureOptions small;
  small.max_sentences = 20;
  CHECK_THROWS_AS(SentenceUniverse::close(env, {}, small), Error);
}

TEST_CASE("B and Pi") {
  auto env = env_of(
      "lam := ~T(quote(lam))\n"
      "kappa := ~T(quote(kappa)) | 0 = 1\n"
      "tau := T(quote(tau))\n"
      "wrap := (0 = 0 & ~T(quote(wrap))) | S(0) = 0\n"
      "other := ~T(quote(tau))\n"
      "decl := T(quote(decl)) & 0 = 0\n"
      "#base decl\n");
  auto u = SentenceUniverse::close(env);
  auto code = [&](const char* n) { return env->code(n); };
  CHECK(u->is_base_paradoxical(code("lam")));
  CHECK(u->is_base_paradoxical(code("kappa")));
  CHECK(u->is_base_paradoxical(code("wrap")));
  CHECK_FALSE(u->is_base_paradoxical(code("tau")));
  CHECK_FALSE(u->is_base_paradoxical(code("other")));
  CHECK(u->is_base_paradoxical(code("decl")));

  Code not_lam = *u->find(f("T(quote(lam))"));
  CHECK_FALSE(u->is_base_paradoxical(not_lam));
  CHECK(u->pi(code("lam")));
  CHECK(u->pi(not_lam));
  CHECK_FALSE(u->pi(*u->find(f("0 = 1"))));
  CHECK_FALSE(u->pi(code("tau")));
  CHECK_FALSE(u->is_base_paradoxical(kNoSentence));
}
