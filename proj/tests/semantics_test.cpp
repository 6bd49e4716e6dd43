#include <doctest.h>

#include "support/oracle.hpp"
#include "support/random_universe.hpp"
#include "tp/jump.hpp"
#include "tp/parser.hpp"

using namespace tp;

namespace {

std::shared_ptr<const Environment> env_of(const char* text) {
  return std::make_shared<const Environment>(Environment::parse(text));
}

Formula f(const char* text) { return parse_formula(text); }

Sequent seq(std::initializer_list<const char*> ant, std::initializer_list<const char*> suc) {
  Sequent s;
  for (auto a : ant) s.ant.insert(f(a));
  for (auto b : suc) s.suc.insert(f(b));
  return s;
}

// Every consistent assignment of T+/T- over the universe, P left empty.
template <class Fn>
void for_each_t_model(std::shared_ptr<const SentenceUniverse> u, Fn fn) {
  const std::size_t n = u->size();
  std::vector<int> digit(n, 0);
  while (true) {
    PartialModel m(u);
    for (std::size_t i = 0; i < n; ++i) {
      if (digit[i] == 1) m.set(Slot::TPlus).set(i);
      if (digit[i] == 2) m.set(Slot::TMinus).set(i);
    }
    fn(m);
    std::size_t i = 0;
    while (i < n && digit[i] == 2) digit[i++] = 0;
    if (i == n) return;
    ++digit[i];
  }
}

}  // namespace

TEST_CASE("values in the empty model") {
  auto u = SentenceUniverse::close(env_of("lam := ~T(quote(lam))\n"),
                                   std::vector<Formula>{f("~T(quote(lam)) & 0 = 1")});
  PartialModel empty(u);
  CHECK(value(empty, f("~T(quote(lam))")) == TruthValue::Undefined);
  CHECK(value(empty, f("0 = 0")) == TruthValue::True);
  CHECK(value(empty, f("~T(quote(lam)) & 0 = 1")) == TruthValue::False);
  CHECK(value(empty, f("~T(quote(lam)) | 0 = 0")) == TruthValue::True);
  CHECK(value(empty, f("all x. x = x")) == TruthValue::True);
  CHECK(value(empty, f("ex x. S(x) = 0")) == TruthValue::False);
}

TEST_CASE("T and P of non-sentences are undefined") {
  auto u = SentenceUniverse::close(env_of("#domain 4\nlam := ~T(quote(lam))\n"));
  PartialModel full(u);
  for (Code c : u->codes()) {
    full.insert(Slot::TPlus, c);
    full.insert(Slot::PPlus, c);
  }
  CHECK(value(full, f("T(3)")) == TruthValue::Undefined);
  CHECK(value(full, f("~P(3)")) == TruthValue::Undefined);
  CHECK(value(full, f("T(0)")) == TruthValue::True);
  CHECK_FALSE(full.contains(Slot::TPlus, 3));
  CHECK_THROWS_AS(full.insert(Slot::TPlus, 3), Error);
}

TEST_CASE("arithmetic sentences are classical") {
  gen::Random r(5);
  auto u = SentenceUniverse::close(env_of("#domain 3\nz := 0 = 0\n"));
  PartialModel empty(u);
  for (int i = 0; i < 200; ++i) {
    Formula a = Formula::eq(Term::numeral(r.below(3)), Term::plus(Term::numeral(r.below(2)), Term::numeral(r.below(2))));
    Formula b = Formula::all("x", Formula::disj(Formula::eq(Term::variable("x"), Term::numeral(r.below(4))),
                                                Formula::neq(Term::variable("x"), Term::numeral(1))));
    Formula phi = r.chance(0.5) ? Formula::conj(a, b) : Formula::disj(a, negate(b));
    CHECK(value(empty, phi) != TruthValue::Undefined);
  }
}

TEST_CASE("sequent satisfaction") {
  auto u = SentenceUniverse::close(env_of("#domain 3\nlam := ~T(quote(lam))\n"));
  PartialModel empty(u);
  CHECK(sat_sequent(empty, seq({}, {"0 = 0"})));
  CHECK_FALSE(sat_sequent(empty, seq({}, {"~T(quote(lam))", "T(quote(lam))"})));
  CHECK(sat_sequent(empty, seq({"0 = 1"}, {})));
  CHECK_FALSE(sat_sequent(empty, seq({}, {})));
  // free variables range over the domain
  CHECK(sat_sequent(empty, seq({}, {"x = x"})));
  CHECK_FALSE(sat_sequent(empty, seq({}, {"x = 2"})));
  CHECK(sat_sequent(empty, seq({"x = 2"}, {"S(x) = 3"})));
}

TEST_CASE("consistency and soundness") {
  auto u = SentenceUniverse::close(env_of("lam := ~T(quote(lam))\n"));
  PartialModel m(u);
  CHECK(is_consistent(m));
  CHECK(is_sound(m));
  m.insert(Slot::TPlus, 0);
  CHECK(is_consistent(m));
  CHECK_FALSE(is_sound(m));  // lam is determinate and Pi(lam) holds
  m.insert(Slot::TMinus, 0);
  CHECK_FALSE(is_consistent(m));
}

TEST_CASE("monotonicity on random model pairs") {
  gen::Random r(99);
  gen::Shape shape;
  int pairs = 0;
  while (pairs < 200) {
    auto u = gen::random_universe(r, shape, 20);
    PartialModel big = gen::random_model(r, u);
    PartialModel small = gen::random_submodel(r, big);
    REQUIRE(small.leq(big));
    for (Code c : u->codes()) {
      TruthValue a = value(small, c);
      if (a != TruthValue::Undefined) CHECK(value(big, c) == a);
    }
    ++pairs;
  }
}

TEST_CASE("universe_values agrees with direct evaluation and the oracle") {
  gen::Random r(3);
  for (int i = 0; i < 100; ++i) {
    auto u = gen::random_universe(r, {}, 20);
    PartialModel m = gen::random_model(r, u);
    auto fast = universe_values(m);
    oracle::Model om = oracle::from_engine(m);
    for (std::size_t k = 0; k < u->size(); ++k) {
      const Formula& phi = u->info_at(k).formula;
      CHECK(fast[k] == value(m, phi));
      CHECK(fast[k] == oracle::value(om, phi, *u));
    }
  }
}

TEST_CASE("consistent models never make a sentence and its negation true") {
  gen::Random r(8);
  for (int i = 0; i < 100; ++i) {
    auto u = gen::random_universe(r, {}, 20);
    PartialModel m = gen::random_model(r, u);
    for (Code c : u->codes()) {
      const Formula& phi = u->formula(c);
      CHECK_FALSE((value(m, phi) == TruthValue::True && value(m, negate(phi)) == TruthValue::True));
    }
  }
}

TEST_CASE("B is sound in every model over a small universe") {
  for (const char* text : {"lam := ~T(quote(lam))\n", "kappa := ~T(quote(kappa)) | 0 = 1\n",
                           "w := (0 = 0 & ~T(quote(w))) | S(0) = 0\n"}) {
    auto env = env_of(text);
    Code c = 0;
    Formula liar = Formula::not_tr(Term::quote(env->definitions()[0].name));
    auto u = SentenceUniverse::close(env, std::vector<Formula>{liar});
    REQUIRE(u->is_base_paradoxical(c));
    REQUIRE(u->size() <= 10);
    std::size_t models = 0;
    for_each_t_model(u, [&](const PartialModel& m) {
      ++models;
      CHECK(value(m, c) == value(m, liar));
    });
    CHECK(models > 1);
  }
}

TEST_CASE("countermodel search") {
  auto env = env_of("#domain 4\n#iter 3\nlam := ~T(quote(lam))\nmu := ex x. ~T(iterT(x, quote(mu)))\n");

  auto cm = search_countermodel(f("P(quote(lam))"), f("~T(dot_P(quote(lam)))"), env);
  REQUIRE(cm);
  CHECK(cm->lhs != cm->rhs);
  CHECK(is_consistent(cm->model));

  auto mu = search_countermodel(f("ex x. ~T(iterT(x, quote(mu)))"), f("~T(quote(mu))"), env);
  REQUIRE(mu);
  CHECK(mu->lhs != mu->rhs);

  CHECK_FALSE(search_countermodel(f("~T(quote(lam))"), f("~T(quote(lam))"), env));
  CHECK_FALSE(search_countermodel(f("~T(quote(lam))"), f("~T(<~T(quote(lam))>)"), env));
}
