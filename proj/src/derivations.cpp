#include <algorithm>

#include "tp/calculus.hpp"

namespace tp {

namespace {

[[noreturn]] void unsupported(const std::string& msg) {
  throw Error(ErrorKind::GuardViolation, msg);
}

Term q(const Formula& f) { return Term::quote_formula(f); }

// Builds proof trees whose conclusions are canonical, adding weakenings
// wherever two premises need a common context.
class Builder {
 public:
  explicit Builder(std::shared_ptr<const Environment> env) : table_(std::move(env)) {}

  Formula c(const Formula& f) { return canonicalize_growing(f, table_); }

  ProofTree axiom(const std::string& schema, RuleParams params) {
    params.schema = schema;
    Sequent s = instantiate_axiom(schema, params, table_);
    return {Rule::Axiom, std::move(params), std::move(s), {}};
  }

  ProofTree ref(const Term& t) {
    RuleParams p;
    p.term = t;
    return {Rule::Ref, p, {{}, {c(Formula::eq(t, t))}}, {}};
  }

  ProofTree weaken(ProofTree p, const std::set<Formula>& ant, const std::set<Formula>& suc) {
    for (const auto& f : ant) {
      if (p.conclusion.ant.contains(f)) continue;
      Sequent s = p.conclusion;
      s.ant.insert(f);
      p = {Rule::LW, with_formula(f), s, {std::move(p)}};
    }
    for (const auto& f : suc) {
      if (p.conclusion.suc.contains(f)) continue;
      Sequent s = p.conclusion;
      s.suc.insert(f);
      p = {Rule::RW, with_formula(f), s, {std::move(p)}};
    }
    return p;
  }

  // From G => D, f infer ~f, G => D.
  ProofTree lneg(ProofTree p, const Formula& f) {
    Sequent s = p.conclusion;
    s.suc.erase(f);
    s.ant.insert(negate(f));
    return {Rule::Lneg, with_formula(f), s, {std::move(p)}};
  }

  ProofTree cut(ProofTree a, ProofTree b, const Formula& f) {
    std::set<Formula> ant = a.conclusion.ant, suc = b.conclusion.suc;
    for (const auto& g : b.conclusion.ant) {
      if (!(g == f)) ant.insert(g);
    }
    for (const auto& g : a.conclusion.suc) {
      if (!(g == f)) suc.insert(g);
    }
    std::set<Formula> suc_f = suc, ant_f = ant;
    suc_f.insert(f);
    ant_f.insert(f);
    Sequent s{ant, suc};
    return {Rule::Cut, with_formula(f), s, {weaken(std::move(a), ant, suc_f),
                                            weaken(std::move(b), ant_f, suc)}};
  }

  // From G => D, l, r infer G => D, l | r.
  ProofTree ror(ProofTree p, const Formula& disj) {
    Sequent s = p.conclusion;
    s.suc.erase(disj.left());
    s.suc.erase(disj.right());
    s.suc.insert(disj);
    return {Rule::Ror, with_formula(disj), s, {std::move(p)}};
  }

  // From l, r, G => D infer l & r, G => D.
  ProofTree land(ProofTree p, const Formula& conj) {
    Sequent s = p.conclusion;
    s.ant.erase(conj.left());
    s.ant.erase(conj.right());
    s.ant.insert(conj);
    return {Rule::Land, with_formula(conj), s, {std::move(p)}};
  }

  // From G => D, l and G => D, r infer G => D, l & r.
  ProofTree rand(ProofTree a, ProofTree b, const Formula& conj) {
    std::set<Formula> ant = a.conclusion.ant, suc;
    ant.insert(b.conclusion.ant.begin(), b.conclusion.ant.end());
    for (const auto* side : {&a.conclusion.suc, &b.conclusion.suc}) {
      for (const auto& g : *side) {
        if (!(g == conj.left()) && !(g == conj.right())) suc.insert(g);
      }
    }
    std::set<Formula> sl = suc, sr = suc;
    sl.insert(conj.left());
    sr.insert(conj.right());
    std::set<Formula> out = suc;
    out.insert(conj);
    return {Rule::Rand, with_formula(conj), {ant, out},
            {weaken(std::move(a), ant, sl), weaken(std::move(b), ant, sr)}};
  }

  // => P(phi), from Pi(phi) by P1 and reflexivity.
  ProofTree paradoxical(const Formula& phi) {
    RuleParams p;
    p.formula = phi;
    ProofTree p1 = axiom("P1", p);
    Formula pi = *p1.conclusion.ant.begin();
    if (!(pi == Formula::eq(Term::numeral(0), Term::numeral(0)))) {
      unsupported(phi.text() + " is not recognized as (the negation of) a base paradox");
    }
    return cut(ref(Term::numeral(0)), std::move(p1), pi);
  }

 private:
  static RuleParams with_formula(const Formula& f) {
    RuleParams p;
    p.formula = f;
    return p;
  }

  CodingTable table_;
};

const Formula& need_sentence(const RuleParams& p, const std::string& name) {
  if (!p.formula || !p.formula->is_closed()) unsupported(name + " needs a sentence parameter");
  return *p.formula;
}

}  // namespace

ProofTree expand_macro(const std::string& name, const RuleParams& params,
                       std::shared_ptr<const Environment> env) {
  Builder b(env);

  if (name == "p-implies-not-tlem") {
    Formula phi = b.c(need_sentence(params, name));
    RuleParams p;
    p.formula = phi;
    ProofTree i1 = b.axiom("I1", p);
    Formula not_p = *i1.conclusion.suc.begin();
    return b.cut(b.paradoxical(phi), b.lneg(std::move(i1), not_p), negate(not_p));
  }

  if (name == "p-not-pp" || name == "not-p-not-pp") {
    if (!params.term || !params.term->is_closed()) unsupported(name + " needs a closed term");
    const bool positive = name == "p-not-pp";
    const Term& t = *params.term;
    Formula lit = b.c(positive ? Formula::par(t) : Formula::not_par(t));
    Formula lem = b.c(Formula::disj(lit, negate(lit)));

    RuleParams tp;
    tp.term = t;
    tp.dir = "lr";
    ProofTree t2 = b.axiom(positive ? "T2P" : "T2notP", tp);  // lit => T(lit)

    Formula tl = b.c(Formula::tr(q(lit)));
    Formula tn = b.c(Formula::tr(q(negate(lit))));
    Formula split = Formula::disj(tl, tn);
    ProofTree r = b.ror(b.weaken(std::move(t2), {}, {tn}), split);

    RuleParams t4;
    t4.formula = lem;
    t4.dir = "lr";  // T(lit) | T(~lit) => T(lem)
    ProofTree joined = b.cut(std::move(r), b.axiom("T4or", t4), split);  // lit => T(lem)

    RuleParams i1;
    i1.formula = lit;
    ProofTree ax = b.axiom("I1", i1);
    Formula t_lem = *ax.conclusion.ant.begin();
    return b.cut(std::move(joined), std::move(ax), t_lem);
  }

  if (name == "p-neg-equiv") {
    Formula phi = b.c(need_sentence(params, name));
    std::string dir = params.dir.value_or("lr");
    if (dir != "lr" && dir != "rl") unsupported("p-neg-equiv dir must be lr or rl");
    const char* schema = nullptr;
    bool positive = false;
    switch (phi.kind()) {
      case FormulaKind::Tr: schema = "P2T"; positive = true; break;
      case FormulaKind::NotTr: schema = "P2T"; break;
      case FormulaKind::Par: schema = "P2P"; positive = true; break;
      case FormulaKind::NotPar: schema = "P2P"; break;
      default:
        unsupported("p-neg-equiv is only available for T and P literals, got " + phi.text());
    }
    // P2 reads P(~A t) => P(A t) left to right.
    RuleParams p;
    p.term = phi.terms()[0];
    p.dir = (positive == (dir == "lr")) ? "rl" : "lr";
    return b.axiom(schema, p);
  }

  if (name == "negative-control") {
    Formula phi = b.c(need_sentence(params, name));
    Formula lem = b.c(Formula::disj(phi, negate(phi)));
    RuleParams p;
    p.formula = phi;
    ProofTree contra = b.axiom("I1contra", p);  // P(phi) => ~T(lem)
    Formula pphi = *contra.conclusion.ant.begin();
    Formula not_t_lem = *contra.conclusion.suc.begin();
    ProofTree step1 = b.cut(b.paradoxical(phi), std::move(contra), pphi);

    RuleParams t3;
    t3.formula = lem;
    t3.dir = "rl";
    ProofTree neg_lem = b.axiom("T3neg", t3);  // ~T(lem) => T(~lem)
    Formula t_neg_lem = *neg_lem.conclusion.suc.begin();
    ProofTree step2 = b.cut(std::move(step1), std::move(neg_lem), not_t_lem);

    RuleParams t4;
    t4.formula = b.c(negate(lem));
    t4.dir = "rl";
    ProofTree split = b.axiom("T4and", t4);  // T(~lem) => T(~phi) & T(phi)
    Formula both = *split.conclusion.suc.begin();
    ProofTree step3 = b.cut(std::move(step2), std::move(split), t_neg_lem);

    Formula t_phi = b.c(Formula::tr(q(phi)));
    Formula goal = Formula::conj(t_phi, negate(t_phi));
    RuleParams init;
    init.formula = t_phi;
    RuleParams t3l;
    t3l.formula = phi;
    t3l.dir = "lr";
    ProofTree r = b.rand(b.axiom("init", init), b.axiom("T3neg", t3l), goal);
    ProofTree l = b.land(std::move(r), both);
    return b.cut(std::move(step3), std::move(l), both);
  }

  unsupported("unknown macro '" + name + "'");
}

}  // namespace tp
