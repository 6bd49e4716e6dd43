#include "tp/calculus.hpp"

#include <algorithm>
#include <array>

namespace tp {

std::string Sequent::text() const {
  auto join = [](const std::set<Formula>& fs) {
    std::string out;
    for (const auto& f : fs) {
      if (!out.empty()) out += ", ";
      out += f.text();
    }
    return out;
  };
  std::string a = join(ant), s = join(suc);
  return a + (a.empty() ? "=>" : " =>") + (s.empty() ? "" : " " + s);
}

std::size_t ProofTree::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

const char* to_string(System s) {
  switch (s) {
    case System::SK: return "SK";
    case System::PASK: return "PA-SK";
    case System::TP: return "TP";
    case System::TPPlus: return "TP-plus";
  }
  return "?";
}

System parse_system(std::string_view text) {
  for (System s : {System::SK, System::PASK, System::TP, System::TPPlus}) {
    if (text == to_string(s)) return s;
  }
  throw Error(ErrorKind::Parse, "unknown system '" + std::string(text) + "'");
}

namespace {

constexpr std::array<const char*, 17> kRuleNames = {
    "Axiom", "Lneg", "Cut", "LW", "RW", "Lor", "Ror", "Land", "Rand",
    "Lex", "Rex", "Lall", "Rall", "Ref", "Repl", "IND", "Arith"};

}  // namespace

const char* to_string(Rule r) { return kRuleNames[static_cast<std::size_t>(r)]; }

Rule parse_rule(std::string_view text) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i) {
    if (text == kRuleNames[i]) return static_cast<Rule>(i);
  }
  throw Error(ErrorKind::Parse, "unknown rule '" + std::string(text) + "'");
}

const std::vector<SchemaInfo>& axiom_schemas() {
  static const std::vector<SchemaInfo> schemas = {
      {"init", System::SK, false, false},
      {"T1eq", System::TP, true, false},   {"T1neq", System::TP, true, false},
      {"T2P", System::TP, true, false},    {"T2notP", System::TP, true, false},
      {"T3T", System::TP, true, false},    {"T3neg", System::TP, true, false},
      {"T4and", System::TP, true, false},  {"T4or", System::TP, true, false},
      {"T5all", System::TP, true, false},  {"T5ex", System::TP, true, false},
      {"P1", System::TP, false, false},
      {"P2T", System::TP, true, false},    {"P2P", System::TP, true, false},
      {"P3", System::TP, true, false},
      {"P4", System::TP, true, false},     {"P5", System::TP, true, false},
      {"P6", System::TP, true, false},     {"P7", System::TP, true, false},
      {"I1", System::TP, false, false},
      {"notPP", System::TPPlus, false, false},
      {"I1contra", System::TP, false, true},
  };
  return schemas;
}

const SchemaInfo* find_schema(std::string_view name) {
  for (const auto& s : axiom_schemas()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace {

[[noreturn]] void guard(const std::string& msg) { throw Error(ErrorKind::GuardViolation, msg); }

Term q(const Formula& f) { return Term::quote_formula(f); }

const Formula& sentence_param(const RuleParams& p, const std::string& schema) {
  if (!p.formula) guard(schema + " needs a formula parameter");
  if (!p.formula->is_closed()) guard(schema + " needs a sentence, got " + p.formula->text());
  return *p.formula;
}

const Term& closed_term(const std::optional<Term>& t, const std::string& schema,
                        const char* which) {
  if (!t) guard(schema + " needs parameter " + which);
  if (!t->is_closed()) guard(schema + " needs a closed term, got " + t->text());
  return *t;
}

bool base_in(const Formula& canonical, CodingTable& table) {
  Code c = table.intern(canonical);
  return table.env().is_declared_base(c) || recognizes_base_paradox(canonical, c, table);
}

Formula pi_formula(const Formula& sentence, CodingTable& table) {
  Formula f = canonicalize_growing(sentence, table);
  bool pi = base_in(f, table) || base_in(negate(f), table);
  return Formula::eq(Term::numeral(0), Term::numeral(pi ? 0 : 1));
}

Formula any(std::initializer_list<Formula> fs) {
  auto it = fs.begin();
  Formula out = *it;
  for (++it; it != fs.end(); ++it) out = Formula::disj(out, *it);
  return out;
}

void expect_kind(const Formula& f, std::initializer_list<FormulaKind> kinds,
                 const std::string& schema) {
  if (std::find(kinds.begin(), kinds.end(), f.kind()) == kinds.end()) {
    guard(schema + " does not apply to " + f.text());
  }
}

}  // namespace

Sequent instantiate_axiom(const std::string& schema, const RuleParams& p, CodingTable& table) {
  const SchemaInfo* info = find_schema(schema);
  if (!info) throw Error(ErrorKind::UnknownAxiom, "unknown axiom schema '" + schema + "'");

  std::vector<Formula> left, right;
  auto one_way = [&](std::vector<Formula> a, std::vector<Formula> s) {
    left = std::move(a);
    right = std::move(s);
  };

  if (schema == "init") {
    if (!p.formula) guard("init needs a formula parameter");
    one_way({*p.formula}, {*p.formula});
  } else if (schema == "T1eq" || schema == "T1neq") {
    const Term& s = closed_term(p.term, schema, "term");
    const Term& t = closed_term(p.term2, schema, "term2");
    Formula lit = schema == "T1eq" ? Formula::eq(s, t) : Formula::neq(s, t);
    one_way({lit}, {Formula::tr(q(lit))});
  } else if (schema == "T2P" || schema == "T2notP") {
    const Term& t = closed_term(p.term, schema, "term");
    Formula lit = schema == "T2P" ? Formula::par(t) : Formula::not_par(t);
    one_way({lit}, {Formula::tr(q(lit))});
  } else if (schema == "T3T") {
    const Term& t = closed_term(p.term, schema, "term");
    one_way({Formula::tr(t)}, {Formula::tr(q(Formula::tr(t)))});
  } else if (schema == "T3neg") {
    const Formula& f = sentence_param(p, schema);
    one_way({Formula::tr(q(negate(f)))}, {Formula::not_tr(q(f))});
  } else if (schema == "T4and" || schema == "T4or") {
    const Formula& f = sentence_param(p, schema);
    expect_kind(f, {schema == "T4and" ? FormulaKind::And : FormulaKind::Or}, schema);
    one_way({Formula::binary(f.kind(), Formula::tr(q(f.left())), Formula::tr(q(f.right())))},
            {Formula::tr(q(f))});
  } else if (schema == "T5all" || schema == "T5ex") {
    const Formula& f = sentence_param(p, schema);
    expect_kind(f, {schema == "T5all" ? FormulaKind::All : FormulaKind::Ex}, schema);
    one_way({Formula::quantifier(f.kind(), f.variable(), Formula::tr(q(f.body())))},
            {Formula::tr(q(f))});
  } else if (schema == "P1") {
    const Formula& f = sentence_param(p, schema);
    one_way({pi_formula(f, table)}, {Formula::par(q(f))});
  } else if (schema == "P2T" || schema == "P2P") {
    const Term& t = closed_term(p.term, schema, "term");
    Formula pos = schema == "P2T" ? Formula::tr(t) : Formula::par(t);
    one_way({Formula::par(q(negate(pos)))}, {Formula::par(q(pos))});
  } else if (schema == "P3") {
    const Term& t = closed_term(p.term, schema, "term");
    Formula tt = Formula::tr(t);
    one_way({Formula::par(q(tt))}, {Formula::disj(Formula::par(t), pi_formula(tt, table))});
  } else if (schema == "P4" || schema == "P5") {
    const Formula& f = sentence_param(p, schema);
    expect_kind(f, {schema == "P4" ? FormulaKind::And : FormulaKind::Or}, schema);
    auto decided = [&](const Formula& g) {
      return schema == "P4" ? Formula::tr(q(g)) : Formula::not_tr(q(g));
    };
    Formula pl = Formula::par(q(f.left())), pr = Formula::par(q(f.right()));
    one_way({Formula::par(q(f))},
            {any({Formula::conj(pl, pr), Formula::conj(decided(f.left()), pr),
                  Formula::conj(decided(f.right()), pl), pi_formula(f, table)})});
  } else if (schema == "P6" || schema == "P7") {
    const Formula& f = sentence_param(p, schema);
    expect_kind(f, {schema == "P6" ? FormulaKind::All : FormulaKind::Ex}, schema);
    const std::string& x = f.variable();
    Formula pb = Formula::par(q(f.body()));
    Formula db = schema == "P6" ? Formula::tr(q(f.body())) : Formula::not_tr(q(f.body()));
    one_way({Formula::par(q(f))},
            {any({Formula::conj(Formula::ex(x, pb), Formula::all(x, Formula::disj(pb, db))),
                  pi_formula(f, table)})});
  } else if (schema == "I1") {
    const Formula& f = sentence_param(p, schema);
    one_way({Formula::tr(q(Formula::disj(f, negate(f))))}, {Formula::not_par(q(f))});
  } else if (schema == "notPP") {
    const Term& t = closed_term(p.term, schema, "term");
    one_way({}, {Formula::not_par(q(Formula::par(t)))});
  } else if (schema == "I1contra") {
    const Formula& f = sentence_param(p, schema);
    one_way({Formula::par(q(f))}, {Formula::not_tr(q(Formula::disj(f, negate(f))))});
  }

  if (info->two_way) {
    if (!p.dir || (*p.dir != "lr" && *p.dir != "rl")) {
      guard(schema + " is two-way and needs dir \"lr\" or \"rl\"");
    }
    if (*p.dir == "rl") std::swap(left, right);
  }
  Sequent out;
  for (const auto& f : left) out.ant.insert(canonicalize_growing(f, table));
  for (const auto& f : right) out.suc.insert(canonicalize_growing(f, table));
  return out;
}

// ---- checking ---------------------------------------------------------------

namespace {

using FSet = std::set<Formula>;

std::string list(const FSet& s) {
  std::string out;
  for (const auto& f : s) out += (out.empty() ? "" : ", ") + f.text();
  return out;
}

FSet minus(const FSet& a, const FSet& b) {
  FSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool subset(const FSet& a, const FSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Finds a shared context G such that the conclusion side is G + principal
// and premise side i is G + added[i].
std::optional<std::string> match_side(const char* side, const FSet& conclusion,
                                      const FSet& principal, const std::vector<const FSet*>& premises,
                                      const std::vector<FSet>& added) {
  if (!subset(principal, conclusion)) {
    return std::string("conclusion ") + side + " lacks " + list(minus(principal, conclusion));
  }
  FSet context = minus(conclusion, principal);
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (!subset(added[i], *premises[i])) {
      return "premise " + std::to_string(i) + " " + side + " lacks " +
             list(minus(added[i], *premises[i]));
    }
    FSet rest = minus(*premises[i], added[i]);
    context.insert(rest.begin(), rest.end());
  }
  if (!subset(context, conclusion)) {
    return std::string("conclusion ") + side + " lacks side formula " +
           list(minus(context, conclusion));
  }
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (!subset(context, *premises[i])) {
      return "premise " + std::to_string(i) + " " + side + " lacks side formula " +
             list(minus(context, *premises[i]));
    }
  }
  return std::nullopt;
}

struct Shape {
  FSet ant_principal, suc_principal;
  std::vector<FSet> ant_added, suc_added;
};

class Checker {
 public:
  Checker(std::shared_ptr<const Environment> env, const CheckOptions& options)
      : table_(std::move(env)), options_(options) {}

  Verdict run(const ProofTree& root) {
    Verdict v;
    node(root, "root", v);
    v.accepted = v.diagnostics.empty();
    return v;
  }

 private:
  Formula canon(const Formula& f) { return canonicalize_growing(f, table_); }

  Sequent canon(const Sequent& s) {
    Sequent out;
    for (const auto& f : s.ant) out.ant.insert(canon(f));
    for (const auto& f : s.suc) out.suc.insert(canon(f));
    return out;
  }

  void node(const ProofTree& p, const std::string& path, Verdict& v) {
    ++v.nodes;
    try {
      if (auto err = check_node(p)) v.diagnostics.push_back({path, *err});
    } catch (const Error& e) {
      v.diagnostics.push_back({path, std::string(to_string(e.kind())) + ": " + e.what()});
    }
    for (std::size_t i = 0; i < p.premises.size(); ++i) {
      node(p.premises[i], path + "." + std::to_string(i), v);
    }
  }

  const Formula& need_formula(const ProofTree& p) {
    if (!p.params.formula) guard(std::string(to_string(p.rule)) + " needs a formula parameter");
    return *p.params.formula;
  }

  const Term& need_term(const std::optional<Term>& t, const ProofTree& p, const char* which) {
    if (!t) guard(std::string(to_string(p.rule)) + " needs parameter " + which);
    return *t;
  }

  const std::string& need_var(const std::optional<std::string>& v, const ProofTree& p,
                              const char* which) {
    if (!v || v->empty() || is_reserved_word(*v)) {
      guard(std::string(to_string(p.rule)) + " needs a variable parameter " + which);
    }
    return *v;
  }

  std::optional<std::string> eigen_free(const std::string& u, const Sequent& conclusion) {
    for (const auto* side : {&conclusion.ant, &conclusion.suc}) {
      for (const auto& f : *side) {
        if (f.occurs_free(u)) {
          return "eigenvariable " + u + " occurs free in the conclusion (" + f.text() + ")";
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> premise_count(const ProofTree& p, std::size_t n) {
    if (p.premises.size() == n) return std::nullopt;
    return std::string(to_string(p.rule)) + " takes " + std::to_string(n) + " premise(s), got " +
           std::to_string(p.premises.size());
  }

  std::optional<std::string> check_node(const ProofTree& p) {
    const Sequent conclusion = canon(p.conclusion);
    std::vector<Sequent> premises;
    for (const auto& pr : p.premises) premises.push_back(canon(pr.conclusion));

    auto apply = [&](const Shape& s) -> std::optional<std::string> {
      std::vector<const FSet*> pa, ps;
      for (const auto& pr : premises) {
        pa.push_back(&pr.ant);
        ps.push_back(&pr.suc);
      }
      if (auto e = match_side("antecedent", conclusion.ant, s.ant_principal, pa, s.ant_added)) {
        return e;
      }
      return match_side("succedent", conclusion.suc, s.suc_principal, ps, s.suc_added);
    };

    switch (p.rule) {
      case Rule::Axiom: {
        if (auto e = premise_count(p, 0)) return e;
        if (!p.params.schema) guard("Axiom needs a schema parameter");
        const SchemaInfo* info = find_schema(*p.params.schema);
        if (!info) {
          throw Error(ErrorKind::UnknownAxiom, "unknown axiom schema '" + *p.params.schema + "'");
        }
        if (info->extra && !options_.allow_extra_axiom) {
          throw Error(ErrorKind::UnknownAxiom,
                      "schema " + info->name + " is not admitted without the extra-axiom flag");
        }
        if (info->system > options_.system) {
          throw Error(ErrorKind::UnknownAxiom, "schema " + info->name + " is not part of " +
                                                   to_string(options_.system));
        }
        Sequent expected = instantiate_axiom(*p.params.schema, p.params, table_);
        if (!(expected == conclusion)) {
          return "conclusion does not match the instance " + expected.text();
        }
        return std::nullopt;
      }
      case Rule::Lneg: {
        if (auto e = premise_count(p, 1)) return e;
        Formula f = canon(need_formula(p));
        return apply({{negate(f)}, {}, {{}}, {{f}}});
      }
      case Rule::Cut: {
        if (auto e = premise_count(p, 2)) return e;
        Formula f = canon(need_formula(p));
        return apply({{}, {}, {{}, {f}}, {{f}, {}}});
      }
      case Rule::LW:
      case Rule::RW: {
        if (auto e = premise_count(p, 1)) return e;
        Formula f = canon(need_formula(p));
        // The weakened formula may already be in the context.
        if (p.rule == Rule::LW) return apply({{f}, {}, {{}}, {{}}});
        return apply({{}, {f}, {{}}, {{}}});
      }
      case Rule::Lor:
      case Rule::Land:
      case Rule::Ror:
      case Rule::Rand: {
        bool two = p.rule == Rule::Lor || p.rule == Rule::Rand;
        if (auto e = premise_count(p, two ? 2 : 1)) return e;
        Formula f = canon(need_formula(p));
        FormulaKind want = p.rule == Rule::Lor || p.rule == Rule::Ror ? FormulaKind::Or
                                                                      : FormulaKind::And;
        if (f.kind() != want) guard(std::string(to_string(p.rule)) + " principal must be " +
                                    (want == FormulaKind::Or ? "a disjunction" : "a conjunction"));
        const Formula& l = f.left();
        const Formula& r = f.right();
        switch (p.rule) {
          case Rule::Lor: return apply({{f}, {}, {{l}, {r}}, {{}, {}}});
          case Rule::Land: return apply({{f}, {}, {{l, r}}, {{}}});
          case Rule::Ror: return apply({{}, {f}, {{}}, {{l, r}}});
          default: return apply({{}, {f}, {{}, {}}, {{l}, {r}}});
        }
      }
      case Rule::Lex:
      case Rule::Rall:
      case Rule::Rex:
      case Rule::Lall: {
        if (auto e = premise_count(p, 1)) return e;
        Formula f = canon(need_formula(p));
        bool left = p.rule == Rule::Lex || p.rule == Rule::Lall;
        FormulaKind want =
            p.rule == Rule::Lex || p.rule == Rule::Rex ? FormulaKind::Ex : FormulaKind::All;
        if (f.kind() != want) {
          guard(std::string(to_string(p.rule)) + " principal must be " +
                (want == FormulaKind::Ex ? "existential" : "universal"));
        }
        Term witness = Term::numeral(0);
        if (p.rule == Rule::Lex || p.rule == Rule::Rall) {
          const std::string& u = need_var(p.params.eigenvariable, p, "eigenvariable");
          if (auto e = eigen_free(u, conclusion)) return e;
          witness = Term::variable(u);
        } else {
          witness = need_term(p.params.term, p, "term");
        }
        Formula inst = canon(substitute_term(f.body(), f.variable(), witness));
        if (left) return apply({{f}, {}, {{inst}}, {{}}});
        return apply({{}, {f}, {{}}, {{inst}}});
      }
      case Rule::Ref: {
        if (auto e = premise_count(p, 0)) return e;
        const Term& t = need_term(p.params.term, p, "term");
        Formula eq = canon(Formula::eq(t, t));
        if (!conclusion.suc.contains(eq)) return "succedent lacks " + eq.text();
        return std::nullopt;
      }
      case Rule::Repl: {
        if (auto e = premise_count(p, 1)) return e;
        const Formula& f = need_formula(p);
        const std::string& x = need_var(p.params.variable, p, "variable");
        const Term& s = need_term(p.params.term, p, "term");
        const Term& t = need_term(p.params.term2, p, "term2");
        Formula ft = canon(substitute_term(f, x, t));
        Formula fs = canon(substitute_term(f, x, s));
        return apply({{}, {canon(Formula::neq(s, t)), fs}, {{}}, {{ft}}});
      }
      case Rule::IND: {
        if (options_.system < System::PASK) guard("IND is not part of SK");
        if (auto e = premise_count(p, 1)) return e;
        const Formula& f = need_formula(p);
        const std::string& x = need_var(p.params.variable, p, "variable");
        const std::string& u = need_var(p.params.eigenvariable, p, "eigenvariable");
        const Term& t = need_term(p.params.term, p, "term");
        if (auto e = eigen_free(u, conclusion)) return e;
        Term uv = Term::variable(u);
        Formula fu = canon(substitute_term(f, x, uv));
        Formula fsu = canon(substitute_term(f, x, Term::succ(uv)));
        Formula f0 = canon(substitute_term(f, x, Term::numeral(0)));
        Formula fv = canon(substitute_term(f, x, t));
        return apply({{f0}, {fv}, {{fu}}, {{fsu}}});
      }
      case Rule::Arith: {
        if (options_.system < System::PASK) guard("the arithmetic rule is not part of SK");
        if (auto e = premise_count(p, 0)) return e;
        bool valid = false;
        for (const auto* side : {&conclusion.ant, &conclusion.suc}) {
          for (const auto& f : *side) {
            if (!f.is_arithmetic_literal()) {
              return "Arith admits closed equations only, got " + f.text();
            }
            bool equal = eval_term_growing(f.terms()[0], table_) ==
                         eval_term_growing(f.terms()[1], table_);
            bool truth = (f.kind() == FormulaKind::Eq) == equal;
            if (truth == (side == &conclusion.suc)) valid = true;
          }
        }
        if (!valid) return "sequent is not valid in the standard model";
        return std::nullopt;
      }
    }
    return "unknown rule";
  }

  CodingTable table_;
  CheckOptions options_;
};

}  // namespace

Verdict check_proof(const ProofTree& proof, std::shared_ptr<const Environment> env,
                    const CheckOptions& options) {
  return Checker(std::move(env), options).run(proof);
}

bool cross_validate(const Sequent& s, const StageSequence& seq) {
  const PartialModel& fp = seq.fixed_point();
  const CodingTable& table = fp.universe().table();
  try {
    Sequent c;
    for (const auto& f : s.ant) c.ant.insert(canonicalize(f, table));
    for (const auto& f : s.suc) c.suc.insert(canonicalize(f, table));
    return sat_sequent(fp, c);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotRepresentable) throw;
    throw Error(ErrorKind::UnknownCode, std::string("sequent mentions a sentence outside the universe: ") +
                                            e.what());
  }
}

std::vector<Formula> sequent_roots(const Sequent& s) {
  std::vector<Formula> out;
  for (const auto* side : {&s.ant, &s.suc}) {
    for (const auto& f : *side) {
      if (f.is_closed()) out.push_back(f);
    }
  }
  return out;
}

// ---- audit ------------------------------------------------------------------

std::vector<AxiomInstance> universe_axiom_instances(const SentenceUniverse& u, Variant v) {
  CodingTable scratch = u.table();
  std::vector<AxiomInstance> out;

  auto in_universe = [&](const Sequent& s) {
    try {
      for (const auto* side : {&s.ant, &s.suc}) {
        for (const auto& f : *side) {
          canonicalize(f, u.table());
        }
      }
      return true;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotRepresentable) return false;
      throw;
    }
  };

  auto add = [&](const std::string& schema, RuleParams params, const std::string& principal) {
    const SchemaInfo* info = find_schema(schema);
    for (const char* dir : {"lr", "rl"}) {
      if (!info->two_way && std::string(dir) == "rl") break;
      if (info->two_way) params.dir = dir;
      Sequent s = instantiate_axiom(schema, params, scratch);
      if (in_universe(s)) out.push_back({schema, info->two_way ? dir : "", principal, s});
    }
  };

  for (std::size_t i = 0; i < u.size(); ++i) {
    const Formula& f = u.info_at(i).formula;
    const std::string label = u.label(u.code_at(i));
    RuleParams sentence;
    sentence.formula = f;

    add("P1", sentence, label);
    add("T3neg", sentence, label);
    if (auto lem = u.find(Formula::disj(f, negate(f)))) add("I1", sentence, label);

    switch (f.kind()) {
      case FormulaKind::Eq:
      case FormulaKind::Neq: {
        RuleParams p;
        p.term = f.terms()[0];
        p.term2 = f.terms()[1];
        add(f.kind() == FormulaKind::Eq ? "T1eq" : "T1neq", p, label);
        break;
      }
      case FormulaKind::Tr:
      case FormulaKind::NotTr:
      case FormulaKind::Par:
      case FormulaKind::NotPar: {
        RuleParams p;
        p.term = f.terms()[0];
        switch (f.kind()) {
          case FormulaKind::Tr:
            add("T3T", p, label);
            add("P2T", p, label);
            add("P3", p, label);
            break;
          case FormulaKind::Par:
            add("T2P", p, label);
            add("P2P", p, label);
            if (v == Variant::TPPlus) add("notPP", p, label);
            break;
          case FormulaKind::NotPar:
            add("T2notP", p, label);
            break;
          default:
            break;
        }
        break;
      }
      case FormulaKind::And:
        add("T4and", sentence, label);
        add("P4", sentence, label);
        break;
      case FormulaKind::Or:
        add("T4or", sentence, label);
        add("P5", sentence, label);
        break;
      case FormulaKind::All:
        add("T5all", sentence, label);
        add("P6", sentence, label);
        break;
      case FormulaKind::Ex:
        add("T5ex", sentence, label);
        add("P7", sentence, label);
        break;
    }
  }
  return out;
}

AuditResult audit_axioms(const StageSequence& seq) {
  AuditResult result;
  for (auto& inst : universe_axiom_instances(seq.universe(), seq.variant)) {
    ++result.instances;
    bool holds = false;
    try {
      holds = sat_sequent(seq.fixed_point(), inst.sequent);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotRepresentable) throw;
    }
    if (!holds) result.failures.push_back(std::move(inst));
  }
  return result;
}

}  // namespace tp
