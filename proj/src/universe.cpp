#include "tp/universe.hpp"

#include <variant>

namespace tp {

// ---- CodingTable ------------------------------------------------------------

CodingTable::CodingTable(std::shared_ptr<const Environment> env, ClosureOptions options)
    : env_(std::move(env)), options_(options) {
  const auto& defs = env_->definitions();
  // Reserve the named slots first so derived sentences coded while
  // canonicalizing a definiens land after them.
  for (const auto& d : defs) formulas_.push_back(d.definiens);
  for (std::size_t i = 0; i < defs.size(); ++i) {
    Formula canonical = canonicalize_growing(defs[i].definiens, *this);
    formulas_[i] = canonical;
    if (!by_text_.emplace(canonical.text(), static_cast<Code>(i)).second) {
      throw Error(ErrorKind::DuplicateSentence,
                  "sentence '" + defs[i].name + "' coincides with another coded sentence: " +
                      canonical.text());
    }
  }
}

Code CodingTable::code_at(std::size_t index) const {
  const std::size_t named = env_->named_count();
  if (index < named) return static_cast<Code>(index);
  return kDerivedBase + static_cast<Code>(index - named);
}

std::optional<std::size_t> CodingTable::index_of(Code code) const {
  const std::size_t named = env_->named_count();
  if (code < named) return static_cast<std::size_t>(code);
  if (code < kDerivedBase || code == kNoSentence) return std::nullopt;
  Code offset = code - kDerivedBase;
  if (offset >= formulas_.size() - named) return std::nullopt;
  return named + static_cast<std::size_t>(offset);
}

std::optional<Code> CodingTable::find(const Formula& canonical) const {
  auto it = by_text_.find(canonical.text());
  if (it == by_text_.end()) return std::nullopt;
  return it->second;
}

const Formula* CodingTable::decode(Code code) const {
  auto index = index_of(code);
  if (!index) return nullptr;
  return &formulas_[*index];
}

Code CodingTable::intern(const Formula& canonical) {
  if (auto existing = find(canonical)) return *existing;
  if (!canonical.is_closed()) {
    throw Error(ErrorKind::OpenTerm, "only sentences are coded: " + canonical.text());
  }
  if (formulas_.size() >= options_.max_sentences) {
    throw Error(ErrorKind::ClosureCap,
                "coding table exceeds " + std::to_string(options_.max_sentences) + " sentences");
  }
  Code code = code_at(formulas_.size());
  formulas_.push_back(canonical);
  by_text_.emplace(canonical.text(), code);
  return code;
}

Term CodingTable::canonical_term(Code code) const {
  if (const std::string* name = env_->name_of(code)) return Term::quote(*name);
  if (const Formula* f = decode(code)) return Term::quote_formula(*f);
  return Term::numeral(code);
}

// ---- evaluation -------------------------------------------------------------

namespace {

Natural number(Natural n) { return n >= kDerivedBase ? kNoSentence : n; }

Natural sat_add(Natural a, Natural b) {
  if (a >= kDerivedBase || b >= kDerivedBase) return kNoSentence;
  return number(a + b);
}

Natural sat_mul(Natural a, Natural b) {
  if (a >= kDerivedBase || b >= kDerivedBase) return kNoSentence;
  if (a != 0 && b > (kDerivedBase - 1) / a) return kNoSentence;
  return a * b;
}

class Evaluator {
 public:
  Evaluator(const CodingTable& table, CodingTable* grow) : table_(table), grow_(grow) {}

  Natural eval(const Term& t, const Bindings& b) {
    switch (t.kind()) {
      case TermKind::Numeral:
        return number(t.value());
      case TermKind::Variable:
        for (auto it = b.rbegin(); it != b.rend(); ++it) {
          if (it->first == t.name()) return it->second;
        }
        throw Error(ErrorKind::OpenTerm, "unbound variable " + t.name());
      case TermKind::Succ:
        return sat_add(eval(t.args()[0], b), 1);
      case TermKind::Plus:
        return sat_add(eval(t.args()[0], b), eval(t.args()[1], b));
      case TermKind::Times:
        return sat_mul(eval(t.args()[0], b), eval(t.args()[1], b));
      case TermKind::Num:
        return eval(t.args()[0], b);
      case TermKind::Quote:
        return table_.env().code(t.name());
      case TermKind::QuoteFormula: {
        Formula f = t.quoted();
        for (const auto& v : f.free_variables()) {
          Term value = Term::numeral(eval(Term::variable(v), b));
          f = substitute(f, v, value);
        }
        return code_for(f);
      }
      case TermKind::DotEq:
      case TermKind::DotNeq: {
        Term lhs = Term::numeral(eval(t.args()[0], b));
        Term rhs = Term::numeral(eval(t.args()[1], b));
        return code_for(t.kind() == TermKind::DotEq ? Formula::eq(lhs, rhs)
                                                    : Formula::neq(lhs, rhs));
      }
      case TermKind::DotT:
      case TermKind::DotP:
      case TermKind::DotNegT:
      case TermKind::DotNegP: {
        static constexpr FormulaKind kinds[] = {FormulaKind::Tr, FormulaKind::Par,
                                                FormulaKind::NotTr, FormulaKind::NotPar};
        FormulaKind kind = kinds[static_cast<int>(t.kind()) - static_cast<int>(TermKind::DotT)];
        return code_for(Formula::literal(kind, {table().canonical_term(eval(t.args()[0], b))}));
      }
      case TermKind::DotAnd:
      case TermKind::DotOr: {
        const Formula* l = table().decode(eval(t.args()[0], b));
        const Formula* r = table().decode(eval(t.args()[1], b));
        if (!l || !r) return kNoSentence;
        Formula lf = *l, rf = *r;
        return code_for(t.kind() == TermKind::DotAnd ? Formula::conj(lf, rf)
                                                     : Formula::disj(lf, rf));
      }
      case TermKind::DotAll:
      case TermKind::DotEx: {
        Natural index = eval(t.args()[0], b);
        const Formula* body = table().decode(eval(t.args()[1], b));
        if (!body) return kNoSentence;
        Formula bf = *body;
        std::string var = "x" + std::to_string(index);
        return code_for(t.kind() == TermKind::DotAll ? Formula::all(var, bf)
                                                     : Formula::ex(var, bf));
      }
      case TermKind::DotNeg: {
        const Formula* f = table().decode(eval(t.args()[0], b));
        if (!f) return kNoSentence;
        return code_for(negate(*f));
      }
      case TermKind::IterT: {
        Natural n = eval(t.args()[0], b);
        Code c = eval(t.args()[1], b);
        if (!table().is_sentence_code(c)) return kNoSentence;
        if (auto bound = table().env().iter_bound()) {
          if (n > *bound) return kNoSentence;
        } else if (n > table().options().max_iter_depth) {
          throw Error(ErrorKind::ClosureCap,
                      "iterT(" + std::to_string(n) +
                          ", ...) exceeds the iteration depth cap; declare #iter");
        }
        for (Natural i = 0; i < n; ++i) c = code_for(Formula::tr(table().canonical_term(c)));
        return c;
      }
    }
    return kNoSentence;
  }

  Formula canonical(const Formula& f) {
    if (f.is_predicate_literal()) {
      const Term& arg = f.terms()[0];
      if (!arg.is_closed() && arg.kind() == TermKind::QuoteFormula) {
        // Dotted quotation: only the closed parts inside can be normalized.
        return Formula::literal(f.kind(), {Term::quote_formula(canonical(arg.quoted()))});
      }
      if (!arg.is_closed() || arg.kind() == TermKind::Quote) return f;
      Term canon = table().canonical_term(eval(arg, {}));
      if (canon == arg) return f;
      return Formula::literal(f.kind(), {canon});
    }
    if (f.is_literal()) return f;
    if (f.is_binary()) return Formula::binary(f.kind(), canonical(f.left()), canonical(f.right()));
    return Formula::quantifier(f.kind(), f.variable(), canonical(f.body()));
  }

 private:
  const CodingTable& table() const { return grow_ ? *grow_ : table_; }

  Code code_for(const Formula& f) {
    Formula canon = canonical(f);
    if (grow_) return grow_->intern(canon);
    if (auto code = table_.find(canon)) return *code;
    throw Error(ErrorKind::NotRepresentable,
                "sentence " + canon.text() + " is not in the coding table");
  }

  const CodingTable& table_;
  CodingTable* grow_;
};

}  // namespace

Natural eval_term(const Term& t, const CodingTable& table, const Bindings& bindings) {
  return Evaluator(table, nullptr).eval(t, bindings);
}

Natural eval_term_growing(const Term& t, CodingTable& table, const Bindings& bindings) {
  return Evaluator(table, &table).eval(t, bindings);
}

Formula canonicalize(const Formula& f, const CodingTable& table) {
  return Evaluator(table, nullptr).canonical(f);
}

Formula canonicalize_growing(const Formula& f, CodingTable& table) {
  return Evaluator(table, &table).canonical(f);
}

// ---- base paradoxicality ----------------------------------------------------

namespace {

// Either a decided truth value or a residual formula.
using Normal = std::variant<bool, Formula>;

Normal normalize(const Formula& f, const CodingTable& table) {
  switch (f.kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Neq: {
      if (!f.is_closed()) return f;
      try {
        bool equal = eval_term(f.terms()[0], table) == eval_term(f.terms()[1], table);
        return f.kind() == FormulaKind::Eq ? equal : !equal;
      } catch (const Error&) {
        return f;
      }
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
      const bool is_and = f.kind() == FormulaKind::And;
      Normal l = normalize(f.left(), table);
      Normal r = normalize(f.right(), table);
      // Absorbing element: false for &, true for |.
      for (const Normal* side : {&l, &r}) {
        if (auto* v = std::get_if<bool>(side); v && *v != is_and) return !is_and;
      }
      if (std::holds_alternative<bool>(l)) return r;
      if (std::holds_alternative<bool>(r)) return l;
      return Formula::binary(f.kind(), std::get<Formula>(l), std::get<Formula>(r));
    }
    default:
      return f;
  }
}

}  // namespace

bool recognizes_base_paradox(const Formula& f, Code code, const CodingTable& table) {
  Normal n = normalize(f, table);
  auto* residual = std::get_if<Formula>(&n);
  if (!residual || residual->kind() != FormulaKind::NotTr) return false;
  const Term& arg = residual->terms()[0];
  if (!arg.is_closed()) return false;
  try {
    return eval_term(arg, table) == code;
  } catch (const Error&) {
    return false;
  }
}

// ---- SentenceUniverse -------------------------------------------------------

const char* to_string(Origin origin) {
  switch (origin) {
    case Origin::Named: return "named";
    case Origin::Root: return "root";
    case Origin::Negation: return "negation";
    case Origin::Component: return "component";
    case Origin::Instance: return "instance";
    case Origin::SyntacticValue: return "syntactic-value";
  }
  return "?";
}

namespace {

class Closer {
 public:
  Closer(CodingTable& table, std::vector<SentenceInfo>& infos) : table_(table), infos_(infos) {}

  Code add(const Formula& f, Origin origin) {
    std::size_t before = table_.size();
    Code code = table_.intern(canonicalize_growing(f, table_));
    record_new(before, code, origin);
    return code;
  }

  void run() {
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (infos_.size() <= i) infos_.push_back({*table_.decode(table_.code_at(i)), Origin::Root});
      Formula f = infos_[i].formula;
      Code negation = add(negate(f), Origin::Negation);
      Code left = kNoSentence, right = kNoSentence;
      Natural argument = kNoSentence;
      std::vector<Code> instances;
      if (f.is_binary()) {
        left = add(f.left(), Origin::Component);
        right = add(f.right(), Origin::Component);
      } else if (f.is_quantifier()) {
        const Natural domain = table_.env().domain();
        instances.reserve(domain + 1);
        for (Natural d = 0; d <= domain; ++d) {
          instances.push_back(
              add(substitute(f.body(), f.variable(), Term::numeral(d)), Origin::Instance));
        }
      } else if (f.is_predicate_literal()) {
        std::size_t before = table_.size();
        argument = eval_term_growing(f.terms()[0], table_);
        record_new(before, kNoSentence, Origin::SyntacticValue);
      }
      SentenceInfo& info = infos_[i];
      info.negation = negation;
      info.left = left;
      info.right = right;
      info.instances = std::move(instances);
      info.argument = argument;
    }
  }

 private:
  void record_new(std::size_t before, Code requested, Origin origin) {
    for (std::size_t idx = before; idx < table_.size(); ++idx) {
      Code c = table_.code_at(idx);
      infos_.push_back({*table_.decode(c), c == requested ? origin : Origin::SyntacticValue});
    }
  }

  CodingTable& table_;
  std::vector<SentenceInfo>& infos_;
};

}  // namespace

std::shared_ptr<const SentenceUniverse> SentenceUniverse::close(
    std::shared_ptr<const Environment> env, std::span<const Formula> roots,
    ClosureOptions options) {
  CodingTable table(std::move(env), options);
  std::vector<SentenceInfo> infos;
  for (std::size_t i = 0; i < table.size(); ++i) {
    infos.push_back({*table.decode(table.code_at(i)), Origin::Named});
  }
  Closer closer(table, infos);
  for (const auto& root : roots) {
    if (!root.is_closed()) {
      throw Error(ErrorKind::OpenTerm, "universe roots must be sentences: " + root.text());
    }
    closer.add(root, Origin::Root);
  }
  closer.run();

  std::shared_ptr<SentenceUniverse> universe(new SentenceUniverse(std::move(table)));
  universe->infos_ = std::move(infos);
  for (std::size_t i = 0; i < universe->infos_.size(); ++i) {
    Code code = universe->code_at(i);
    SentenceInfo& info = universe->infos_[i];
    info.base = universe->env().is_declared_base(code) ||
                recognizes_base_paradox(info.formula, code, universe->table_);
  }
  return universe;
}

std::optional<std::size_t> SentenceUniverse::index_of(Code code) const {
  auto index = table_.index_of(code);
  if (index && *index < infos_.size()) return index;
  return std::nullopt;
}

std::vector<Code> SentenceUniverse::codes() const {
  std::vector<Code> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(code_at(i));
  return out;
}

const SentenceInfo& SentenceUniverse::info(Code code) const {
  auto index = index_of(code);
  if (!index) throw Error(ErrorKind::UnknownCode, "code " + std::to_string(code) + " is not in the universe");
  return infos_[*index];
}

std::optional<Code> SentenceUniverse::find(const Formula& sentence) const {
  if (!sentence.is_closed()) return std::nullopt;
  try {
    return table_.find(canonicalize(sentence, table_));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotRepresentable) return std::nullopt;
    throw;
  }
}

bool SentenceUniverse::is_base_paradoxical(Code code) const {
  auto index = index_of(code);
  return index && infos_[*index].base;
}

bool SentenceUniverse::pi(Code code) const {
  auto index = index_of(code);
  if (!index) return false;
  const SentenceInfo& info = infos_[*index];
  return info.base || is_base_paradoxical(info.negation);
}

std::size_t SentenceUniverse::reclose_additions() const {
  CodingTable copy = table_;
  std::vector<SentenceInfo> infos = infos_;
  Closer closer(copy, infos);
  closer.run();
  return copy.size() - table_.size();
}

std::string SentenceUniverse::label(Code code) const {
  if (const std::string* name = env().name_of(code)) return *name;
  return info(code).formula.text();
}

bool is_base_paradoxical(Code code, const SentenceUniverse& universe) {
  return universe.is_base_paradoxical(code);
}

bool pi(Code code, const SentenceUniverse& universe) { return universe.pi(code); }

}  // namespace tp
