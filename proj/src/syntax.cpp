#include "tp/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace tp {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::OpenTerm: return "open-term";
    case ErrorKind::UndefinedName: return "undefined-name";
    case ErrorKind::NotRepresentable: return "result-not-representable";
    case ErrorKind::DomainTooSmall: return "domain-too-small";
    case ErrorKind::DuplicateSentence: return "duplicate-sentence";
    case ErrorKind::CircularDefinition: return "circular-definition";
    case ErrorKind::ClosureCap: return "closure-cap";
    case ErrorKind::VariableCapture: return "variable-capture";
    case ErrorKind::InconsistentInput: return "inconsistent-input";
    case ErrorKind::StageInconsistency: return "stage-inconsistency";
    case ErrorKind::NonTermination: return "non-termination";
    case ErrorKind::UnknownCode: return "unknown-code";
    case ErrorKind::GuardViolation: return "guard-violation";
    case ErrorKind::UnknownAxiom: return "unknown-axiom";
    case ErrorKind::Io: return "io";
  }
  return "?";
}

namespace detail {

using VarList = std::vector<std::string>;

VarList merge(const VarList& a, const VarList& b) {
  VarList out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VarList remove(VarList vars, const std::string& v) {
  auto it = std::lower_bound(vars.begin(), vars.end(), v);
  if (it != vars.end() && *it == v) vars.erase(it);
  return vars;
}

struct TermNode {
  TermKind kind;
  Natural value = 0;
  std::string name;
  std::vector<Term> args;
  std::vector<Formula> quoted;  // at most one
  std::string text;
  VarList free;

  static Term make(TermNode node) {
    return Term(std::make_shared<const TermNode>(std::move(node)));
  }
};

struct FormulaNode {
  FormulaKind kind;
  std::vector<Term> terms;
  std::vector<Formula> children;
  std::string var;
  std::string text;
  VarList free;
  std::size_t depth = 1;

  static Formula make(FormulaNode node) {
    return Formula(std::make_shared<const FormulaNode>(std::move(node)));
  }
};

}  // namespace detail

using detail::FormulaNode;
using detail::TermNode;

bool is_function_kind(TermKind kind) {
  switch (kind) {
    case TermKind::Num:
    case TermKind::DotEq:
    case TermKind::DotNeq:
    case TermKind::DotAnd:
    case TermKind::DotOr:
    case TermKind::DotAll:
    case TermKind::DotEx:
    case TermKind::DotT:
    case TermKind::DotP:
    case TermKind::DotNegT:
    case TermKind::DotNegP:
    case TermKind::DotNeg:
    case TermKind::IterT:
      return true;
    default:
      return false;
  }
}

const char* function_name(TermKind kind) {
  switch (kind) {
    case TermKind::Succ: return "S";
    case TermKind::Num: return "num";
    case TermKind::DotEq: return "dot_eq";
    case TermKind::DotNeq: return "dot_neq";
    case TermKind::DotAnd: return "dot_and";
    case TermKind::DotOr: return "dot_or";
    case TermKind::DotAll: return "dot_all";
    case TermKind::DotEx: return "dot_ex";
    case TermKind::DotT: return "dot_T";
    case TermKind::DotP: return "dot_P";
    case TermKind::DotNegT: return "dot_negT";
    case TermKind::DotNegP: return "dot_negP";
    case TermKind::DotNeg: return "dot_neg";
    case TermKind::IterT: return "iterT";
    case TermKind::Quote: return "quote";
    default: return "";
  }
}

std::size_t function_arity(TermKind kind) {
  switch (kind) {
    case TermKind::Succ:
    case TermKind::Num:
    case TermKind::DotT:
    case TermKind::DotP:
    case TermKind::DotNegT:
    case TermKind::DotNegP:
    case TermKind::DotNeg:
      return 1;
    case TermKind::DotEq:
    case TermKind::DotNeq:
    case TermKind::DotAnd:
    case TermKind::DotOr:
    case TermKind::DotAll:
    case TermKind::DotEx:
    case TermKind::IterT:
    case TermKind::Plus:
    case TermKind::Times:
      return 2;
    default:
      return 0;
  }
}

// ---- Term -----------------------------------------------------------------

Term Term::numeral(Natural n) {
  TermNode node{TermKind::Numeral};
  node.value = n;
  node.text = std::to_string(n);
  return TermNode::make(std::move(node));
}

Term Term::variable(std::string name) {
  TermNode node{TermKind::Variable};
  node.text = name;
  node.free = {name};
  node.name = std::move(name);
  return TermNode::make(std::move(node));
}

Term Term::succ(Term t) { return apply(TermKind::Succ, {std::move(t)}); }

Term Term::plus(Term a, Term b) {
  return apply(TermKind::Plus, {std::move(a), std::move(b)});
}

Term Term::times(Term a, Term b) {
  return apply(TermKind::Times, {std::move(a), std::move(b)});
}

Term Term::apply(TermKind kind, std::vector<Term> args) {
  if (kind != TermKind::Succ && kind != TermKind::Plus &&
      kind != TermKind::Times && !is_function_kind(kind)) {
    throw std::invalid_argument("Term::apply: not a function symbol");
  }
  if (args.size() != function_arity(kind)) {
    throw std::invalid_argument(std::string("Term::apply: wrong arity for ") +
                                function_name(kind));
  }
  TermNode node{kind};
  if (kind == TermKind::Plus || kind == TermKind::Times) {
    node.text = "(" + args[0].text() + (kind == TermKind::Plus ? " + " : " * ") +
                args[1].text() + ")";
  } else {
    node.text = function_name(kind);
    node.text += "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) node.text += ", ";
      node.text += args[i].text();
    }
    node.text += ")";
  }
  for (const auto& a : args) node.free = detail::merge(node.free, a.free_variables());
  node.args = std::move(args);
  return TermNode::make(std::move(node));
}

Term Term::quote(std::string name) {
  TermNode node{TermKind::Quote};
  node.text = "quote(" + name + ")";
  node.name = std::move(name);
  return TermNode::make(std::move(node));
}

Term Term::quote_formula(Formula f) {
  TermNode node{TermKind::QuoteFormula};
  node.text = "<" + f.text() + ">";
  node.free = f.free_variables();
  node.quoted.push_back(std::move(f));
  return TermNode::make(std::move(node));
}

TermKind Term::kind() const { return node_->kind; }
Natural Term::value() const { return node_->value; }
const std::string& Term::name() const { return node_->name; }
const std::vector<Term>& Term::args() const { return node_->args; }
Formula Term::quoted() const {
  assert(node_->kind == TermKind::QuoteFormula);
  return node_->quoted.front();
}
const std::string& Term::text() const { return node_->text; }
const std::vector<std::string>& Term::free_variables() const { return node_->free; }
bool Term::occurs_free(const std::string& var) const {
  return std::binary_search(node_->free.begin(), node_->free.end(), var);
}

// ---- Formula --------------------------------------------------------------

namespace {

const char* literal_prefix(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::Tr: return "T(";
    case FormulaKind::NotTr: return "~T(";
    case FormulaKind::Par: return "P(";
    case FormulaKind::NotPar: return "~P(";
    default: return "";
  }
}

std::string operand_text(const Formula& f) {
  if (f.is_quantifier()) return "(" + f.text() + ")";
  return f.text();
}

}  // namespace

Formula Formula::literal(FormulaKind kind, std::vector<Term> terms) {
  FormulaNode node{kind};
  switch (kind) {
    case FormulaKind::Eq:
    case FormulaKind::Neq:
      if (terms.size() != 2) throw std::invalid_argument("equation needs two terms");
      node.text = terms[0].text() + (kind == FormulaKind::Eq ? " = " : " != ") +
                  terms[1].text();
      break;
    case FormulaKind::Tr:
    case FormulaKind::NotTr:
    case FormulaKind::Par:
    case FormulaKind::NotPar:
      if (terms.size() != 1) throw std::invalid_argument("predicate literal needs one term");
      node.text = std::string(literal_prefix(kind)) + terms[0].text() + ")";
      break;
    default:
      throw std::invalid_argument("Formula::literal: not a literal kind");
  }
  for (const auto& t : terms) node.free = detail::merge(node.free, t.free_variables());
  node.terms = std::move(terms);
  return FormulaNode::make(std::move(node));
}

Formula Formula::binary(FormulaKind kind, Formula a, Formula b) {
  if (kind != FormulaKind::And && kind != FormulaKind::Or) {
    throw std::invalid_argument("Formula::binary: not a connective");
  }
  FormulaNode node{kind};
  node.text = "(" + operand_text(a) + (kind == FormulaKind::And ? " & " : " | ") +
              operand_text(b) + ")";
  node.free = detail::merge(a.free_variables(), b.free_variables());
  node.depth = 1 + std::max(a.depth(), b.depth());
  node.children = {std::move(a), std::move(b)};
  return FormulaNode::make(std::move(node));
}

Formula Formula::quantifier(FormulaKind kind, std::string var, Formula body) {
  if (kind != FormulaKind::All && kind != FormulaKind::Ex) {
    throw std::invalid_argument("Formula::quantifier: not a quantifier");
  }
  FormulaNode node{kind};
  node.text = (kind == FormulaKind::All ? "all " : "ex ") + var + ". " + body.text();
  node.free = detail::remove(body.free_variables(), var);
  node.depth = 1 + body.depth();
  node.var = std::move(var);
  node.children = {std::move(body)};
  return FormulaNode::make(std::move(node));
}

Formula Formula::eq(Term a, Term b) { return literal(FormulaKind::Eq, {std::move(a), std::move(b)}); }
Formula Formula::neq(Term a, Term b) { return literal(FormulaKind::Neq, {std::move(a), std::move(b)}); }
Formula Formula::tr(Term t) { return literal(FormulaKind::Tr, {std::move(t)}); }
Formula Formula::not_tr(Term t) { return literal(FormulaKind::NotTr, {std::move(t)}); }
Formula Formula::par(Term t) { return literal(FormulaKind::Par, {std::move(t)}); }
Formula Formula::not_par(Term t) { return literal(FormulaKind::NotPar, {std::move(t)}); }
Formula Formula::conj(Formula a, Formula b) { return binary(FormulaKind::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(FormulaKind::Or, std::move(a), std::move(b)); }
Formula Formula::all(std::string var, Formula body) {
  return quantifier(FormulaKind::All, std::move(var), std::move(body));
}
Formula Formula::ex(std::string var, Formula body) {
  return quantifier(FormulaKind::Ex, std::move(var), std::move(body));
}

FormulaKind Formula::kind() const { return node_->kind; }
const std::vector<Term>& Formula::terms() const { return node_->terms; }
const Formula& Formula::left() const { return node_->children.at(0); }
const Formula& Formula::right() const { return node_->children.at(1); }
const Formula& Formula::body() const { return node_->children.at(0); }
const std::string& Formula::variable() const { return node_->var; }
const std::string& Formula::text() const { return node_->text; }
const std::vector<std::string>& Formula::free_variables() const { return node_->free; }
std::size_t Formula::depth() const { return node_->depth; }

bool Formula::occurs_free(const std::string& var) const {
  return std::binary_search(node_->free.begin(), node_->free.end(), var);
}

bool Formula::is_literal() const {
  return node_->kind <= FormulaKind::NotPar;
}
bool Formula::is_binary() const {
  return node_->kind == FormulaKind::And || node_->kind == FormulaKind::Or;
}
bool Formula::is_quantifier() const {
  return node_->kind == FormulaKind::All || node_->kind == FormulaKind::Ex;
}
bool Formula::is_predicate_literal() const {
  return is_literal() && node_->kind != FormulaKind::Eq && node_->kind != FormulaKind::Neq;
}
bool Formula::is_arithmetic_literal() const {
  return (node_->kind == FormulaKind::Eq || node_->kind == FormulaKind::Neq) && is_closed();
}
bool Formula::is_arithmetic() const {
  if (is_predicate_literal()) return false;
  if (is_literal()) return true;
  return std::all_of(node_->children.begin(), node_->children.end(),
                     [](const Formula& c) { return c.is_arithmetic(); });
}

// ---- operations -----------------------------------------------------------

Formula negate(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Eq: return Formula::literal(FormulaKind::Neq, f.terms());
    case FormulaKind::Neq: return Formula::literal(FormulaKind::Eq, f.terms());
    case FormulaKind::Tr: return Formula::literal(FormulaKind::NotTr, f.terms());
    case FormulaKind::NotTr: return Formula::literal(FormulaKind::Tr, f.terms());
    case FormulaKind::Par: return Formula::literal(FormulaKind::NotPar, f.terms());
    case FormulaKind::NotPar: return Formula::literal(FormulaKind::Par, f.terms());
    case FormulaKind::And: return Formula::disj(negate(f.left()), negate(f.right()));
    case FormulaKind::Or: return Formula::conj(negate(f.left()), negate(f.right()));
    case FormulaKind::All: return Formula::ex(f.variable(), negate(f.body()));
    case FormulaKind::Ex: return Formula::all(f.variable(), negate(f.body()));
  }
  return f;
}

Term substitute_in_term(const Term& t, const std::string& var, const Term& by) {
  if (!t.occurs_free(var)) return t;
  switch (t.kind()) {
    case TermKind::Variable:
      return by;
    case TermKind::QuoteFormula:
      return Term::quote_formula(substitute_term(t.quoted(), var, by));
    default: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(substitute_in_term(a, var, by));
      return Term::apply(t.kind(), std::move(args));
    }
  }
}

Formula substitute_term(const Formula& f, const std::string& var, const Term& t) {
  if (!f.occurs_free(var)) return f;
  if (f.is_literal()) {
    std::vector<Term> terms;
    for (const auto& a : f.terms()) terms.push_back(substitute_in_term(a, var, t));
    return Formula::literal(f.kind(), std::move(terms));
  }
  if (f.is_binary()) {
    return Formula::binary(f.kind(), substitute_term(f.left(), var, t),
                           substitute_term(f.right(), var, t));
  }
  // var occurs free, so the binder differs from var.
  if (t.occurs_free(f.variable())) {
    throw Error(ErrorKind::VariableCapture,
                "substituting " + t.text() + " for " + var + " in " + f.text() +
                    " captures " + f.variable());
  }
  return Formula::quantifier(f.kind(), f.variable(), substitute_term(f.body(), var, t));
}

Formula substitute(const Formula& f, const std::string& var, const Term& t) {
  if (!t.is_closed()) {
    throw Error(ErrorKind::OpenTerm, "substitute: term " + t.text() + " is open");
  }
  return substitute_term(f, var, t);
}

}  // namespace tp
