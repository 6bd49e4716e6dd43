// Abstract syntax of the language with truth and paradoxicality predicates.
//
// Formulas are in negation normal form (Tait style): negation only exists on
// literals, and `negate` computes the De Morgan dual. Terms and formulas are
// immutable, reference-counted trees; copying a Term or Formula is cheap.
// Every node caches its printed text, which doubles as the structural
// identity used for ordering and hashing.

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tp {

using Natural = std::uint64_t;
using Code = Natural;

/// Value of a syntactic function applied outside the coding table (for
/// instance the negation of a number that codes no sentence). Never a code.
inline constexpr Natural kNoSentence = std::numeric_limits<Natural>::max();

/// Codes of sentences that have no name start here. Arithmetic never reaches
/// this range: numerals, sums and products at or above it denote
/// kNoSentence.
inline constexpr Natural kDerivedBase = Natural{1} << 62;

enum class ErrorKind {
  Parse,
  OpenTerm,
  UndefinedName,
  NotRepresentable,
  DomainTooSmall,
  DuplicateSentence,
  CircularDefinition,
  ClosureCap,
  VariableCapture,
  InconsistentInput,
  StageInconsistency,
  NonTermination,
  UnknownCode,
  GuardViolation,
  UnknownAxiom,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {
struct TermNode;
struct FormulaNode;
}  // namespace detail

class Formula;

enum class TermKind {
  Numeral,
  Variable,
  Succ,
  Plus,
  Times,
  Num,     // numeral-of function; numbers and codes of numerals coincide
  DotEq,   // (a, b) -> #(a = b)
  DotNeq,  // (a, b) -> #(a != b)
  DotAnd,  // (#phi, #psi) -> #(phi & psi)
  DotOr,   // (#phi, #psi) -> #(phi | psi)
  DotAll,  // (i, #phi) -> #(all x_i. phi)
  DotEx,   // (i, #phi) -> #(ex x_i. phi)
  DotT,    // n -> #T(n)
  DotP,    // n -> #P(n)
  DotNegT, // n -> #~T(n)
  DotNegP, // n -> #~P(n)
  DotNeg,  // #phi -> #negate(phi)
  IterT,   // (k, #phi) -> #T...T phi with k copies of T
  Quote,   // code of a named sentence
  QuoteFormula,  // <phi>: code of phi, free variables replaced by numerals
};

class Term {
 public:
  static Term numeral(Natural n);
  static Term variable(std::string name);
  static Term succ(Term t);
  static Term plus(Term a, Term b);
  static Term times(Term a, Term b);
  /// Unary or binary syntactic function (Num, Dot*, IterT).
  static Term apply(TermKind kind, std::vector<Term> args);
  static Term quote(std::string name);
  static Term quote_formula(Formula f);

  TermKind kind() const;
  Natural value() const;              // Numeral only
  const std::string& name() const;    // Variable and Quote
  const std::vector<Term>& args() const;
  Formula quoted() const;             // QuoteFormula only

  const std::string& text() const;
  const std::vector<std::string>& free_variables() const;
  bool is_closed() const { return free_variables().empty(); }
  bool occurs_free(const std::string& var) const;

  friend bool operator==(const Term& a, const Term& b) {
    return a.node_ == b.node_ || a.text() == b.text();
  }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    return a.text() <=> b.text();
  }

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const detail::TermNode> node_;
  friend struct detail::TermNode;
};

enum class FormulaKind { Eq, Neq, Tr, NotTr, Par, NotPar, And, Or, All, Ex };

class Formula {
 public:
  static Formula eq(Term a, Term b);
  static Formula neq(Term a, Term b);
  static Formula tr(Term t);
  static Formula not_tr(Term t);
  static Formula par(Term t);
  static Formula not_par(Term t);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula all(std::string var, Formula body);
  static Formula ex(std::string var, Formula body);
  static Formula literal(FormulaKind kind, std::vector<Term> terms);
  static Formula binary(FormulaKind kind, Formula a, Formula b);
  static Formula quantifier(FormulaKind kind, std::string var, Formula body);

  FormulaKind kind() const;
  const std::vector<Term>& terms() const;    // literals: 1 or 2 terms
  const Formula& left() const;                // And / Or
  const Formula& right() const;               // And / Or
  const Formula& body() const;                // All / Ex
  const std::string& variable() const;        // All / Ex

  bool is_literal() const;
  bool is_binary() const;
  bool is_quantifier() const;
  /// T, ~T, P, ~P literals.
  bool is_predicate_literal() const;
  /// Closed Eq/Neq literal.
  bool is_arithmetic_literal() const;
  /// No T or P literal anywhere. Quoted formulas are terms and do not count.
  bool is_arithmetic() const;
  std::size_t depth() const;

  const std::string& text() const;
  const std::vector<std::string>& free_variables() const;
  bool is_closed() const { return free_variables().empty(); }
  bool occurs_free(const std::string& var) const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.node_ == b.node_ || a.text() == b.text();
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    return a.text() <=> b.text();
  }

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const detail::FormulaNode> node_;
  friend struct detail::FormulaNode;
};

/// De Morgan dual. Involutive: negate(negate(f)) == f.
Formula negate(const Formula& f);

/// Replaces free occurrences of `var` by the closed term `t`.
/// Throws Error(OpenTerm) if `t` is open.
Formula substitute(const Formula& f, const std::string& var, const Term& t);

/// Like `substitute` but admits open terms; throws Error(VariableCapture) if
/// a free variable of `t` would be captured by a binder of `f`.
Formula substitute_term(const Formula& f, const std::string& var, const Term& t);

Term substitute_in_term(const Term& t, const std::string& var, const Term& by);

bool is_function_kind(TermKind kind);
const char* function_name(TermKind kind);
std::size_t function_arity(TermKind kind);

}  // namespace tp

template <>
struct std::hash<tp::Formula> {
  std::size_t operator()(const tp::Formula& f) const noexcept {
    return std::hash<std::string>{}(f.text());
  }
};
