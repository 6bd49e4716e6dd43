// Sequent calculus for SK_=, PA over SK, TP and TP-plus.
//
// Sequents are pairs of formula sets, so contraction and exchange are
// implicit. The checker canonicalizes every formula against a coding table
// grown from the definition environment, so `quote(lam)`, `<~T(quote(lam))>`
// and `0` all denote the same sentence when lam has code 0.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tp/jump.hpp"
#include "tp/parser.hpp"
#include "tp/sequent.hpp"

namespace tp {

enum class System { SK, PASK, TP, TPPlus };
const char* to_string(System s);
/// "SK", "PA-SK", "TP", "TP-plus".
System parse_system(std::string_view text);

enum class Rule {
  Axiom, Lneg, Cut, LW, RW, Lor, Ror, Land, Rand, Lex, Rex, Lall, Rall, Ref, Repl, IND, Arith,
};
const char* to_string(Rule r);
Rule parse_rule(std::string_view text);

/// Parameters of a rule application; which ones are used depends on the rule.
struct RuleParams {
  std::optional<Formula> formula;          // principal / cut / weakened formula
  std::optional<std::string> eigenvariable;
  std::optional<std::string> variable;     // Repl, IND: the variable of phi(x)
  std::optional<Term> term;
  std::optional<Term> term2;
  std::optional<std::string> schema;       // Axiom
  std::optional<std::string> dir;          // Axiom, two-way schemas: "lr" or "rl"

  friend bool operator==(const RuleParams&, const RuleParams&) = default;
};

struct ProofTree {
  Rule rule = Rule::Axiom;
  RuleParams params;
  Sequent conclusion;
  std::vector<ProofTree> premises;

  std::size_t size() const;
  friend bool operator==(const ProofTree&, const ProofTree&) = default;
};

/// Axiom schemas, with the system that first admits each one. Two-way
/// schemas take dir "lr" (left side in the antecedent) or "rl".
struct SchemaInfo {
  std::string name;
  System system;
  bool two_way;
  bool extra;  // only admitted with allow_extra_axiom
};
const std::vector<SchemaInfo>& axiom_schemas();
const SchemaInfo* find_schema(std::string_view name);

/// Builds the instance of a schema, canonicalized against `table`. Pi(phi)
/// appears as `0 = 0` when it holds and as `0 = 1` otherwise.
/// Errors: UnknownAxiom, GuardViolation (wrong shape, open parameter).
Sequent instantiate_axiom(const std::string& schema, const RuleParams& params, CodingTable& table);

struct CheckOptions {
  System system = System::TP;
  bool allow_extra_axiom = false;
};

struct Diagnostic {
  std::string path;  // "root", "root.0", "root.0.1", ...
  std::string message;
};

struct Verdict {
  bool accepted = true;
  std::size_t nodes = 0;
  std::vector<Diagnostic> diagnostics;
};

Verdict check_proof(const ProofTree& proof, std::shared_ptr<const Environment> env,
                    const CheckOptions& options = {});

/// Canonicalizes the sequent against the universe and evaluates it at the
/// fixed point. Throws Error(UnknownCode) if some formula mentions a
/// sentence outside the universe.
bool cross_validate(const Sequent& s, const StageSequence& seq);

/// Closed formulas of the end sequent, suitable as universe roots.
std::vector<Formula> sequent_roots(const Sequent& s);

/// Every instance over U of the truth, paradoxicality and interaction
/// schemas (plus notPP for TP-plus) whose sentences all lie in U.
struct AxiomInstance {
  std::string schema;
  std::string dir;
  std::string principal;
  Sequent sequent;
};
std::vector<AxiomInstance> universe_axiom_instances(const SentenceUniverse& u, Variant v);

struct AuditResult {
  std::size_t instances = 0;
  std::vector<AxiomInstance> failures;
};
AuditResult audit_axioms(const StageSequence& seq);

// ---- proof files ------------------------------------------------------------

NameResolver env_resolver(std::shared_ptr<const Environment> env);

/// JSON with fields rule, params, premises, conclusion {ant, suc}.
ProofTree parse_proof(std::string_view json, const NameResolver& resolve = {});
ProofTree load_proof(const std::string& path, const NameResolver& resolve = {});
std::string print_proof(const ProofTree& proof);

// ---- derived rules ----------------------------------------------------------

/// Macros: "p-implies-not-tlem" (formula phi with Pi(phi)), "p-not-pp" and
/// "not-p-not-pp" (term t), "p-neg-equiv" (formula: T or P literal, dir),
/// "negative-control" (formula phi with Pi(phi); needs the extra axiom).
/// Throws Error(GuardViolation) for unsupported instances.
ProofTree expand_macro(const std::string& name, const RuleParams& params,
                       std::shared_ptr<const Environment> env);

}  // namespace tp
