// Gödel coding and the finite sentence universe.
//
// Codes are assigned from a table rather than by pairing arithmetic. Named
// sentences own the codes 0..n-1 (all inside the quantifier domain); every
// other sentence added by closure is coded from kDerivedBase upwards, out of
// reach of arithmetic, so a numeral never picks out a sentence whose code
// depends on the order of closure. Other numbers code no sentence.
//
// Sentences are stored in canonical form: the closed argument of every
// T/P literal is rewritten to the canonical term for its value, i.e.
// quote(name) for a named sentence, <phi> for any other coded sentence, and
// the numeral otherwise. Canonical forms do not depend on the order in which
// derived codes were handed out.

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tp/environment.hpp"
#include "tp/syntax.hpp"

namespace tp {

/// Variable assignment used while evaluating open terms; later entries
/// shadow earlier ones.
using Bindings = std::vector<std::pair<std::string, Natural>>;

struct ClosureOptions {
  std::size_t max_sentences = 1'000'000;
  /// Largest n accepted by iterT(n, c) when the environment sets no #iter.
  Natural max_iter_depth = 64;
};

class CodingTable {
 public:
  explicit CodingTable(std::shared_ptr<const Environment> env, ClosureOptions options = {});

  const Environment& env() const { return *env_; }
  std::shared_ptr<const Environment> env_ptr() const { return env_; }
  const ClosureOptions& options() const { return options_; }

  std::size_t size() const { return formulas_.size(); }
  /// Dense index <-> code.
  Code code_at(std::size_t index) const;
  std::optional<std::size_t> index_of(Code code) const;

  std::optional<Code> find(const Formula& canonical) const;
  const Formula* decode(Code code) const;
  bool is_sentence_code(Code code) const { return decode(code) != nullptr; }

  /// Adds a canonical sentence (no-op when present) and returns its code.
  Code intern(const Formula& canonical);

  /// Canonical term denoting `code`.
  Term canonical_term(Code code) const;

 private:
  std::shared_ptr<const Environment> env_;
  ClosureOptions options_;
  std::vector<Formula> formulas_;
  std::unordered_map<std::string, Code> by_text_;
};

/// Evaluates a term against a frozen table. Syntactic functions whose
/// result sentence is not coded throw Error(NotRepresentable).
Natural eval_term(const Term& t, const CodingTable& table, const Bindings& bindings = {});
/// As above, but coding any missing result sentence into `table`.
Natural eval_term_growing(const Term& t, CodingTable& table, const Bindings& bindings = {});

Formula canonicalize(const Formula& f, const CodingTable& table);
Formula canonicalize_growing(const Formula& f, CodingTable& table);

/// The base-paradoxicality recognizer on a formula with the given code.
bool recognizes_base_paradox(const Formula& f, Code code, const CodingTable& table);

enum class Origin { Named, Root, Negation, Component, Instance, SyntacticValue };
const char* to_string(Origin origin);

struct SentenceInfo {
  Formula formula;
  Origin origin = Origin::Root;
  Code negation = kNoSentence;
  Code left = kNoSentence;              // And / Or components
  Code right = kNoSentence;
  std::vector<Code> instances;          // All / Ex: instance at d = 0..domain
  Natural argument = kNoSentence;       // T / P literals: value of the argument
  bool base = false;                    // B
};

/// A coding table closed under negation, components, quantifier instances
/// over the domain, and the sentences denoted by closed T/P arguments.
/// Immutable once built.
class SentenceUniverse {
 public:
  static std::shared_ptr<const SentenceUniverse> close(
      std::shared_ptr<const Environment> env, std::span<const Formula> roots = {},
      ClosureOptions options = {});

  const Environment& env() const { return table_.env(); }
  const CodingTable& table() const { return table_; }
  Natural domain() const { return env().domain(); }

  std::size_t size() const { return infos_.size(); }
  Code code_at(std::size_t index) const { return table_.code_at(index); }
  std::optional<std::size_t> index_of(Code code) const;
  std::vector<Code> codes() const;
  bool contains(Code code) const { return index_of(code).has_value(); }

  /// Throws Error(UnknownCode).
  const SentenceInfo& info(Code code) const;
  const SentenceInfo& info_at(std::size_t index) const { return infos_[index]; }
  const Formula& formula(Code code) const { return info(code).formula; }

  /// Code of an arbitrary closed sentence after canonicalization; nullopt if
  /// the sentence (or anything it denotes) lies outside the universe.
  std::optional<Code> find(const Formula& sentence) const;
  Code code_of_name(std::string_view name) const { return env().code(name); }

  /// B: sentence recognized (or declared) base paradoxical. False for
  /// codes outside the universe.
  bool is_base_paradoxical(Code code) const;
  /// Pi(x) := B(x) or B(negation of x).
  bool pi(Code code) const;

  /// Closing again adds nothing; exposed for tests.
  std::size_t reclose_additions() const;

  /// Human-readable label: the sentence name when named, else its text.
  std::string label(Code code) const;

 private:
  explicit SentenceUniverse(CodingTable table) : table_(std::move(table)) {}

  CodingTable table_;
  std::vector<SentenceInfo> infos_;
};

bool is_base_paradoxical(Code code, const SentenceUniverse& universe);
bool pi(Code code, const SentenceUniverse& universe);

}  // namespace tp
