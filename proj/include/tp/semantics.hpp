// Strong Kleene evaluation over partial models.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tp/sequent.hpp"
#include "tp/universe.hpp"

namespace tp {

enum class TruthValue { False, Undefined, True };
const char* to_string(TruthValue v);

/// Set of universe members, stored as a bitset over dense universe indices.
class CodeSet {
 public:
  CodeSet() = default;
  explicit CodeSet(std::size_t capacity) : bits_((capacity + 63) / 64, 0), capacity_(capacity) {}

  std::size_t capacity() const { return capacity_; }
  bool test(std::size_t index) const { return (bits_[index / 64] >> (index % 64)) & 1U; }
  void set(std::size_t index) { bits_[index / 64] |= std::uint64_t{1} << (index % 64); }
  void reset(std::size_t index) { bits_[index / 64] &= ~(std::uint64_t{1} << (index % 64)); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> indices() const;

  bool subset_of(const CodeSet& other) const;
  bool intersects(const CodeSet& other) const;
  CodeSet& operator|=(const CodeSet& other);
  friend CodeSet operator|(CodeSet a, const CodeSet& b) { return a |= b; }
  friend bool operator==(const CodeSet&, const CodeSet&) = default;

 private:
  std::vector<std::uint64_t> bits_;
  std::size_t capacity_ = 0;
};

enum class Slot { TPlus, TMinus, PPlus, PMinus };
const char* to_string(Slot slot);

/// (N, T, P) with T = (T+, T-) and P = (P+, P-) over the codes of a universe.
class PartialModel {
 public:
  explicit PartialModel(std::shared_ptr<const SentenceUniverse> universe);

  const SentenceUniverse& universe() const { return *universe_; }
  std::shared_ptr<const SentenceUniverse> universe_ptr() const { return universe_; }

  CodeSet& set(Slot slot) { return sets_[static_cast<int>(slot)]; }
  const CodeSet& set(Slot slot) const { return sets_[static_cast<int>(slot)]; }

  /// False for codes outside the universe.
  bool contains(Slot slot, Code code) const;
  /// Throws Error(UnknownCode) for codes outside the universe.
  void insert(Slot slot, Code code);
  std::vector<Code> codes(Slot slot) const;

  /// Componentwise inclusion on all four sets.
  bool leq(const PartialModel& other) const;
  friend bool operator==(const PartialModel& a, const PartialModel& b) {
    return a.universe_ == b.universe_ && a.sets_ == b.sets_;
  }

 private:
  std::shared_ptr<const SentenceUniverse> universe_;
  std::vector<CodeSet> sets_;
};

/// M |=_SK phi (positive) or M |=_SK negate(phi) (negative), under the given
/// assignment of the free variables.
bool satisfies(const PartialModel& m, const Formula& phi, const Bindings& bindings = {},
               bool positive = true);

/// True iff M |= phi, False iff M |= negate(phi), else Undefined. Terms whose
/// value is a sentence outside the universe raise Error(NotRepresentable).
TruthValue value(const PartialModel& m, const Formula& phi, const Bindings& bindings = {});
TruthValue value(const PartialModel& m, Code code);

/// Values of every universe member, indexed like the universe. Computed
/// bottom-up over the closure structure; requires a consistent model.
std::vector<TruthValue> universe_values(const PartialModel& m);

/// If every antecedent formula is true then some succedent formula is true,
/// for every assignment of free variables to {0..domain}.
bool sat_sequent(const PartialModel& m, const Sequent& s);

bool is_consistent(const PartialModel& m);
/// No member is both determinate (phi | ~phi true) and subject to a
/// closure condition of the paradoxicality predicate. Defined in jump.cpp.
bool is_sound(const PartialModel& m);

struct Countermodel {
  PartialModel model;
  std::string description;
  TruthValue lhs;
  TruthValue rhs;
};

/// Tries a fixed family of consistent models over a universe containing
/// both sentences and returns the first where their values differ.
std::optional<Countermodel> search_countermodel(const Formula& lhs, const Formula& rhs,
                                                std::shared_ptr<const Environment> env);

/// Lists the members of each set by label, one set per line.
std::string describe(const PartialModel& m);

}  // namespace tp
