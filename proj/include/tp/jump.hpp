// The double jump and its least fixed point.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tp/semantics.hpp"

namespace tp {

enum class Variant { TP, TPPlus };
const char* to_string(Variant v);
/// "tp" or "tp-plus"; throws Error(Parse) otherwise.
Variant parse_variant(std::string_view text);

/// Disjunction of the seven closure conditions for the paradoxicality
/// predicate at M. Throws Error(UnknownCode) outside the universe.
bool p_condition(const PartialModel& m, Code code);

/// Codes of the P(t) literals in the universe.
CodeSet p_literal_set(const SentenceUniverse& u);

/// Both halves are computed from the same snapshot. Throws
/// Error(InconsistentInput) on an inconsistent model.
PartialModel jump(const PartialModel& m);
/// As jump, with every P(t) literal of the universe added to P-.
PartialModel jump_star(const PartialModel& m);

/// Stage 0: empty, or P- seeded with the P(t) literals for TP-plus.
PartialModel initial_stage(std::shared_ptr<const SentenceUniverse> u, Variant v);

struct StageSequence {
  Variant variant = Variant::TP;
  std::vector<PartialModel> stages;  // stages[0] is the starting interpretation
  std::map<Code, Natural> ranks;      // least stage in P+

  const PartialModel& fixed_point() const { return stages.back(); }
  /// Index of the first stage equal to its successor.
  std::size_t fixed_point_index() const { return stages.size() - 2; }
  const SentenceUniverse& universe() const { return stages.front().universe(); }
  std::optional<Natural> rank(Code code) const;
};

/// Iterates from the initial stage until two consecutive stages coincide.
/// Every stage is checked for consistency and soundness
/// (Error(StageInconsistency)); at most 4|U|+1 jumps are taken
/// (Error(NonTermination)).
StageSequence lfp(std::shared_ptr<const SentenceUniverse> u, Variant v = Variant::TP);

struct Classification {
  enum class Kind { True, False, Paradoxical, Independent };
  Kind kind = Kind::Independent;
  Natural rank = 0;  // Paradoxical only

  std::string text() const;
  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(Code code, const StageSequence& seq);

struct InvariantResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string detail;  // first counterexample
};

/// Consistency, P+ disjoint from T+ and T-, the shape of P-, and the
/// anti-extension law, at every stage.
std::vector<InvariantResult> check_stage_invariants(const StageSequence& seq);
/// Monotone stages, transparency of T and P, closure symmetry of P+,
/// no paradoxical P literal, base paradoxical sentences never determinate.
std::vector<InvariantResult> check_fixed_point_invariants(const StageSequence& seq);

}  // namespace tp
