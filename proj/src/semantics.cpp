#include "tp/semantics.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace tp {

const char* to_string(TruthValue v) {
  switch (v) {
    case TruthValue::False: return "false";
    case TruthValue::Undefined: return "undefined";
    case TruthValue::True: return "true";
  }
  return "?";
}

const char* to_string(Slot slot) {
  switch (slot) {
    case Slot::TPlus: return "T+";
    case Slot::TMinus: return "T-";
    case Slot::PPlus: return "P+";
    case Slot::PMinus: return "P-";
  }
  return "?";
}

// ---- CodeSet ----------------------------------------------------------------

std::size_t CodeSet::count() const {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> CodeSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    for (std::uint64_t bits = bits_[w]; bits; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

bool CodeSet::subset_of(const CodeSet& other) const {
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] & ~other.bits_[w]) return false;
  }
  return true;
}

bool CodeSet::intersects(const CodeSet& other) const {
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] & other.bits_[w]) return true;
  }
  return false;
}

CodeSet& CodeSet::operator|=(const CodeSet& other) {
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= other.bits_[w];
  return *this;
}

// ---- PartialModel -----------------------------------------------------------

PartialModel::PartialModel(std::shared_ptr<const SentenceUniverse> universe)
    : universe_(std::move(universe)), sets_(4, CodeSet(universe_->size())) {}

bool PartialModel::contains(Slot slot, Code code) const {
  auto index = universe_->index_of(code);
  return index && set(slot).test(*index);
}

void PartialModel::insert(Slot slot, Code code) {
  auto index = universe_->index_of(code);
  if (!index) {
    throw Error(ErrorKind::UnknownCode,
                "code " + std::to_string(code) + " is not in the universe");
  }
  set(slot).set(*index);
}

std::vector<Code> PartialModel::codes(Slot slot) const {
  std::vector<Code> out;
  for (auto i : set(slot).indices()) out.push_back(universe_->code_at(i));
  return out;
}

bool PartialModel::leq(const PartialModel& other) const {
  for (int s = 0; s < 4; ++s) {
    if (!sets_[s].subset_of(other.sets_[s])) return false;
  }
  return true;
}

// ---- satisfaction -----------------------------------------------------------

namespace {

bool literal_holds(const PartialModel& m, Slot yes, Slot no, const Term& t,
                   const Bindings& b, bool positive) {
  Natural v = eval_term(t, m.universe().table(), b);
  return m.contains(positive ? yes : no, v);
}

}  // namespace

bool satisfies(const PartialModel& m, const Formula& phi, const Bindings& b, bool positive) {
  const CodingTable& table = m.universe().table();
  switch (phi.kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Neq: {
      bool equal = eval_term(phi.terms()[0], table, b) == eval_term(phi.terms()[1], table, b);
      return (phi.kind() == FormulaKind::Eq) == positive ? equal : !equal;
    }
    case FormulaKind::Tr:
      return literal_holds(m, Slot::TPlus, Slot::TMinus, phi.terms()[0], b, positive);
    case FormulaKind::NotTr:
      return literal_holds(m, Slot::TMinus, Slot::TPlus, phi.terms()[0], b, positive);
    case FormulaKind::Par:
      return literal_holds(m, Slot::PPlus, Slot::PMinus, phi.terms()[0], b, positive);
    case FormulaKind::NotPar:
      return literal_holds(m, Slot::PMinus, Slot::PPlus, phi.terms()[0], b, positive);
    case FormulaKind::And:
    case FormulaKind::Or: {
      // A positive conjunction or a negated disjunction needs both sides.
      bool both = (phi.kind() == FormulaKind::And) == positive;
      bool l = satisfies(m, phi.left(), b, positive);
      if (both && !l) return false;
      if (!both && l) return true;
      return satisfies(m, phi.right(), b, positive);
    }
    case FormulaKind::All:
    case FormulaKind::Ex: {
      bool every = (phi.kind() == FormulaKind::All) == positive;
      Bindings inner = b;
      inner.emplace_back(phi.variable(), 0);
      for (Natural d = 0; d <= m.universe().domain(); ++d) {
        inner.back().second = d;
        bool s = satisfies(m, phi.body(), inner, positive);
        if (every && !s) return false;
        if (!every && s) return true;
      }
      return every;
    }
  }
  return false;
}

TruthValue value(const PartialModel& m, const Formula& phi, const Bindings& b) {
  if (satisfies(m, phi, b, true)) return TruthValue::True;
  if (satisfies(m, phi, b, false)) return TruthValue::False;
  return TruthValue::Undefined;
}

TruthValue value(const PartialModel& m, Code code) {
  return value(m, m.universe().formula(code));
}

std::vector<TruthValue> universe_values(const PartialModel& m) {
  const SentenceUniverse& u = m.universe();
  constexpr auto kUnset = static_cast<TruthValue>(-1);
  std::vector<TruthValue> values(u.size(), kUnset);

  auto predicate = [&](Slot yes, Slot no, Natural arg) {
    if (m.contains(yes, arg)) return TruthValue::True;
    if (m.contains(no, arg)) return TruthValue::False;
    return TruthValue::Undefined;
  };

  std::function<TruthValue(std::size_t)> at = [&](std::size_t i) -> TruthValue {
    if (values[i] != kUnset) return values[i];
    const SentenceInfo& info = u.info_at(i);
    auto sub = [&](Code c) { return at(*u.index_of(c)); };
    TruthValue v = TruthValue::Undefined;
    switch (info.formula.kind()) {
      case FormulaKind::Eq:
      case FormulaKind::Neq:
        v = value(m, info.formula);
        break;
      case FormulaKind::Tr: v = predicate(Slot::TPlus, Slot::TMinus, info.argument); break;
      case FormulaKind::NotTr: v = predicate(Slot::TMinus, Slot::TPlus, info.argument); break;
      case FormulaKind::Par: v = predicate(Slot::PPlus, Slot::PMinus, info.argument); break;
      case FormulaKind::NotPar: v = predicate(Slot::PMinus, Slot::PPlus, info.argument); break;
      case FormulaKind::And: v = std::min(sub(info.left), sub(info.right)); break;
      case FormulaKind::Or: v = std::max(sub(info.left), sub(info.right)); break;
      case FormulaKind::All:
        v = TruthValue::True;
        for (Code c : info.instances) v = std::min(v, sub(c));
        break;
      case FormulaKind::Ex:
        v = TruthValue::False;
        for (Code c : info.instances) v = std::max(v, sub(c));
        break;
    }
    values[i] = v;
    return v;
  };

  for (std::size_t i = 0; i < u.size(); ++i) at(i);
  return values;
}

bool sat_sequent(const PartialModel& m, const Sequent& s) {
  std::set<std::string> vars;
  for (const auto* side : {&s.ant, &s.suc}) {
    for (const auto& f : *side) vars.insert(f.free_variables().begin(), f.free_variables().end());
  }
  Bindings b;
  for (const auto& v : vars) b.emplace_back(v, 0);

  auto holds = [&] {
    for (const auto& f : s.ant) {
      if (!satisfies(m, f, b, true)) return true;
    }
    for (const auto& f : s.suc) {
      if (satisfies(m, f, b, true)) return true;
    }
    return false;
  };

  // Odometer over all assignments into {0..domain}.
  const Natural domain = m.universe().domain();
  while (true) {
    if (!holds()) return false;
    std::size_t k = 0;
    while (k < b.size() && b[k].second == domain) b[k++].second = 0;
    if (k == b.size()) return true;
    ++b[k].second;
  }
}

bool is_consistent(const PartialModel& m) {
  return !m.set(Slot::TPlus).intersects(m.set(Slot::TMinus)) &&
         !m.set(Slot::PPlus).intersects(m.set(Slot::PMinus));
}

// ---- countermodels ----------------------------------------------------------

std::optional<Countermodel> search_countermodel(const Formula& lhs, const Formula& rhs,
                                                std::shared_ptr<const Environment> env) {
  std::vector<Formula> roots{lhs, rhs};
  auto universe = SentenceUniverse::close(std::move(env), roots);
  const std::size_t n = universe->size();

  auto differ = [&](PartialModel m, std::string description) -> std::optional<Countermodel> {
    TruthValue a = value(m, lhs);
    TruthValue b = value(m, rhs);
    if (a == b) return std::nullopt;
    return Countermodel{std::move(m), std::move(description), a, b};
  };

  PartialModel empty(universe);
  if (auto c = differ(empty, "empty model")) return c;

  static constexpr Slot slots[] = {Slot::TPlus, Slot::TMinus, Slot::PPlus, Slot::PMinus};
  for (Slot slot : slots) {
    PartialModel m(universe);
    for (std::size_t i = 0; i < n; ++i) m.set(slot).set(i);
    if (auto c = differ(m, std::string(to_string(slot)) + " = U")) return c;
  }
  for (Slot slot : slots) {
    for (std::size_t i = 0; i < n; ++i) {
      PartialModel m(universe);
      m.set(slot).set(i);
      if (auto c = differ(m, std::string(to_string(slot)) + " = {" +
                                 universe->label(universe->code_at(i)) + "}")) {
        return c;
      }
    }
  }
  if (n <= 64) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        PartialModel m(universe);
        m.set(Slot::TPlus).set(i);
        m.set(Slot::TMinus).set(j);
        if (auto c = differ(m, "T+ = {" + universe->label(universe->code_at(i)) + "}, T- = {" +
                                   universe->label(universe->code_at(j)) + "}")) {
          return c;
        }
      }
    }
  }
  return std::nullopt;
}

std::string describe(const PartialModel& m) {
  std::string out;
  static constexpr Slot slots[] = {Slot::TPlus, Slot::TMinus, Slot::PPlus, Slot::PMinus};
  for (Slot slot : slots) {
    out += to_string(slot);
    out += " = {";
    bool first = true;
    for (Code c : m.codes(slot)) {
      if (!first) out += ", ";
      out += m.universe().label(c);
      first = false;
    }
    out += "}\n";
  }
  return out;
}

}  // namespace tp
