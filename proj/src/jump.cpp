#include "tp/jump.hpp"

namespace tp {

const char* to_string(Variant v) { return v == Variant::TP ? "tp" : "tp-plus"; }

Variant parse_variant(std::string_view text) {
  if (text == "tp") return Variant::TP;
  if (text == "tp-plus") return Variant::TPPlus;
  throw Error(ErrorKind::Parse, "unknown variant '" + std::string(text) + "'");
}

namespace {

bool p_condition_at(const PartialModel& m, std::size_t index) {
  const SentenceUniverse& u = m.universe();
  const SentenceInfo& info = u.info_at(index);
  if (u.pi(u.code_at(index))) return true;

  auto in = [&](Slot s, Code c) { return m.contains(s, c); };
  switch (info.formula.kind()) {
    case FormulaKind::Tr:
    case FormulaKind::NotTr:
      return in(Slot::PPlus, info.argument);
    case FormulaKind::And:
    case FormulaKind::Or: {
      Slot decided = info.formula.kind() == FormulaKind::And ? Slot::TPlus : Slot::TMinus;
      bool pl = in(Slot::PPlus, info.left), pr = in(Slot::PPlus, info.right);
      return (pl && pr) || (in(decided, info.left) && pr) || (in(decided, info.right) && pl);
    }
    case FormulaKind::All:
    case FormulaKind::Ex: {
      Slot decided = info.formula.kind() == FormulaKind::All ? Slot::TPlus : Slot::TMinus;
      bool some = false;
      for (Code c : info.instances) {
        bool p = in(Slot::PPlus, c);
        if (!p && !in(decided, c)) return false;
        some = some || p;
      }
      return some;
    }
    default:
      return false;
  }
}

PartialModel jump_impl(const PartialModel& m, bool star) {
  if (!is_consistent(m)) {
    throw Error(ErrorKind::InconsistentInput, "jump applied to an inconsistent model");
  }
  const SentenceUniverse& u = m.universe();
  std::vector<TruthValue> values = universe_values(m);
  PartialModel next(m.universe_ptr());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (values[i] == TruthValue::True) next.set(Slot::TPlus).set(i);
    if (values[i] == TruthValue::False) next.set(Slot::TMinus).set(i);
    if (p_condition_at(m, i)) next.set(Slot::PPlus).set(i);
  }
  // phi | ~phi is true exactly when phi is true or false.
  next.set(Slot::PMinus) = next.set(Slot::TPlus) | next.set(Slot::TMinus);
  if (star) next.set(Slot::PMinus) |= p_literal_set(u);
  return next;
}

}  // namespace

bool p_condition(const PartialModel& m, Code code) {
  auto index = m.universe().index_of(code);
  if (!index) {
    throw Error(ErrorKind::UnknownCode, "code " + std::to_string(code) + " is not in the universe");
  }
  return p_condition_at(m, *index);
}

CodeSet p_literal_set(const SentenceUniverse& u) {
  CodeSet s(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u.info_at(i).formula.kind() == FormulaKind::Par) s.set(i);
  }
  return s;
}

PartialModel jump(const PartialModel& m) { return jump_impl(m, false); }
PartialModel jump_star(const PartialModel& m) { return jump_impl(m, true); }

bool is_sound(const PartialModel& m) {
  const SentenceUniverse& u = m.universe();
  std::vector<TruthValue> values;
  if (is_consistent(m)) values = universe_values(m);
  for (std::size_t i = 0; i < u.size(); ++i) {
    TruthValue v = values.empty() ? value(m, u.info_at(i).formula) : values[i];
    if (v != TruthValue::Undefined && p_condition_at(m, i)) return false;
  }
  return true;
}

PartialModel initial_stage(std::shared_ptr<const SentenceUniverse> u, Variant v) {
  PartialModel m(u);
  if (v == Variant::TPPlus) m.set(Slot::PMinus) = p_literal_set(*u);
  return m;
}

std::optional<Natural> StageSequence::rank(Code code) const {
  auto it = ranks.find(code);
  if (it == ranks.end()) return std::nullopt;
  return it->second;
}

StageSequence lfp(std::shared_ptr<const SentenceUniverse> u, Variant v) {
  StageSequence seq;
  seq.variant = v;
  seq.stages.push_back(initial_stage(u, v));
  const std::size_t budget = 4 * u->size() + 1;
  for (std::size_t alpha = 1;; ++alpha) {
    if (alpha > budget) {
      throw Error(ErrorKind::NonTermination,
                  "no fixed point after " + std::to_string(budget) + " stages");
    }
    PartialModel next = v == Variant::TP ? jump(seq.stages.back()) : jump_star(seq.stages.back());
    if (!is_consistent(next) || !is_sound(next)) {
      throw Error(ErrorKind::StageInconsistency,
                  "stage " + std::to_string(alpha) + " is " +
                      (is_consistent(next) ? "unsound" : "inconsistent"));
    }
    for (auto i : next.set(Slot::PPlus).indices()) seq.ranks.emplace(u->code_at(i), alpha);
    bool done = next == seq.stages.back();
    seq.stages.push_back(std::move(next));
    if (done) break;
  }
  return seq;
}

std::string Classification::text() const {
  switch (kind) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Paradoxical: return "paradoxical(" + std::to_string(rank) + ")";
    case Kind::Independent: return "independent";
  }
  return "?";
}

Classification classify(Code code, const StageSequence& seq) {
  const PartialModel& m = seq.fixed_point();
  if (!m.universe().contains(code)) {
    throw Error(ErrorKind::UnknownCode, "code " + std::to_string(code) + " is not in the universe");
  }
  if (m.contains(Slot::TPlus, code)) return {Classification::Kind::True};
  if (m.contains(Slot::TMinus, code)) return {Classification::Kind::False};
  if (m.contains(Slot::PPlus, code)) return {Classification::Kind::Paradoxical, *seq.rank(code)};
  return {Classification::Kind::Independent};
}

std::vector<InvariantResult> check_stage_invariants(const StageSequence& seq) {
  const SentenceUniverse& u = seq.universe();
  const CodeSet seeds = p_literal_set(u);
  InvariantResult t_disjoint{"T+ and T- disjoint"};
  InvariantResult p_disjoint{"P+ and P- disjoint"};
  InvariantResult tp_disjoint{"T+ and T- disjoint from P+"};
  InvariantResult p_minus{seq.variant == Variant::TP ? "P- = T+ u T-"
                                                     : "P- contains T+ u T- and P literals"};
  InvariantResult anti{"T- = negations of T+"};

  auto fail = [](InvariantResult& r, std::size_t stage, const std::string& what) {
    if (r.passed) r.detail = "stage " + std::to_string(stage) + ": " + what;
    r.passed = false;
  };

  for (std::size_t a = 0; a < seq.stages.size(); ++a) {
    const PartialModel& m = seq.stages[a];
    const CodeSet& tp = m.set(Slot::TPlus);
    const CodeSet& tm = m.set(Slot::TMinus);
    const CodeSet& pp = m.set(Slot::PPlus);
    const CodeSet& pm = m.set(Slot::PMinus);
    for (auto* r : {&t_disjoint, &p_disjoint, &tp_disjoint, &p_minus}) ++r->checked;
    if (tp.intersects(tm)) fail(t_disjoint, a, "overlap");
    if (pp.intersects(pm)) fail(p_disjoint, a, "overlap");
    if ((tp | tm).intersects(pp)) fail(tp_disjoint, a, "overlap");
    if (seq.variant == Variant::TP) {
      if (!(pm == (tp | tm))) fail(p_minus, a, "P- differs from T+ u T-");
    } else if (!(tp | tm | seeds).subset_of(pm)) {
      fail(p_minus, a, "P- misses a required member");
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      ++anti.checked;
      Code neg = u.info_at(i).negation;
      if (tm.test(i) != m.contains(Slot::TPlus, neg)) {
        fail(anti, a, u.label(u.code_at(i)));
      }
    }
  }
  return {t_disjoint, p_disjoint, tp_disjoint, p_minus, anti};
}

std::vector<InvariantResult> check_fixed_point_invariants(const StageSequence& seq) {
  const SentenceUniverse& u = seq.universe();
  const PartialModel& fp = seq.fixed_point();
  const CodingTable& table = u.table();

  InvariantResult monotone{"stages weakly increasing"};
  InvariantResult fixed{"last two stages equal"};
  InvariantResult transparent_t{"T transparent at the fixed point"};
  InvariantResult transparent_p{"P tracks P+ and P- at the fixed point"};
  InvariantResult symmetry{"P+ closed under negation"};
  InvariantResult no_pp{"no P literal paradoxical"};
  InvariantResult base{"base paradoxical sentences never determinate"};
  InvariantResult ranks{"ranks defined exactly on P+"};

  auto fail = [](InvariantResult& r, const std::string& what) {
    if (r.passed) r.detail = what;
    r.passed = false;
  };

  for (std::size_t a = 0; a + 1 < seq.stages.size(); ++a) {
    ++monotone.checked;
    if (!seq.stages[a].leq(seq.stages[a + 1])) fail(monotone, "stage " + std::to_string(a));
  }
  ++fixed.checked;
  if (seq.stages.size() < 2 || !(seq.stages[seq.stages.size() - 2] == fp)) fail(fixed, "differ");

  std::vector<TruthValue> values = universe_values(fp);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Code c = u.code_at(i);
    const SentenceInfo& info = u.info_at(i);
    const std::string label = u.label(c);
    const Term name = table.canonical_term(c);

    ++transparent_t.checked;
    if (value(fp, Formula::tr(name)) != values[i]) fail(transparent_t, label);

    ++transparent_p.checked;
    TruthValue pv = value(fp, Formula::par(name));
    TruthValue expected = fp.set(Slot::PPlus).test(i)    ? TruthValue::True
                          : fp.set(Slot::PMinus).test(i) ? TruthValue::False
                                                         : TruthValue::Undefined;
    if (pv != expected) fail(transparent_p, label);

    ++symmetry.checked;
    if (fp.set(Slot::PPlus).test(i) != fp.contains(Slot::PPlus, info.negation)) {
      fail(symmetry, label);
    }

    if (info.formula.kind() == FormulaKind::Par || info.formula.kind() == FormulaKind::NotPar) {
      ++no_pp.checked;
      if (fp.set(Slot::PPlus).test(i)) fail(no_pp, label);
    }

    ++ranks.checked;
    if (fp.set(Slot::PPlus).test(i) != seq.ranks.contains(c)) fail(ranks, label);

    if (info.base) {
      for (std::size_t a = 0; a < seq.stages.size(); ++a) {
        ++base.checked;
        if (value(seq.stages[a], info.formula) != TruthValue::Undefined) {
          fail(base, label + " at stage " + std::to_string(a));
        }
      }
    }
  }
  return {monotone, fixed, transparent_t, transparent_p, symmetry, no_pp, base, ranks};
}

}  // namespace tp
