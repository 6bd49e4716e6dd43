#pragma once

#include <set>
#include <string>

#include "tp/syntax.hpp"

namespace tp {

/// Gamma => Delta over finite sets of formulas.
struct Sequent {
  std::set<Formula> ant;
  std::set<Formula> suc;

  std::string text() const;
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

}  // namespace tp
