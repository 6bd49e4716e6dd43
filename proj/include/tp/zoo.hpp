// The standard case-study sentences.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tp/calculus.hpp"

namespace tp {

struct ZooSpec {
  Natural domain = 400;
  Natural mcgee_k = 5;
};

Definition make_liar();           // lam := ~T(quote(lam))
Definition make_negated_liar();   // nlam := T(quote(lam))
Definition make_truthteller();    // tau := T(quote(tau))
Definition make_curry();          // kappa := ~T(quote(kappa)) | 0 = 1
Definition make_mcgee();          // mu := ex x. ~T(iterT(x, quote(mu)))
Definition make_gupta();          // gamma := all x. (T(x) | ~T(x))
Definition make_revenge();        // rho := ~T(quote(rho)) | P(quote(rho))

/// All case studies plus grounded compounds, excluded-middle sentences for
/// the interaction axiom, and P literals about the liar.
Environment zoo_environment(const ZooSpec& spec = {});

struct ZooExpectation {
  std::string name;
  Classification expected;
};
/// Classifications the case studies are known to receive.
const std::vector<ZooExpectation>& zoo_expectations();

struct CorpusEntry {
  std::string file;  // e.g. "p_not_pp_lam.json"
  ProofTree proof;
  System system;
  bool extra_axiom;
  bool accepted;      // expected checker verdict
  bool cross_valid;   // expected value at the fixed point (when accepted)
};

/// The bundled derivations over the zoo environment.
std::vector<CorpusEntry> zoo_corpus(std::shared_ptr<const Environment> env);

}  // namespace tp
