// Machine-readable run reports.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tp/calculus.hpp"

namespace tp {

/// FNV-1a, 64 bit, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view data);
/// Throws Error(Io).
std::string file_hash(const std::string& path);

struct RunConfig {
  Natural domain = 0;
  std::optional<Natural> iter_bound;
  std::map<std::string, std::string> file_hashes;  // path -> hash
};

struct ProofResult {
  std::string file;
  System system = System::TP;
  bool extra_axiom = false;
  Verdict verdict;
  std::string endsequent;
  std::optional<bool> cross_valid;  // only for accepted proofs
  bool uses_arith_oracle = false;
  std::string error;                // load or evaluation failure
  // Set for bundled proofs whose outcome is known in advance.
  std::optional<bool> expect_accepted;
  std::optional<bool> expect_cross_valid;
};

/// Checks a proof and, when accepted, evaluates its end sequent at the least
/// fixed point of a universe built from env plus the end sequent.
ProofResult run_proof(const std::string& label, const ProofTree& proof,
                      std::shared_ptr<const Environment> env, const CheckOptions& options,
                      Variant variant);

/// Top-level keys: variant, stages, classifications, ranks, invariants,
/// proofs, config. `stages` counts the jumps applied, including the last
/// one that confirmed the fixed point.
nlohmann::json build_report(const StageSequence& seq, const RunConfig& config,
                            const std::vector<ProofResult>& proofs = {});

/// True when every invariant passed and every proof was accepted and valid
/// (or, for proofs with an expectation, behaved as expected).
bool report_passes(const nlohmann::json& report);

std::string report_text(const nlohmann::json& report);

}  // namespace tp
