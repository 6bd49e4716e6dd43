#include "tp/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tp {

using nlohmann::json;

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return fnv1a64_hex(buf.str());
}

namespace {

bool uses_rule(const ProofTree& p, Rule r) {
  if (p.rule == r) return true;
  for (const auto& pr : p.premises) {
    if (uses_rule(pr, r)) return true;
  }
  return false;
}

json invariant_json(const InvariantResult& r) {
  json j{{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}};
  if (!r.passed) j["detail"] = r.detail;
  return j;
}

}  // namespace

ProofResult run_proof(const std::string& label, const ProofTree& proof,
                      std::shared_ptr<const Environment> env, const CheckOptions& options,
                      Variant variant) {
  ProofResult r;
  r.file = label;
  r.system = options.system;
  r.extra_axiom = options.allow_extra_axiom;
  r.endsequent = proof.conclusion.text();
  r.uses_arith_oracle = uses_rule(proof, Rule::Arith);
  r.verdict = check_proof(proof, env, options);
  if (!r.verdict.accepted) return r;
  try {
    auto roots = sequent_roots(proof.conclusion);
    auto universe = SentenceUniverse::close(env, roots);
    r.cross_valid = cross_validate(proof.conclusion, lfp(universe, variant));
  } catch (const Error& e) {
    r.error = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return r;
}

json build_report(const StageSequence& seq, const RunConfig& config,
                  const std::vector<ProofResult>& proofs) {
  const SentenceUniverse& u = seq.universe();
  const Environment& env = u.env();

  json classifications = json::object();
  json ranks = json::object();
  for (const auto& d : env.definitions()) {
    Code c = env.code(d.name);
    classifications[d.name] = classify(c, seq).text();
    if (auto r = seq.rank(c)) ranks[d.name] = *r;
  }

  json invariants = json::array();
  for (const auto& r : check_stage_invariants(seq)) invariants.push_back(invariant_json(r));
  for (const auto& r : check_fixed_point_invariants(seq)) invariants.push_back(invariant_json(r));
  AuditResult audit = audit_axioms(seq);
  InvariantResult axioms{seq.variant == Variant::TP ? "axiom instances hold at the fixed point"
                                                    : "axiom instances (with notPP) hold at the fixed point"};
  axioms.checked = audit.instances;
  axioms.passed = audit.failures.empty();
  if (!axioms.passed) {
    const auto& f = audit.failures.front();
    axioms.detail = f.schema + (f.dir.empty() ? "" : " " + f.dir) + " at " + f.principal + ": " +
                    f.sequent.text();
  }
  invariants.push_back(invariant_json(axioms));

  json proof_list = json::array();
  for (const auto& p : proofs) {
    json j{{"file", p.file},
           {"system", to_string(p.system)},
           {"extra_axiom", p.extra_axiom},
           {"accepted", p.verdict.accepted},
           {"nodes", p.verdict.nodes},
           {"endsequent", p.endsequent},
           {"arith_oracle", p.uses_arith_oracle}};
    json diags = json::array();
    for (const auto& d : p.verdict.diagnostics) diags.push_back({{"path", d.path}, {"message", d.message}});
    j["diagnostics"] = diags;
    j["cross_valid"] = p.cross_valid ? json(*p.cross_valid) : json(nullptr);
    if (!p.error.empty()) j["error"] = p.error;
    if (p.expect_accepted) {
      j["expected"] = {{"accepted", *p.expect_accepted},
                       {"cross_valid", p.expect_cross_valid ? json(*p.expect_cross_valid) : json(nullptr)}};
    }
    proof_list.push_back(j);
  }

  json cfg{{"N_dom", config.domain},
           {"k", config.iter_bound ? json(*config.iter_bound) : json(nullptr)},
           {"universe_size", u.size()},
           {"files", config.file_hashes},
           {"quantifier_domain", "0.." + std::to_string(config.domain)}};
  if (config.iter_bound) {
    cfg["iterT_truncation"] = "iterT(n, c) denotes no sentence for n > " +
                              std::to_string(*config.iter_bound);
  }

  return json{{"variant", to_string(seq.variant)},
              {"stages", seq.stages.size() - 1},
              {"classifications", classifications},
              {"ranks", ranks},
              {"invariants", invariants},
              {"proofs", proof_list},
              {"config", cfg}};
}

bool report_passes(const json& report) {
  for (const auto& inv : report.at("invariants")) {
    if (!inv.at("passed").get<bool>()) return false;
  }
  for (const auto& p : report.at("proofs")) {
    if (p.contains("error")) return false;
    if (p.contains("expected")) {
      const auto& e = p.at("expected");
      if (p.at("accepted") != e.at("accepted")) return false;
      if (p.at("accepted").get<bool>() && p.at("cross_valid") != e.at("cross_valid")) return false;
      continue;
    }
    if (!p.at("accepted").get<bool>()) return false;
    if (!p.at("cross_valid").is_boolean() || !p.at("cross_valid").get<bool>()) return false;
  }
  return true;
}

std::string report_text(const json& report) {
  std::ostringstream out;
  const auto jumps = report.at("stages").get<std::size_t>();
  out << "variant " << report.at("variant").get<std::string>() << ", fixed point at stage "
      << jumps - 1 << " (" << jumps << " jumps), |U| = "
      << report.at("config").at("universe_size").get<std::size_t>() << "\n\n";
  for (const auto& [name, cls] : report.at("classifications").items()) {
    char line[128];
    std::snprintf(line, sizeof line, "  %-16s %s\n", name.c_str(), cls.get<std::string>().c_str());
    out << line;
  }
  out << "\n";
  for (const auto& inv : report.at("invariants")) {
    out << (inv.at("passed").get<bool>() ? "  ok    " : "  FAIL  ") << inv.at("name").get<std::string>()
        << " (" << inv.at("checked").get<std::size_t>() << ")";
    if (inv.contains("detail")) out << ": " << inv.at("detail").get<std::string>();
    out << "\n";
  }
  if (!report.at("proofs").empty()) out << "\n";
  for (const auto& p : report.at("proofs")) {
    out << "  " << p.at("file").get<std::string>() << " [" << p.at("system").get<std::string>()
        << "]: " << (p.at("accepted").get<bool>() ? "accepted" : "rejected");
    if (p.at("cross_valid").is_boolean()) {
      out << ", " << (p.at("cross_valid").get<bool>() ? "valid" : "INVALID") << " at the fixed point";
    }
    if (p.contains("expected")) {
      const auto& e = p.at("expected");
      bool as_expected = p.at("accepted") == e.at("accepted") &&
                         (!p.at("accepted").get<bool>() || p.at("cross_valid") == e.at("cross_valid"));
      out << (as_expected ? " (as expected)" : " (UNEXPECTED)");
    }
    out << "\n";
    for (const auto& d : p.at("diagnostics")) {
      out << "      " << d.at("path").get<std::string>() << ": " << d.at("message").get<std::string>()
          << "\n";
    }
    if (p.contains("error")) out << "      " << p.at("error").get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace tp
