// tpcli: build fixed-point models, classify sentences, check proofs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tp/report.hpp"
#include "tp/zoo.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  std::string defs;
  std::optional<tp::Natural> domain;
  std::optional<tp::Natural> k;
  std::string variant = "tp";
  std::string out;
  std::string format = "text";
};

struct Loaded {
  std::shared_ptr<const tp::Environment> env;
  tp::RunConfig config;
};

Loaded load_env(const Options& o) {
  Loaded l;
  tp::Environment env;
  if (o.defs.empty()) {
    tp::ZooSpec spec;
    if (o.domain) spec.domain = *o.domain;
    if (o.k) spec.mcgee_k = *o.k;
    env = tp::zoo_environment(spec);
  } else {
    env = tp::Environment::load(o.defs);
    l.config.file_hashes[o.defs] = tp::file_hash(o.defs);
    if (o.domain) env = env.with_domain(*o.domain);
  }
  l.config.domain = env.domain();
  l.config.iter_bound = env.iter_bound();
  l.env = std::make_shared<const tp::Environment>(std::move(env));
  return l;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw tp::Error(tp::ErrorKind::Io, "cannot write " + o.out);
  f << text;
}

std::string render(const Options& o, const json& report) {
  return o.format == "json" ? report.dump(2) + "\n" : tp::report_text(report);
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw tp::Error(tp::ErrorKind::Io, "cannot write " + path.string());
  f << text;
}

json model_report(const Loaded& l, tp::Variant v, const std::vector<tp::ProofResult>& proofs = {}) {
  auto u = tp::SentenceUniverse::close(l.env);
  return tp::build_report(tp::lfp(u, v), l.config, proofs);
}

int cmd_model(const Options& o) {
  Loaded l = load_env(o);
  json r = model_report(l, tp::parse_variant(o.variant));
  emit(o, render(o, r));
  return tp::report_passes(r) ? 0 : 1;
}

int cmd_classify(const Options& o, const std::vector<std::string>& names) {
  Loaded l = load_env(o);
  auto seq = tp::lfp(tp::SentenceUniverse::close(l.env), tp::parse_variant(o.variant));
  std::vector<std::string> wanted = names;
  if (wanted.empty()) {
    for (const auto& d : l.env->definitions()) wanted.push_back(d.name);
  }
  json j = json::object();
  std::string text;
  for (const auto& name : wanted) {
    std::string c = tp::classify(l.env->code(name), seq).text();
    j[name] = c;
    text += name + " " + c + "\n";
  }
  emit(o, o.format == "json" ? j.dump(2) + "\n" : text);
  return 0;
}

int cmd_check(const Options& o, const std::vector<std::string>& files, const std::string& system,
              bool extra) {
  Loaded l = load_env(o);
  tp::CheckOptions opts{tp::parse_system(system), extra};
  tp::Variant v = tp::parse_variant(o.variant);
  if (opts.system == tp::System::TPPlus) v = tp::Variant::TPPlus;
  auto resolve = tp::env_resolver(l.env);
  std::vector<tp::ProofResult> results;
  for (const auto& f : files) {
    l.config.file_hashes[f] = tp::file_hash(f);
    try {
      results.push_back(tp::run_proof(f, tp::load_proof(f, resolve), l.env, opts, v));
    } catch (const tp::Error& e) {
      tp::ProofResult r;
      r.file = f;
      r.system = opts.system;
      r.extra_axiom = extra;
      r.verdict.accepted = false;
      r.error = std::string(tp::to_string(e.kind())) + ": " + e.what();
      results.push_back(r);
    }
  }
  json r = model_report(l, v, results);
  emit(o, render(o, r));
  return tp::report_passes(r) ? 0 : 1;
}

int cmd_zoo(const Options& o, const std::string& write_defs, const std::string& write_proofs) {
  if (!o.defs.empty()) throw tp::Error(tp::ErrorKind::Parse, "zoo takes no --defs");
  Loaded l = load_env(o);
  tp::Variant v = tp::parse_variant(o.variant);

  if (!write_defs.empty()) write_file(write_defs, l.env->to_dsl());
  auto corpus = tp::zoo_corpus(l.env);
  if (!write_proofs.empty()) {
    fs::create_directories(write_proofs);
    for (const auto& e : corpus) write_file(fs::path(write_proofs) / e.file, tp::print_proof(e.proof));
  }

  std::vector<tp::ProofResult> results;
  for (const auto& e : corpus) {
    tp::ProofResult r = tp::run_proof(e.file, e.proof, l.env, {e.system, e.extra_axiom}, v);
    r.expect_accepted = e.accepted;
    if (e.accepted) r.expect_cross_valid = e.cross_valid;
    results.push_back(std::move(r));
  }

  auto u = tp::SentenceUniverse::close(l.env);
  auto seq = tp::lfp(u, v);
  json r = tp::build_report(seq, l.config, results);

  json check{{"name", "case-study classifications"}, {"passed", true}, {"checked", 0}};
  std::string detail;
  std::size_t n = 0;
  for (const auto& e : tp::zoo_expectations()) {
    ++n;
    auto got = tp::classify(l.env->code(e.name), seq);
    if (!(got == e.expected) && detail.empty()) {
      detail = e.name + " is " + got.text() + ", expected " + e.expected.text();
    }
  }
  ++n;
  auto lem = tp::value(seq.fixed_point(), l.env->code("lem_gamma"));
  if (lem != tp::TruthValue::Undefined && detail.empty()) {
    detail = std::string("lem_gamma is ") + tp::to_string(lem) + ", expected undefined";
  }
  check["checked"] = n;
  if (!detail.empty()) {
    check["passed"] = false;
    check["detail"] = detail;
  }
  r["invariants"].push_back(check);

  emit(o, render(o, r));
  return tp::report_passes(r) ? 0 : 1;
}

int cmd_compare(const Options& o) {
  Loaded l = load_env(o);
  auto u = tp::SentenceUniverse::close(l.env);
  auto a = tp::lfp(u, tp::Variant::TP);
  auto b = tp::lfp(u, tp::Variant::TPPlus);
  json ra = tp::build_report(a, l.config);
  json rb = tp::build_report(b, l.config);

  auto va = tp::universe_values(a.fixed_point());
  auto vb = tp::universe_values(b.fixed_point());
  json diffs = json::array();
  std::string text;
  for (std::size_t i = 0; i < u->size(); ++i) {
    tp::Code c = u->code_at(i);
    auto ca = tp::classify(c, a), cb = tp::classify(c, b);
    if (va[i] == vb[i] && ca == cb) continue;
    diffs.push_back({{"sentence", u->label(c)},
                     {"tp", {{"value", tp::to_string(va[i])}, {"class", ca.text()}}},
                     {"tp-plus", {{"value", tp::to_string(vb[i])}, {"class", cb.text()}}}});
    text += "  " + u->label(c) + ": " + tp::to_string(va[i]) + " / " + ca.text() + "  vs  " +
            tp::to_string(vb[i]) + " / " + cb.text() + "\n";
  }

  json out{{"tp", ra}, {"tp-plus", rb}, {"differences", diffs}};
  if (o.format == "json") {
    emit(o, out.dump(2) + "\n");
  } else {
    emit(o, "== tp\n" + tp::report_text(ra) + "\n== tp-plus\n" + tp::report_text(rb) +
                "\n== differences (" + std::to_string(diffs.size()) + ")\n" + text);
  }
  return tp::report_passes(ra) && tp::report_passes(rb) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truth and paradoxicality: fixed-point models and proof checking"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool defs = true) {
    if (defs) sub->add_option("--defs", o.defs, "Definition file (default: the built-in zoo)");
    sub->add_option("--domain", o.domain, "Quantifier domain bound N_dom");
    sub->add_option("--k", o.k, "iterT bound for the built-in zoo");
    sub->add_option("--variant", o.variant, "tp or tp-plus")->check(CLI::IsMember({"tp", "tp-plus"}));
    sub->add_option("--out", o.out, "Write output here instead of stdout");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* model = app.add_subcommand("model", "Compute the least fixed point and report on it");
  common(model);

  std::vector<std::string> names;
  auto* classify = app.add_subcommand("classify", "Classify named sentences");
  common(classify);
  classify->add_option("names", names, "Sentence names (default: all)");

  std::vector<std::string> files;
  std::string system = "TP";
  bool extra = false;
  auto* check = app.add_subcommand("check", "Check proof files and evaluate their end sequents");
  common(check);
  check->add_option("proofs", files, "Proof files (JSON)")->required();
  check->add_option("--system", system, "SK, PA-SK, TP or TP-plus")
      ->check(CLI::IsMember({"SK", "PA-SK", "TP", "TP-plus"}));
  check->add_flag("--allow-extra-axiom", extra, "Admit the contrapositive interaction axiom");

  std::string write_defs, write_proofs;
  auto* zoo = app.add_subcommand("zoo", "Run the case studies and the bundled proofs");
  common(zoo, false);
  zoo->add_option("--write-defs", write_defs, "Also write the zoo definition file");
  zoo->add_option("--write-proofs", write_proofs, "Also write the bundled proofs to this directory");

  auto* compare = app.add_subcommand("compare", "Compare the tp and tp-plus fixed points");
  common(compare);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*model) return cmd_model(o);
    if (*classify) return cmd_classify(o, names);
    if (*check) return cmd_check(o, files, system, extra);
    if (*zoo) return cmd_zoo(o, write_defs, write_proofs);
    if (*compare) return cmd_compare(o);
  } catch (const tp::Error& e) {
    std::cerr << "error (" << tp::to_string(e.kind()) << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
