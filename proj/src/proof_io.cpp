#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tp/calculus.hpp"

namespace tp {

using nlohmann::json;

NameResolver env_resolver(std::shared_ptr<const Environment> env) {
  return [env](const std::string& name) -> std::optional<Formula> {
    if (!env->defines(name)) return std::nullopt;
    return env->definiens(name);
  };
}

namespace {

std::string get_string(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw Error(ErrorKind::Parse, where + ": missing string field '" + key + "'");
  }
  return it->get<std::string>();
}

std::set<Formula> formula_set(const json& j, const NameResolver& resolve, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, where + ": expected an array of formulas");
  std::set<Formula> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw Error(ErrorKind::Parse, where + ": formulas are strings");
    out.insert(parse_formula(item.get<std::string>(), resolve));
  }
  return out;
}

ProofTree from_json(const json& j, const NameResolver& resolve, const std::string& path) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, path + ": proof node must be an object");
  ProofTree p;
  p.rule = parse_rule(get_string(j, "rule", path));

  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_object()) throw Error(ErrorKind::Parse, path + ": params must be an object");
    for (const auto& [key, val] : it->items()) {
      if (!val.is_string()) throw Error(ErrorKind::Parse, path + ": param '" + key + "' must be a string");
      std::string s = val.get<std::string>();
      if (key == "formula") p.params.formula = parse_formula(s, resolve);
      else if (key == "eigenvariable") p.params.eigenvariable = s;
      else if (key == "variable") p.params.variable = s;
      else if (key == "term") p.params.term = parse_term(s);
      else if (key == "term2") p.params.term2 = parse_term(s);
      else if (key == "schema") p.params.schema = s;
      else if (key == "dir") p.params.dir = s;
      else throw Error(ErrorKind::Parse, path + ": unknown param '" + key + "'");
    }
  }

  auto conc = j.find("conclusion");
  if (conc == j.end() || !conc->is_object()) {
    throw Error(ErrorKind::Parse, path + ": missing conclusion object");
  }
  p.conclusion.ant = formula_set(conc->value("ant", json::array()), resolve, path + " ant");
  p.conclusion.suc = formula_set(conc->value("suc", json::array()), resolve, path + " suc");

  if (auto it = j.find("premises"); it != j.end()) {
    if (!it->is_array()) throw Error(ErrorKind::Parse, path + ": premises must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      p.premises.push_back(from_json((*it)[i], resolve, path + "." + std::to_string(i)));
    }
  }
  return p;
}

json to_json(const ProofTree& p) {
  json params = json::object();
  const RuleParams& r = p.params;
  if (r.formula) params["formula"] = r.formula->text();
  if (r.eigenvariable) params["eigenvariable"] = *r.eigenvariable;
  if (r.variable) params["variable"] = *r.variable;
  if (r.term) params["term"] = r.term->text();
  if (r.term2) params["term2"] = r.term2->text();
  if (r.schema) params["schema"] = *r.schema;
  if (r.dir) params["dir"] = *r.dir;

  json ant = json::array(), suc = json::array();
  for (const auto& f : p.conclusion.ant) ant.push_back(f.text());
  for (const auto& f : p.conclusion.suc) suc.push_back(f.text());

  json premises = json::array();
  for (const auto& pr : p.premises) premises.push_back(to_json(pr));

  return json{{"rule", to_string(p.rule)},
              {"params", params},
              {"conclusion", {{"ant", ant}, {"suc", suc}}},
              {"premises", premises}};
}

}  // namespace

ProofTree parse_proof(std::string_view text, const NameResolver& resolve) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("proof file is not valid JSON: ") + e.what());
  }
  return from_json(j, resolve, "root");
}

ProofTree load_proof(const std::string& path, const NameResolver& resolve) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open proof file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_proof(buf.str(), resolve);
}

std::string print_proof(const ProofTree& proof) { return to_json(proof).dump(2) + "\n"; }

}  // namespace tp
