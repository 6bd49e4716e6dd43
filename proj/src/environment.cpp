#include "tp/environment.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include "tp/parser.hpp"

namespace tp {

namespace {

void collect_quotes(const Term& t, std::set<std::string>& out);

void collect_quotes(const Formula& f, std::set<std::string>& out) {
  if (f.is_literal()) {
    for (const auto& t : f.terms()) collect_quotes(t, out);
  } else if (f.is_binary()) {
    collect_quotes(f.left(), out);
    collect_quotes(f.right(), out);
  } else {
    collect_quotes(f.body(), out);
  }
}

void collect_quotes(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Quote:
      out.insert(t.name());
      break;
    case TermKind::QuoteFormula:
      collect_quotes(t.quoted(), out);
      break;
    default:
      for (const auto& a : t.args()) collect_quotes(a, out);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Natural parse_natural(std::string_view s, std::size_t line) {
  Term t = parse_term(s);
  if (t.kind() != TermKind::Numeral) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": expected a numeral");
  }
  return t.value();
}

}  // namespace

std::set<std::string> quoted_names(const Formula& f) {
  std::set<std::string> out;
  collect_quotes(f, out);
  return out;
}

Environment::Environment(std::vector<Definition> defs, Natural domain,
                         std::optional<Natural> iter_bound, std::set<std::string> base)
    : defs_(std::move(defs)), domain_(domain), iter_bound_(iter_bound), base_(std::move(base)) {
  for (std::size_t i = 0; i < defs_.size(); ++i) {
    if (!codes_.emplace(defs_[i].name, static_cast<Code>(i)).second) {
      throw Error(ErrorKind::DuplicateSentence, "sentence '" + defs_[i].name + "' defined twice");
    }
  }
  validate();
}

void Environment::validate() const {
  if (!defs_.empty() && defs_.size() - 1 > domain_) {
    throw Error(ErrorKind::DomainTooSmall,
                std::to_string(defs_.size()) + " named sentences do not fit in domain {0.." +
                    std::to_string(domain_) + "}");
  }
  if (domain_ >= kDerivedBase) {
    throw Error(ErrorKind::DomainTooSmall, "domain bound too large");
  }
  for (const auto& d : defs_) {
    if (is_reserved_word(d.name)) {
      throw Error(ErrorKind::Parse, "reserved word '" + d.name + "' used as sentence name");
    }
    if (!d.definiens.is_closed()) {
      throw Error(ErrorKind::OpenTerm, "definiens of '" + d.name + "' is not a sentence: " +
                                           d.definiens.text());
    }
    for (const auto& q : quoted_names(d.definiens)) {
      if (!defines(q)) {
        throw Error(ErrorKind::UndefinedName,
                    "definiens of '" + d.name + "' quotes undefined sentence '" + q + "'");
      }
    }
  }
  for (const auto& b : base_) {
    if (!defines(b)) {
      throw Error(ErrorKind::UndefinedName, "#base names undefined sentence '" + b + "'");
    }
  }
}

Environment Environment::parse(std::string_view text) {
  struct Raw {
    std::string name;
    std::string body;
    std::size_t line;
  };
  std::vector<Raw> raws;
  Natural domain = kDefaultDomain;
  std::optional<Natural> iter;
  std::set<std::string> base;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::string_view s = trim(line);
    if (s.empty() || s.starts_with("//")) continue;
    if (s.starts_with("#")) {
      auto space = s.find_first_of(" \t");
      std::string_view directive = s.substr(0, space);
      std::string_view arg = space == std::string_view::npos ? "" : trim(s.substr(space));
      if (directive == "#domain") {
        domain = parse_natural(arg, line_no);
      } else if (directive == "#iter") {
        iter = parse_natural(arg, line_no);
      } else if (directive == "#base") {
        base.insert(std::string(arg));
      } else {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) +
                                          ": unknown directive " + std::string(directive));
      }
      continue;
    }
    auto def = s.find(":=");
    if (def == std::string_view::npos) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 'name := formula'");
    }
    raws.push_back({std::string(trim(s.substr(0, def))), std::string(trim(s.substr(def + 2))), line_no});
  }

  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < raws.size(); ++i) index.emplace(raws[i].name, i);

  std::vector<std::optional<Formula>> parsed(raws.size());
  std::vector<bool> in_progress(raws.size(), false);

  std::function<Formula(std::size_t)> resolve_at = [&](std::size_t i) -> Formula {
    if (parsed[i]) return *parsed[i];
    if (in_progress[i]) {
      throw Error(ErrorKind::CircularDefinition,
                  "sentence '" + raws[i].name +
                      "' is used inside its own definiens; refer to it with quote()");
    }
    in_progress[i] = true;
    NameResolver resolver = [&](const std::string& name) -> std::optional<Formula> {
      auto it = index.find(name);
      if (it == index.end()) return std::nullopt;
      return resolve_at(it->second);
    };
    try {
      parsed[i] = parse_formula(raws[i].body, resolver);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Parse) throw;
      throw Error(ErrorKind::Parse, "line " + std::to_string(raws[i].line) + ": " + e.what());
    }
    in_progress[i] = false;
    return *parsed[i];
  };

  std::vector<Definition> defs;
  for (std::size_t i = 0; i < raws.size(); ++i) defs.push_back({raws[i].name, resolve_at(i)});
  return Environment(std::move(defs), domain, iter, std::move(base));
}

Environment Environment::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open definition file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string Environment::to_dsl() const {
  std::string out = "#domain " + std::to_string(domain_) + "\n";
  if (iter_bound_) out += "#iter " + std::to_string(*iter_bound_) + "\n";
  for (const auto& b : base_) out += "#base " + b + "\n";
  for (const auto& d : defs_) out += d.name + " := " + d.definiens.text() + "\n";
  return out;
}

bool Environment::defines(std::string_view name) const { return codes_.contains(name); }

Code Environment::code(std::string_view name) const {
  auto it = codes_.find(name);
  if (it == codes_.end()) {
    throw Error(ErrorKind::UndefinedName, "undefined sentence '" + std::string(name) + "'");
  }
  return it->second;
}

const Formula& Environment::definiens(std::string_view name) const {
  return defs_[code(name)].definiens;
}

const std::string* Environment::name_of(Code code) const {
  if (code < defs_.size()) return &defs_[code].name;
  return nullptr;
}

bool Environment::is_declared_base(Code code) const {
  const std::string* name = name_of(code);
  return name && base_.contains(*name);
}

Environment Environment::with_domain(Natural domain) const {
  return Environment(defs_, domain, iter_bound_, base_);
}

}  // namespace tp
