#include "tp/parser.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace tp {

namespace {

const std::map<std::string, TermKind, std::less<>>& function_table() {
  static const std::map<std::string, TermKind, std::less<>> table = {
      {"S", TermKind::Succ},          {"num", TermKind::Num},
      {"dot_eq", TermKind::DotEq},    {"dot_neq", TermKind::DotNeq},
      {"dot_and", TermKind::DotAnd},  {"dot_or", TermKind::DotOr},
      {"dot_all", TermKind::DotAll},  {"dot_ex", TermKind::DotEx},
      {"dot_T", TermKind::DotT},      {"dot_P", TermKind::DotP},
      {"dot_negT", TermKind::DotNegT}, {"dot_negP", TermKind::DotNegP},
      {"dot_neg", TermKind::DotNeg},  {"iterT", TermKind::IterT},
  };
  return table;
}

class Parser {
 public:
  Parser(std::string_view text, const NameResolver& resolve)
      : text_(text), resolve_(resolve) {}

  Formula formula_to_end() {
    Formula f = formula();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

  Term term_to_end() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) +
                                      " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(std::string_view s) {
    skip_ws();
    return text_.substr(pos_, s.size()) == s;
  }

  bool accept(std::string_view s) {
    if (!peek(s)) return false;
    pos_ += s.size();
    return true;
  }

  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::optional<std::string> peek_ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) return std::nullopt;
    std::size_t end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    return std::string(text_.substr(pos_, end - pos_));
  }

  std::string ident() {
    auto id = peek_ident();
    if (!id) fail("expected identifier");
    pos_ += id->size();
    return *id;
  }

  // Keyword followed by a non-identifier character.
  bool accept_keyword(std::string_view kw) {
    auto id = peek_ident();
    if (!id || *id != kw) return false;
    pos_ += kw.size();
    return true;
  }

  Formula formula() {
    skip_ws();
    if (auto q = quantifier()) return *q;
    Formula f = conjunction();
    while (accept("|")) f = Formula::disj(f, conjunction());
    return f;
  }

  std::optional<Formula> quantifier() {
    std::size_t save = pos_;
    FormulaKind kind;
    if (accept_keyword("all")) {
      kind = FormulaKind::All;
    } else if (accept_keyword("ex")) {
      kind = FormulaKind::Ex;
    } else {
      return std::nullopt;
    }
    auto var = peek_ident();
    if (!var || is_reserved_word(*var)) {
      pos_ = save;
      return std::nullopt;
    }
    pos_ += var->size();
    expect(".");
    return Formula::quantifier(kind, *var, formula());
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept("&")) f = Formula::conj(f, unary());
    return f;
  }

  Formula unary() {
    skip_ws();
    if (accept("~")) return negate(unary());
    if (auto q = quantifier()) return *q;
    if (peek("(")) {
      std::size_t save = pos_;
      try {
        expect("(");
        Formula f = formula();
        expect(")");
        // A parenthesised term followed by a comparison: retry as equation.
        if (!peek("=") && !peek("!=") && !peek("+") && !peek("*")) return f;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Parse) throw;
      }
      pos_ = save;
      return equation();
    }
    if (auto id = peek_ident()) {
      if (*id == "T" || *id == "P") {
        std::size_t save = pos_;
        pos_ += 1;
        if (accept("(")) {
          Term t = term();
          expect(")");
          return *id == "T" ? Formula::tr(t) : Formula::par(t);
        }
        pos_ = save;
      }
      if (!function_table().contains(*id) && *id != "quote") {
        std::size_t save = pos_;
        pos_ += id->size();
        bool comparison = peek("=") || peek("!=") || peek("+") || peek("*");
        if (!comparison && resolve_) {
          if (auto def = resolve_(*id)) return *def;
        }
        pos_ = save;
        if (!comparison) fail("unknown sentence name '" + *id + "'");
      }
    }
    return equation();
  }

  Formula equation() {
    Term lhs = term();
    if (accept("!=")) return Formula::neq(lhs, term());
    if (accept("=")) return Formula::eq(lhs, term());
    fail("expected '=' or '!='");
  }

  Term term() {
    Term t = factor();
    while (accept("+")) t = Term::plus(t, factor());
    return t;
  }

  Term factor() {
    Term t = primary();
    while (accept("*")) t = Term::times(t, primary());
    return t;
  }

  Term primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      Natural n = 0;
      auto [p, ec] = std::from_chars(text_.data() + pos_, text_.data() + end, n);
      if (ec != std::errc()) fail("numeral out of range");
      (void)p;
      pos_ = end;
      return Term::numeral(n);
    }
    if (accept("(")) {
      Term t = term();
      expect(")");
      return t;
    }
    if (accept("<")) {
      Formula f = formula();
      expect(">");
      return Term::quote_formula(f);
    }
    std::string id = ident();
    if (id == "quote") {
      expect("(");
      std::string name = ident();
      expect(")");
      return Term::quote(name);
    }
    auto fn = function_table().find(id);
    if (fn != function_table().end()) {
      expect("(");
      std::vector<Term> args{term()};
      while (accept(",")) args.push_back(term());
      expect(")");
      if (args.size() != function_arity(fn->second)) fail("wrong arity for " + id);
      return Term::apply(fn->second, std::move(args));
    }
    if (is_reserved_word(id)) fail("reserved word '" + id + "' used as variable");
    return Term::variable(id);
  }

  std::string_view text_;
  const NameResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_reserved_word(std::string_view word) {
  return word == "T" || word == "P" || word == "all" || word == "ex" ||
         word == "quote" || function_table().contains(word);
}

Formula parse_formula(std::string_view text, const NameResolver& resolve) {
  return Parser(text, resolve).formula_to_end();
}

Term parse_term(std::string_view text) {
  static const NameResolver none;
  return Parser(text, none).term_to_end();
}

}  // namespace tp
