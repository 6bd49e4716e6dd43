// Text syntax for terms and formulas.
//
//   formula  := ('all' | 'ex') var '.' formula | disj
//   disj     := conj ('|' conj)*
//   conj     := unary ('&' unary)*
//   unary    := '~' unary | '(' formula ')' | 'T(' term ')' | 'P(' term ')'
//             | sentence-name | term ('=' | '!=') term | quantified formula
//   term     := factor ('+' factor)*
//   factor   := primary ('*' primary)*
//   primary  := numeral | var | '(' term ')' | '<' formula '>'
//             | S(t) | num(t) | quote(name) | dot_*(..) | iterT(t, t)
//
// `~` is eliminated at parse time by De Morgan negation. A bare sentence
// name is replaced by its definiens through the resolver. Printing a parsed
// formula yields text that parses back to the same formula.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "tp/syntax.hpp"

namespace tp {

/// Maps a sentence name used in formula position to its definiens.
using NameResolver = std::function<std::optional<Formula>(const std::string&)>;

Formula parse_formula(std::string_view text, const NameResolver& resolve = {});
Term parse_term(std::string_view text);

bool is_reserved_word(std::string_view word);

}  // namespace tp
