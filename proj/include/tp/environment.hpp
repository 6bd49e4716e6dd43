// Named self-referential sentence definitions.
//
// A definition file has one item per line:
//
//   #domain 400          quantifiers range over {0, ..., 400}
//   #iter 5              iterT(n, c) with n > 5 denotes no sentence
//   #base name           declare `name` base paradoxical
//   lam := ~T(quote(lam))
//   // comment
//
// Definitions may mention any defined sentence through quote(name), which
// is how self-reference is expressed. A bare name in formula position is
// replaced by that sentence's definiens (and must not be circular).
// Named sentences receive the codes 0, 1, 2, ... in file order.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tp/syntax.hpp"

namespace tp {

struct Definition {
  std::string name;
  Formula definiens;
};

class Environment {
 public:
  static constexpr Natural kDefaultDomain = 16;

  Environment() = default;
  Environment(std::vector<Definition> defs, Natural domain,
              std::optional<Natural> iter_bound = std::nullopt,
              std::set<std::string> base = {});

  static Environment parse(std::string_view text);
  static Environment load(const std::string& path);

  /// Emits the definition file format; parse(to_dsl()) reproduces *this.
  std::string to_dsl() const;

  Natural domain() const { return domain_; }
  std::optional<Natural> iter_bound() const { return iter_bound_; }
  const std::vector<Definition>& definitions() const { return defs_; }
  const std::set<std::string>& declared_base() const { return base_; }

  bool defines(std::string_view name) const;
  /// Throws Error(UndefinedName).
  Code code(std::string_view name) const;
  const Formula& definiens(std::string_view name) const;
  /// Name of the named sentence with this code, if any.
  const std::string* name_of(Code code) const;
  std::size_t named_count() const { return defs_.size(); }
  bool is_declared_base(Code code) const;

  /// A copy with a different quantifier domain (re-validated).
  Environment with_domain(Natural domain) const;

 private:
  void validate() const;

  std::vector<Definition> defs_;
  std::map<std::string, Code, std::less<>> codes_;
  Natural domain_ = kDefaultDomain;
  std::optional<Natural> iter_bound_;
  std::set<std::string> base_;
};

/// Names of sentences quoted anywhere inside `f` (including inside <...>).
std::set<std::string> quoted_names(const Formula& f);

}  // namespace tp
