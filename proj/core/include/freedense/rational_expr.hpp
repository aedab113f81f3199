#pragma once

// Rational expressions over free-group letters.
//
//   expr   := term ('|' term)*        ('+' is accepted for '|')
//   term   := factor+
//   factor := base '*'*
//   base   := letter | '1' | '0' | '(' expr ')'
//
// '1' is ε and '0' is the empty set. Whitespace is ignored.

#include "freedense/automaton.hpp"
#include "freedense/words.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace freedense {

struct RationalExpr {
  enum class Kind { EmptySet, Epsilon, Symbol, Concat, Union, Star };

  Kind kind = Kind::EmptySet;
  Letter letter{};                    // Symbol only
  std::vector<RationalExpr> children;  // Concat / Union: >= 2, Star: exactly 1

  static RationalExpr empty_set() { return {Kind::EmptySet, {}, {}}; }
  static RationalExpr epsilon() { return {Kind::Epsilon, {}, {}}; }
  static RationalExpr symbol(Letter l) { return {Kind::Symbol, l, {}}; }
  static RationalExpr concat(std::vector<RationalExpr> parts) {
    return {Kind::Concat, {}, std::move(parts)};
  }
  static RationalExpr alternation(std::vector<RationalExpr> parts) {
    return {Kind::Union, {}, std::move(parts)};
  }
  static RationalExpr star(RationalExpr child) { return {Kind::Star, {}, {std::move(child)}}; }

  bool operator==(const RationalExpr&) const = default;
};

class ExprSyntaxError : public std::invalid_argument {
 public:
  ExprSyntaxError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Throws ExprSyntaxError (with character offset) on malformed input or a
/// letter beyond the alphabet's rank.
[[nodiscard]] RationalExpr parse_expr(std::string_view text, const FreeAlphabet& alphabet);

/// Canonical text form; parse_expr(to_string(e)) == e.
[[nodiscard]] std::string to_string(const RationalExpr& e);

/// Thompson construction. The language is formal: no free reduction.
[[nodiscard]] Automaton compile_to_nfa(const RationalExpr& e, const FreeAlphabet& alphabet);

[[nodiscard]] int star_height(const RationalExpr& e);

}  // namespace freedense
