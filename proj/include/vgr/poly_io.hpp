#pragma once

// Text form of polynomials and rational functions.
//
// Grammar (whitespace insignificant):
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := number | name ['^' ['-'] int] | '(' expr ')' ['^' ['-'] int] | '-' factor
// Printing emits terms such as `3/2 * x2^3 * x3` in descending lex order
// and a top-level fraction bar when the denominator is not 1. Printing then
// parsing reproduces the same stored representation.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgr/mpoly.hpp"

namespace vgr {

/// Names for variable indices 0, 1, 2, ...
class VariableSet {
 public:
  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Var v) const;
  std::optional<Var> index(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<std::string> names_;
};

std::string to_string(const Monomial& m, const VariableSet& vars);
std::string to_string(const Polynomial& p, const VariableSet& vars);
std::string to_string(const RationalFunction& f, const VariableSet& vars);

RationalFunction parse_rational_function(std::string_view text, const VariableSet& vars);
/// Throws ParseError when the text denotes a non-polynomial quotient.
Polynomial parse_polynomial(std::string_view text, const VariableSet& vars);

}  // namespace vgr
