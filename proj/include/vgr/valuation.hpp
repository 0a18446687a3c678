#pragma once

// Monomial valuations on Q(x_1, ..., x_m) and their residue fields.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vgr/mpoly.hpp"
#include "vgr/ordgroup.hpp"
#include "vgr/poly_io.hpp"

namespace vgr {

/// v(x_i) = weight_i, v(c) = 0 for rational c != 0, extended to polynomials
/// by the minimum over terms and to quotients by v(P/Q) = v(P) - v(Q).
///
/// Weights may be rationally dependent; nothing forces the value group to
/// be free.
class MonomialValuation {
 public:
  MonomialValuation(VariableSet variables, std::vector<GroupElement> weights);

  std::size_t dimension() const { return dimension_; }
  const VariableSet& variables() const { return variables_; }
  const std::vector<GroupElement>& weights() const { return weights_; }
  const GroupElement& weight(Var v) const;
  GroupElement zero() const { return GroupElement::zero(dimension_); }

  GroupElement value(const Monomial& m) const;
  /// Both throw ZeroInput on zero.
  GroupElement value(const Polynomial& p) const;
  GroupElement value(const RationalFunction& f) const;

  /// Sum of the terms of minimal value. Throws ZeroInput on zero.
  Polynomial initial_part(const Polynomial& p) const;
  /// ip(num) / ip(den); in_v-equal to f.
  RationalFunction initial_fraction(const RationalFunction& f) const;
  bool is_initial(const Polynomial& p) const { return initial_part(p) == p; }

  /// in_v(x) == in_v(y), i.e. v(x) == v(y) and v(x - y) > v(x).
  bool in_eq(const RationalFunction& x, const RationalFunction& y) const;

  std::string format(const RationalFunction& f) const { return to_string(f, variables_); }
  RationalFunction parse(std::string_view text) const { return parse_rational_function(text, variables_); }

 private:
  VariableSet variables_;
  std::vector<GroupElement> weights_;
  std::size_t dimension_;
};

using ValuationPtr = std::shared_ptr<const MonomialValuation>;

/// Class of a value-zero element in the residue field Kv.
///
/// Represented by a quotient of initial polynomials of equal value, or by
/// the distinguished zero class. Two classes are equal iff
/// ip(num1 * den2) == ip(num2 * den1).
class ResidueElement {
 public:
  static ResidueElement zero(ValuationPtr v);
  static ResidueElement one(ValuationPtr v) { return constant(std::move(v), 1); }
  static ResidueElement constant(ValuationPtr v, const Rational& c);

  const ValuationPtr& valuation() const { return valuation_; }
  /// Initial-fraction representative; zero for the zero class.
  const RationalFunction& representative() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const;
  /// The rational number this class equals, if it is one.
  std::optional<Rational> rational_value() const;

  ResidueElement operator*(const ResidueElement& o) const;
  ResidueElement operator+(const ResidueElement& o) const;
  ResidueElement operator-(const ResidueElement& o) const;
  ResidueElement operator-() const;
  /// Throws ZeroInput on the zero class.
  ResidueElement inverse() const;
  ResidueElement operator/(const ResidueElement& o) const { return *this * o.inverse(); }

  friend bool operator==(const ResidueElement& a, const ResidueElement& b);

  std::string to_string() const;

 private:
  friend ResidueElement residue(ValuationPtr v, const RationalFunction& f);
  ResidueElement(ValuationPtr v, RationalFunction rep) : valuation_(std::move(v)), rep_(std::move(rep)) {}
  void require_same(const ResidueElement& o) const;

  ValuationPtr valuation_;
  RationalFunction rep_;
};

/// Residue class of f; requires value(f) == 0 (throws Error otherwise).
ResidueElement residue(ValuationPtr v, const RationalFunction& f);

/// A witness a in K with residue(a^n) equal to r, found by root extraction
/// on the initial representative. Sound, not complete.
std::optional<RationalFunction> residue_nth_root(const ResidueElement& r, unsigned n);

}  // namespace vgr
