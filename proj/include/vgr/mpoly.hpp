#pragma once

// Sparse multivariate polynomials and rational functions over Q.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vgr/rational.hpp"

namespace vgr {

using Var = std::uint32_t;
using Exponent = std::uint32_t;

/// Power product x_{i1}^{e1} ... x_{ik}^{ek}; zero exponents are never stored.
class Monomial {
 public:
  using Entry = std::pair<Var, Exponent>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries);
  static Monomial variable(Var v, Exponent e = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  Exponent exponent(Var v) const;
  std::uint64_t degree() const;
  bool is_one() const { return entries_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial pow(Exponent n) const;
  /// Exact n-th root when every exponent is divisible by n.
  std::optional<Monomial> root(Exponent n) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Entry> entries_;  // sorted by variable
};

/// Lexicographic order with x0 > x1 > x2 > ...; returns -1, 0 or 1.
int lex_compare(const Monomial& a, const Monomial& b);

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, LexGreater>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  static Polynomial term(const Rational& c, const Monomial& m);
  static Polynomial variable(Var v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::optional<Rational> constant_value() const;
  std::size_t term_count() const { return terms_.size(); }
  /// Terms in descending lex order.
  const TermMap& terms() const { return terms_; }
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  /// Throws ZeroInput on the zero polynomial.
  std::uint64_t total_degree() const;
  /// Largest monomial dividing every term (1 for the zero polynomial).
  Monomial content() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Rational& c, const Monomial& m) const;
  Polynomial pow(unsigned n) const;
  /// Divides every term by m; requires m to divide the content.
  Polynomial divide_monomial(const Monomial& m) const;

  /// Keeps the terms satisfying pred.
  Polynomial filter(const std::function<bool(const Monomial&)>& pred) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

/// n-th root by leading-term recursion in lex order. Sound: a returned g
/// always satisfies g^n == f. For even n the root with positive leading
/// coefficient is returned.
std::optional<Polynomial> nth_root(const Polynomial& f, unsigned n);

/// Element num/den of Q(x_1, ..., x_m).
///
/// Stored with the common monomial content of numerator and denominator
/// cancelled and a denominator whose leading coefficient is 1. No other
/// common factors are removed, so equality is decided by cross
/// multiplication.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num);  // NOLINT
  RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  /// Throws ZeroInput if den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  std::optional<Rational> constant_value() const;

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction operator*(const RationalFunction& o) const;
  /// Throws ZeroInput on division by zero.
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  RationalFunction pow(long n) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

/// max(deg num, deg den) of the content-cancelled representation. Throws
/// ZeroInput on zero.
std::uint64_t total_degree(const RationalFunction& f);
std::uint64_t total_degree(const Polynomial& f);

/// True when numerator and denominator both have several terms, so a
/// non-monomial common factor might survive and inflate the degree.
bool may_share_nonmonomial_factor(const RationalFunction& f);

/// Applies nth_root to numerator and denominator separately. Sound but not
/// complete.
std::optional<RationalFunction> nth_root(const RationalFunction& f, unsigned n);

}  // namespace vgr
