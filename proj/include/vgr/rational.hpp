#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vgr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in ambient groups of different dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a nonzero argument received zero.
class ZeroInput : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, group elements, polynomials, setups).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Accepts "3", "-7", "1/2", "-4/6" (reduced on return).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Exact n-th root of a rational, if one exists. For even n only nonnegative
// inputs have roots and the nonnegative root is returned.
std::optional<Rational> exact_root(const Rational& q, unsigned long n);

Integer lcm(const Integer& a, const Integer& b);

// Floor division for signed big integers.
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace vgr
