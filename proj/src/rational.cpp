#include "vgr/rational.hpp"

#include <cctype>

namespace vgr {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = trim(text);
  auto slash = s.find('/');
  std::string num = trim(s.substr(0, slash));
  std::string den = slash == std::string::npos ? "1" : trim(s.substr(slash + 1));
  if (num.front() == '+') num.erase(0, 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-')
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  Integer n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

std::optional<Integer> exact_integer_root(const Integer& z, unsigned long n) {
  Integer r;
  if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), n) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> exact_root(const Rational& q, unsigned long n) {
  if (n == 0) throw Error("exact_root: n must be positive");
  if (n == 1) return q;
  if (q < 0 && n % 2 == 0) return std::nullopt;
  auto num = exact_integer_root(q.get_num(), n);
  if (!num) return std::nullopt;
  auto den = exact_integer_root(q.get_den(), n);
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace vgr
