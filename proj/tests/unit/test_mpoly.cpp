#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "vgr/mpoly.hpp"
#include "vgr/poly_io.hpp"

using namespace vgr;

namespace {

const VariableSet vars({"x", "y", "x2", "x3"});
Polynomial P(const std::string& s) { return parse_polynomial(s, vars); }
RationalFunction F(const std::string& s) { return parse_rational_function(s, vars); }

// Product by the schoolbook double loop over term lists.
Polynomial naive_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r += Polynomial::term(ca * cb, ma * mb);
  return r;
}

Polynomial random_poly(std::mt19937_64& rng, int max_terms = 4, int max_exp = 3) {
  Polynomial p;
  const int n = 1 + rng() % max_terms;
  for (int i = 0; i < n; ++i) {
    std::vector<Monomial::Entry> e;
    for (Var v = 0; v < 3; ++v)
      if (auto k = rng() % (max_exp + 1)) e.emplace_back(v, static_cast<Exponent>(k));
    p += Polynomial::term(testing::frac(long(rng() % 9) - 4, long(rng() % 3) + 1), Monomial(e));
  }
  return p.is_zero() ? Polynomial(1) : p;
}

}  // namespace

TEST_CASE("polynomial add and mul") {
  CHECK(P("(x+y)*(x-y)") == P("x^2 - y^2"));
  CHECK((P("x+y") + P("-x-y")).is_zero());
  CHECK(P("x+y").pow(2) == naive_mul(P("x+y"), P("x+y")));
  CHECK(P("x+y").pow(2) == P("x^2 + 2*x*y + y^2"));
  CHECK(P("x^2*y - 3").term_count() == 2);
}

TEST_CASE("lex leading term") {
  Polynomial p = P("y^5 + x*y + 3*x2");
  CHECK(p.leading_monomial() == Monomial::variable(0).operator*(Monomial::variable(1)));
  CHECK(p.leading_coefficient() == 1);
}

TEST_CASE("rational function arithmetic") {
  CHECK(F("x/y") * F("y/x") == RationalFunction(1));
  CHECK(F("x/y") + RationalFunction() == F("x/y"));
  RationalFunction s = F("x/y") + F("y/x");
  // Cross-multiplication oracle: s * (x*y) == x^2 + y^2.
  CHECK(s.num() * P("x*y") == P("x^2+y^2") * s.den());
  CHECK(s == F("(x^2+y^2)/(x*y)"));
  CHECK_THROWS_AS(RationalFunction().inverse(), ZeroInput);
  CHECK_THROWS_AS(F("x") / RationalFunction(), ZeroInput);
  CHECK(F("(x^2-y^2)/(x-y)") == F("x+y"));
}

TEST_CASE("normalization cancels monomial content") {
  RationalFunction f(P("x^3*y + x^2*y^2"), P("2*x*y^3"));
  CHECK(f.num() == P("1/2*x^2 + 1/2*x*y"));
  CHECK(f.den() == P("y^2"));
  CHECK(RationalFunction(Polynomial(), P("x+1")).den() == Polynomial(1));
}

TEST_CASE("total degree") {
  CHECK(total_degree(F("x2^2/x3^3")) == std::max(2, 3));
  CHECK(total_degree(F("5")) == 0);
  CHECK(total_degree(F("(x+y)/x")) == 1);
  CHECK_THROWS_AS(total_degree(RationalFunction()), ZeroInput);
  CHECK_FALSE(may_share_nonmonomial_factor(F("x2^6/x3^6")));
  CHECK(may_share_nonmonomial_factor(F("(x^2-y^2)/(x*y+y^2+1)")));
}

TEST_CASE("nth_root of polynomials") {
  CHECK(nth_root(P("x^2 + 2*x*y + y^2"), 2) == P("x+y"));
  CHECK(nth_root(P("x^6*y^3"), 3) == P("x^2*y"));
  CHECK(nth_root(P("-8*x^3"), 3) == P("-2*x"));
  CHECK_FALSE(nth_root(P("-x^2"), 2).has_value());
  CHECK(nth_root(Polynomial(), 4) == Polynomial());

  // Bounded-support oracle: no a*x + b*y + c with small coefficients squares
  // to x^2 + y^2.
  const Polynomial target = P("x^2 + y^2");
  bool found = false;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c) {
        Polynomial g = Polynomial::term(a, Monomial::variable(0)) + Polynomial::term(b, Monomial::variable(1)) + c;
        if (naive_mul(g, g) == target) found = true;
      }
  CHECK_FALSE(found);
  CHECK_FALSE(nth_root(target, 2).has_value());
}

TEST_CASE("nth_root of rational functions") {
  CHECK(nth_root(F("x^2/y^4"), 2) == F("x/y^2"));
  auto r = nth_root(F("(x^2+2*x*y+y^2)/x2^4"), 2);
  REQUIRE(r);
  CHECK(r->num() == *nth_root(P("x^2+2*x*y+y^2"), 2));
  CHECK(r->den() == *nth_root(P("x2^4"), 2));
  CHECK(*r == F("(x+y)/x2^2"));
  CHECK_FALSE(nth_root(F("x/y"), 2).has_value());
}

TEST_CASE("property: ring axioms on random triples") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Polynomial() == a);
    CHECK(a * Polynomial(1) == a);
    CHECK((a - a).is_zero());
    CHECK(a * b == naive_mul(a, b));
  }
}

TEST_CASE("property: cross-multiplied equality is a congruence") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 60; ++i) {
    Polynomial n = random_poly(rng), d = random_poly(rng), k = random_poly(rng, 2, 2);
    RationalFunction f(n, d);
    RationalFunction f2(n * k, d * k);
    RationalFunction g(random_poly(rng), random_poly(rng));
    CHECK(f == f2);
    CHECK(f2 == f);
    CHECK(f + g == f2 + g);
    CHECK(f * g == f2 * g);
    CHECK(f * f.inverse() == RationalFunction(1));
  }
}

TEST_CASE("property: degree multiplicativity and roots") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 80; ++i) {
    Polynomial g = random_poly(rng, 3, 2);
    RationalFunction h(random_poly(rng, 2, 2), Polynomial::term(1, Monomial::variable(2, 1 + rng() % 3)));
    for (unsigned n : {2u, 3u, 5u}) {
      CHECK(total_degree(g.pow(n)) == n * total_degree(g));
      auto r = nth_root(g.pow(n), n);
      REQUIRE(r);
      CHECK(r->pow(n) == g.pow(n));
      CHECK(total_degree(h.pow(n)) == n * total_degree(h));
    }
  }
}
