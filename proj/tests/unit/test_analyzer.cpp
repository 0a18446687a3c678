#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "vgr/constructions.hpp"

using namespace vgr;
using testing::G;

namespace {

ChoiceFunction::Table table(const ValuationPtr& v, std::initializer_list<std::pair<const char*, const char*>> rows) {
  ChoiceFunction::Table t;
  for (const auto& [g, f] : rows) t.emplace(G(g), v->parse(f));
  return t;
}

}  // namespace

TEST_CASE("prime valuation") {
  ValuationPtr v = prime_valuation({2, 3, 5});
  CHECK(v->variables().names() == std::vector<std::string>{"x2", "x3", "x5"});
  CHECK(v->weight(2) == G("1/5"));
  CHECK_THROWS_AS(prime_valuation({4}), Error);
  CHECK_THROWS_AS(prime_valuation({2, 2}), Error);
  CHECK_THROWS_AS(prime_valuation({}), Error);
}

TEST_CASE("conflict for x2, x3, x2^2") {
  ValuationPtr v = prime_valuation({2, 3});
  AnalyzerReport r = analyze_counterexample(v, {2, 3}, table(v, {{"1/2", "x2"}, {"1/3", "x3"}, {"1", "x2^2"}}));
  CHECK(r.conflict);
  CHECK(r.conflict_prime == 3u);
  REQUIRE(r.findings.size() == 2);
  CHECK(r.findings[0].power.consistent);
  CHECK(r.findings[0].power_twist_is_one);
  CHECK(r.findings[0].root.has_value());
  CHECK_FALSE(r.findings[1].power.consistent);
  // x3^3 * 1 against 1 * x2^2.
  CHECK(r.findings[1].power.lhs == parse_polynomial("x3^3", v->variables()));
  CHECK(r.findings[1].power.rhs == parse_polynomial("x2^2", v->variables()));
  CHECK_FALSE(r.findings[1].root.has_value());
  CHECK(r.modulus == 6);
}

TEST_CASE("consistent single prime") {
  ValuationPtr v = prime_valuation({2});
  AnalyzerReport r = analyze_counterexample(v, {2}, table(v, {{"1/2", "x2"}, {"1", "x2^2"}}));
  CHECK_FALSE(r.conflict);
  CHECK(r.degree == 2);
  CHECK(r.divisible);
  const std::string text = format_report(r, *v, false);
  CHECK(text.find("verdict: DIVISIBILITY 2 | deg eps(1) = 2 holds") != std::string::npos);
  const std::string machine = format_report(r, *v, true);
  CHECK(machine.find("verdict=DIVISIBILITY\n") != std::string::npos);
  CHECK(machine.find("degree=2\n") != std::string::npos);
  CHECK(machine.find("prime[2].root=x2\n") != std::string::npos);
}

TEST_CASE("analyzer reduces to initial parts") {
  ValuationPtr v = prime_valuation({2, 3});
  AnalyzerReport r = analyze_counterexample(
      v, {2, 3}, table(v, {{"1/2", "x2^3/x3^3 + x2^4"}, {"1/3", "x2^2/x3^2"}, {"1", "x2^6/x3^6 + x2^7"}}));
  CHECK(r.initial.at(G("1/2")) == v->parse("x2^3/x3^3"));
  CHECK_FALSE(r.conflict);
  CHECK(r.degree == 6);
  CHECK(r.divisible);
  CHECK_FALSE(r.degree_may_be_inflated);
  for (const auto& f : r.findings) CHECK(f.power_twist_is_one);
}

TEST_CASE("malformed candidates and the empty prime set") {
  ValuationPtr v = prime_valuation({2, 3});
  CHECK_THROWS_AS(analyze_counterexample(v, {2, 3}, table(v, {{"1/2", "x3"}, {"1/3", "x3"}, {"1", "x2^2"}})),
                  InvalidChoice);
  CHECK_THROWS_AS(analyze_counterexample(v, {2, 3}, table(v, {{"1/2", "x2"}, {"1", "x2^2"}})), Error);
  AnalyzerReport empty = analyze_counterexample(v, {}, {});
  CHECK_FALSE(empty.conflict);
  CHECK(empty.divisible);
  CHECK(format_report(empty, *v, true).find("verdict=DIVISIBILITY") != std::string::npos);
}

TEST_CASE("monomial candidates") {
  ValuationPtr v = prime_valuation({2, 3});
  // 3a + 2b = 3 with positive and negative parts at most 8.
  auto c = monomial_candidates(*v, G("1/2"), 8, {1});
  std::set<std::pair<long, long>> expect;
  for (long a = -8; a <= 8; ++a)
    for (long b = -8; b <= 8; ++b)
      if (3 * a + 2 * b == 3 && std::max(a, 0L) + std::max(b, 0L) <= 8 && std::max(-a, 0L) + std::max(-b, 0L) <= 8)
        expect.insert({a, b});
  CHECK(c.size() == expect.size());
  for (const auto& f : c) CHECK(v->value(f) == G("1/2"));
  CHECK(monomial_candidates(*v, G("1/2"), 8, {1, -1, 0}).size() == 2 * expect.size());
}

TEST_CASE("enumeration: every consistent table has 6 | deg eps(1)") {
  ValuationPtr v = prime_valuation({2, 3});
  const std::vector<Rational> constants{1, -1, 2, testing::frac(1, 2)};
  EnumerationSummary s = enumerate_monomial_tables(v, {2, 3}, 8, constants);

  // Oracle: exponent vectors (a, b) of x2^a x3^b and constants, consistent
  // exactly when eps(1) = eps(1/2)^2 = eps(1/3)^3 in K.
  auto in_pool = [](long a, long b, long target6) {
    return 3 * a + 2 * b == target6 && std::max(a, 0L) + std::max(b, 0L) <= 8 &&
           std::max(-a, 0L) + std::max(-b, 0L) <= 8;
  };
  std::size_t consistent = 0, pool_half = 0, pool_third = 0, pool_one = 0;
  std::set<long> degrees;
  for (long a = -8; a <= 8; ++a)
    for (long b = -8; b <= 8; ++b) {
      pool_half += in_pool(a, b, 3);
      pool_third += in_pool(a, b, 2);
      pool_one += in_pool(a, b, 6);
    }
  for (long a1 = -8; a1 <= 8; ++a1)
    for (long b1 = -8; b1 <= 8; ++b1) {
      if (!in_pool(a1, b1, 3)) continue;
      for (long a2 = -8; a2 <= 8; ++a2)
        for (long b2 = -8; b2 <= 8; ++b2) {
          if (!in_pool(a2, b2, 2)) continue;
          if (2 * a1 != 3 * a2 || 2 * b1 != 3 * b2 || !in_pool(2 * a1, 2 * b1, 6)) continue;
          for (const auto& c1 : constants)
            for (const auto& c2 : constants)
              for (const auto& c0 : constants)
                if (c1 * c1 == c0 && c2 * c2 * c2 == c0) {
                  ++consistent;
                  degrees.insert(std::max(std::max(2 * a1, 0L) + std::max(2 * b1, 0L),
                                          std::max(-2 * a1, 0L) + std::max(-2 * b1, 0L)));
                }
        }
    }
  CHECK(s.tables == pool_half * pool_third * pool_one * constants.size() * constants.size() * constants.size());
  CHECK(s.consistent == consistent);
  CHECK(s.consistent_degrees == std::set<std::uint64_t>(degrees.begin(), degrees.end()));
  CHECK(s.all_divisible);
  CHECK(s.modulus == 6);
  REQUIRE(s.first_consistent);
  for (auto d : s.consistent_degrees) CHECK(d % 6 == 0);
}
