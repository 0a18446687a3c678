#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vgr/ordgroup.hpp"
#include "vgr/poly_io.hpp"
#include "vgr/valuation.hpp"

namespace testing {

inline vgr::GroupElement G(const std::string& s) { return vgr::parse_group_element(s); }
inline vgr::Rational Q(const std::string& s) { return vgr::parse_rational(s); }
inline vgr::Rational frac(long n, long d) {
  vgr::Rational q(n, d);
  q.canonicalize();
  return q;
}

inline vgr::ValuationPtr make_valuation(const std::vector<std::pair<std::string, std::string>>& weights) {
  std::vector<std::string> names;
  std::vector<vgr::GroupElement> values;
  for (const auto& [n, w] : weights) {
    names.push_back(n);
    values.push_back(G(w));
  }
  return std::make_shared<const vgr::MonomialValuation>(vgr::VariableSet(names), values);
}

// v(x2) = 1/2, v(x3) = 1/3.
inline vgr::ValuationPtr primes23() { return make_valuation({{"x2", "1/2"}, {"x3", "1/3"}}); }
// Z^2 lex with v(x) = (1,0), v(y) = (0,1).
inline vgr::ValuationPtr lex2() { return make_valuation({{"x", "(1,0)"}, {"y", "(0,1)"}}); }

}  // namespace testing
