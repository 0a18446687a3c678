#include <algorithm>
#include <functional>

#include "vgr/constructions.hpp"

namespace vgr {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_primes(const std::vector<unsigned>& primes) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) throw Error(std::to_string(primes[i]) + " is not a prime");
    for (std::size_t j = 0; j < i; ++j)
      if (primes[j] == primes[i]) throw Error("prime " + std::to_string(primes[i]) + " listed twice");
  }
}

GroupElement reciprocal(unsigned p) { return GroupElement::scalar(Rational(1, p)); }

}  // namespace

ValuationPtr prime_valuation(const std::vector<unsigned>& primes) {
  check_primes(primes);
  if (primes.empty()) throw Error("prime_valuation needs at least one prime");
  std::vector<std::string> names;
  std::vector<GroupElement> weights;
  for (unsigned p : primes) {
    names.push_back("x" + std::to_string(p));
    weights.push_back(reciprocal(p));
  }
  return std::make_shared<const MonomialValuation>(VariableSet(std::move(names)), std::move(weights));
}

AnalyzerReport analyze_counterexample(const ValuationPtr& v, const std::vector<unsigned>& primes,
                                      const ChoiceFunction::Table& candidates) {
  if (!v) throw Error("analyzer without a valuation");
  if (v->dimension() != 1) throw Error("the analyzer needs a rank-one valuation");
  check_primes(primes);

  AnalyzerReport report;
  report.primes = primes;
  std::sort(report.primes.begin(), report.primes.end());
  const GroupElement one = GroupElement::scalar(1);
  for (unsigned p : report.primes) {
    if (!candidates.count(reciprocal(p))) throw Error("missing candidate for eps(1/" + std::to_string(p) + ")");
    report.modulus = lcm(report.modulus, Integer(p));
  }
  if (!report.primes.empty() && !candidates.count(one)) throw Error("missing candidate for eps(1)");

  const ChoiceFunction eps = ChoiceFunction::from_table(v, candidates);
  const ChoiceFunction initial = make_initial(eps);
  report.original = *eps.table();
  report.initial = *initial.table();
  if (!initial.defined_at(one)) return report;

  const RationalFunction unit = initial(one);
  for (unsigned p : report.primes) {
    PrimeFinding f;
    f.prime = p;
    f.power = forced_power_check(initial, reciprocal(p), p);
    f.power_twist_is_one = residue(v, initial(reciprocal(p)).pow(p) / unit).is_one();
    f.root = nth_root(unit, p);
    if (!f.power.consistent && !report.conflict) {
      report.conflict = true;
      report.conflict_prime = p;
    }
    report.findings.push_back(std::move(f));
  }
  report.degree = total_degree(unit);
  report.divisible = Integer(static_cast<unsigned long>(report.degree)) % report.modulus == 0;
  report.degree_may_be_inflated = may_share_nonmonomial_factor(unit);
  return report;
}

std::vector<RationalFunction> monomial_candidates(const MonomialValuation& v, const GroupElement& target,
                                                  unsigned degree_bound, const std::vector<Rational>& constants) {
  const std::size_t k = v.variables().size();
  std::vector<RationalFunction> out;
  std::vector<long> exps(k, 0);
  const long bound = degree_bound;
  std::function<void(std::size_t, long, long, GroupElement)> walk = [&](std::size_t i, long pos, long neg,
                                                                        GroupElement value) {
    if (i == k) {
      if (value != target) return;
      std::vector<Monomial::Entry> up, down;
      for (std::size_t j = 0; j < k; ++j) {
        if (exps[j] > 0) up.emplace_back(static_cast<Var>(j), static_cast<Exponent>(exps[j]));
        if (exps[j] < 0) down.emplace_back(static_cast<Var>(j), static_cast<Exponent>(-exps[j]));
      }
      for (const auto& c : constants)
        if (c != 0)
          out.emplace_back(Polynomial::term(c, Monomial(up)), Polynomial::term(1, Monomial(down)));
      return;
    }
    for (long e = -(bound - neg); e <= bound - pos; ++e) {
      exps[i] = e;
      walk(i + 1, pos + std::max(e, 0L), neg + std::max(-e, 0L), value + v.weight(static_cast<Var>(i)) * Integer(e));
    }
    exps[i] = 0;
  };
  walk(0, 0, 0, v.zero());
  return out;
}

EnumerationSummary enumerate_monomial_tables(const ValuationPtr& v, const std::vector<unsigned>& primes,
                                             unsigned degree_bound, const std::vector<Rational>& constants) {
  check_primes(primes);
  EnumerationSummary summary;
  std::vector<unsigned> sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  std::vector<GroupElement> slots;
  for (unsigned p : sorted) {
    slots.push_back(reciprocal(p));
    summary.modulus = lcm(summary.modulus, Integer(p));
  }
  slots.push_back(GroupElement::scalar(1));

  std::vector<std::vector<RationalFunction>> pools;
  for (const auto& s : slots) pools.push_back(monomial_candidates(*v, s, degree_bound, constants));

  ChoiceFunction::Table table;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == slots.size()) {
      ++summary.tables;
      AnalyzerReport r = analyze_counterexample(v, sorted, table);
      if (r.conflict) return;
      ++summary.consistent;
      summary.consistent_degrees.insert(r.degree);
      if (!r.divisible) summary.all_divisible = false;
      if (!summary.first_consistent) summary.first_consistent = table;
      return;
    }
    for (const auto& c : pools[i]) {
      table.insert_or_assign(slots[i], c);
      walk(i + 1);
    }
    table.erase(slots[i]);
  };
  walk(0);
  return summary;
}

namespace {

std::string join_primes(const std::vector<unsigned>& primes, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(primes[i]);
  }
  return s;
}

}  // namespace

std::string format_report(const AnalyzerReport& r, const MonomialValuation& v, bool machine) {
  std::string out;
  auto line = [&](const std::string& s) { out += s + "\n"; };
  if (machine) {
    line("primes=" + join_primes(r.primes, ","));
    for (const auto& [g, f] : r.original) line("eps[" + to_string(g) + "]=" + v.format(f));
    for (const auto& [g, f] : r.initial) line("initial[" + to_string(g) + "]=" + v.format(f));
    for (const auto& f : r.findings) {
      const std::string key = "prime[" + std::to_string(f.prime) + "].";
      line(key + "forced_power=" + (f.power.consistent ? "consistent" : "inconsistent"));
      line(key + "lhs=" + to_string(f.power.lhs, v.variables()));
      line(key + "rhs=" + to_string(f.power.rhs, v.variables()));
      line(key + "twist_product_one=" + (f.power_twist_is_one ? "true" : "false"));
      line(key + "pth_power=" + (f.root ? "true" : "false"));
      if (f.root) line(key + "root=" + v.format(*f.root));
    }
    line(std::string("verdict=") + (r.conflict ? "CONFLICT" : "DIVISIBILITY"));
    if (r.conflict_prime) line("conflict_prime=" + std::to_string(*r.conflict_prime));
    line("degree=" + std::to_string(r.degree));
    line("modulus=" + to_string(r.modulus));
    line(std::string("divisible=") + (r.divisible ? "true" : "false"));
    line(std::string("degree_may_be_inflated=") + (r.degree_may_be_inflated ? "true" : "false"));
    return out;
  }

  line("primes: " + (r.primes.empty() ? std::string("(none)") : join_primes(r.primes, " ")));
  line("candidate table (value -> candidate -> initial form):");
  for (const auto& [g, f] : r.original)
    line("  eps(" + to_string(g) + ") = " + v.format(f) + "  ->  " + v.format(r.initial.at(g)));
  for (const auto& f : r.findings) {
    const std::string p = std::to_string(f.prime);
    line("p = " + p + ":");
    if (f.power.consistent) {
      line("  eps(1) = eps(1/" + p + ")^" + p + " holds exactly");
    } else {
      line("  eps(1) = eps(1/" + p + ")^" + p + " FAILS: P^" + p + "*Q' = " + to_string(f.power.lhs, v.variables()) +
           " but Q^" + p + "*P' = " + to_string(f.power.rhs, v.variables()));
    }
    line(std::string("  residue of eps(1/") + p + ")^" + p + " / eps(1) is " + (f.power_twist_is_one ? "1" : "not 1"));
    if (f.root)
      line("  eps(1) = (" + v.format(*f.root) + ")^" + p + " in K, so " + p + " | deg eps(1)");
    else
      line("  no root of order " + p + " of eps(1) found by root extraction");
  }
  if (r.conflict) {
    line("verdict: CONFLICT at p = " + std::to_string(*r.conflict_prime) +
         " (no choice function extending this table has trivial twisting)");
  } else {
    line("verdict: DIVISIBILITY " + to_string(r.modulus) + " | deg eps(1) = " + std::to_string(r.degree) + " " +
         (r.divisible ? "holds" : "FAILS"));
    if (!r.primes.empty())
      line("note: if every prime divided deg eps(1), the degree would be 0, eps(1) would be a rational "
           "constant of value 0 rather than 1; only the listed primes are machine-checked");
  }
  if (r.degree_may_be_inflated) line("warning: eps(1) may carry a non-monomial common factor; degree is an upper bound");
  return out;
}

}  // namespace vgr
