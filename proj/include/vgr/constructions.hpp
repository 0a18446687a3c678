#pragma once

// Choice functions with trivial twisting (free value groups, one-step
// extensions by radicals) and the analyzer for the valuation with
// v(x_p) = 1/p on finitely many primes.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vgr/ordgroup.hpp"
#include "vgr/twist.hpp"
#include "vgr/valuation.hpp"

namespace vgr {

/// The residue class needed for an extension has no n-th root that the
/// root extraction can find.
class RootNotFound : public Error {
 public:
  using Error::Error;
};

struct Extension;

/// A subgroup Phi with a choice function on it.
struct SubgroupWithChoice {
  FgSubgroup subgroup;
  ChoiceFunction choice;
  bool certified_trivial = false;
  /// Set when this pair was produced by extend_choice.
  std::shared_ptr<const Extension> extension;
};

/// Data of one extension step Phi -> Psi = Phi + <gamma>.
struct Extension {
  struct Canonical {
    GroupElement base_part;  // in Phi
    Integer multiple;        // 0 <= multiple < period, or any integer without a period
  };

  SubgroupWithChoice base;
  FgSubgroup extended;
  GroupElement gamma;
  RationalFunction witness;       // x_gamma
  std::optional<Integer> period;  // n0 = min{n >= 2 : n gamma in Phi}; unset if <gamma> meets Phi only in 0
  RationalFunction root;          // a with residue(x0 / x_gamma^n0) = residue(a^n0); 1 without a period
  RationalFunction step;          // a * x_gamma

  /// Unique (alpha, n) with g = alpha + n gamma. Throws DomainError for g
  /// outside Psi.
  Canonical canonical_form(const GroupElement& g) const;
};

/// eps(sum n_i g_i) = prod z_i^(n_i) on the subgroup with basis g_i.
/// Throws InvalidChoice if v(z_i) != g_i and Error if the g_i are
/// dependent.
ChoiceFunction free_choice(ValuationPtr v, std::vector<GroupElement> generators,
                           std::vector<RationalFunction> witnesses, DomainKind kind = DomainKind::group);

/// (<alpha>, eps(n alpha) = z^n).
SubgroupWithChoice cyclic_choice(ValuationPtr v, const GroupElement& alpha, const RationalFunction& z);

/// Extends a certified-trivial (Phi, eps) to Phi + <gamma>. Throws Error if
/// gamma is already in Phi or the base is not certified, InvalidChoice if
/// v(x_gamma) != gamma, and RootNotFound when the residue root is missing.
SubgroupWithChoice extend_choice(const SubgroupWithChoice& base, const GroupElement& gamma,
                                 const RationalFunction& x_gamma);

struct ChainStep {
  GroupElement gamma;
  RationalFunction witness;
};

/// Applies extend_choice along the steps in order.
SubgroupWithChoice extend_chain(SubgroupWithChoice base, const std::vector<ChainStep>& steps);

/// Replaces every table value P/Q by ip(P)/ip(Q). Requires a table-backed
/// choice function.
ChoiceFunction make_initial(const ChoiceFunction& eps);

struct ForcedPower {
  bool consistent = false;
  Polynomial lhs;  // P^n Q'
  Polynomial rhs;  // Q^n P'
};

/// With eps(alpha) = P/Q and eps(n alpha) = P'/Q', tests P^n Q' == Q^n P',
/// i.e. eps(n alpha) == eps(alpha)^n in K.
ForcedPower forced_power_check(const ChoiceFunction& eps, const GroupElement& alpha, unsigned n);

// ------------------------------------------------------------- analyzer

/// Rank-one valuation on variables x<p> with v(x<p>) = 1/p.
ValuationPtr prime_valuation(const std::vector<unsigned>& primes);

struct PrimeFinding {
  unsigned prime = 0;
  ForcedPower power;                     // eps(1) against eps(1/p)^p
  bool power_twist_is_one = false;       // residue(eps(1/p)^p / eps(1)) == 1
  std::optional<RationalFunction> root;  // p-th root of eps(1), if found
};

struct AnalyzerReport {
  std::vector<unsigned> primes;
  ChoiceFunction::Table original;
  ChoiceFunction::Table initial;
  std::vector<PrimeFinding> findings;
  bool conflict = false;
  std::optional<unsigned> conflict_prime;
  std::uint64_t degree = 0;  // deg of the initial eps(1)
  Integer modulus = 1;       // lcm of the primes
  bool divisible = true;     // modulus | degree
  bool degree_may_be_inflated = false;
};

/// Candidates are eps(1/p) for every p and eps(1). Throws InvalidChoice on
/// values of the wrong value and Error on missing entries.
AnalyzerReport analyze_counterexample(const ValuationPtr& v, const std::vector<unsigned>& primes,
                                      const ChoiceFunction::Table& candidates);

struct EnumerationSummary {
  std::size_t tables = 0;
  std::size_t consistent = 0;
  std::set<std::uint64_t> consistent_degrees;
  bool all_divisible = true;
  Integer modulus = 1;
  std::optional<ChoiceFunction::Table> first_consistent;
};

/// Runs the analyzer over every table whose entries are c * (monomial
/// quotient) with c from `constants` and deg at most `degree_bound`.
EnumerationSummary enumerate_monomial_tables(const ValuationPtr& v, const std::vector<unsigned>& primes,
                                             unsigned degree_bound, const std::vector<Rational>& constants);

/// All c * x^a / x^b with v = target and max(deg x^a, deg x^b) <= bound.
std::vector<RationalFunction> monomial_candidates(const MonomialValuation& v, const GroupElement& target,
                                                  unsigned degree_bound, const std::vector<Rational>& constants);

std::string format_report(const AnalyzerReport& report, const MonomialValuation& v, bool machine);

}  // namespace vgr
