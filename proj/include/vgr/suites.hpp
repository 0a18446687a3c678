#pragma once

// Randomized verification suites shared by the CLI and the acceptance
// binary: twisted-ring axioms, the cocycle identity, the graded map psi,
// and agreement of the two triviality checks.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "vgr/graded.hpp"
#include "vgr/twist.hpp"

namespace vgr {

/// mt19937_64 with modulo draws, so streams are identical on every
/// platform for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n);
  long between(long lo, long hi);
  bool chance(unsigned percent) { return below(100) < percent; }
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }
  /// Nonzero rational with numerator and denominator at most `size`.
  Rational nonzero_rational(long size = 4);

 private:
  std::mt19937_64 engine_;
};

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;
  std::string skip_reason;

  bool skipped() const { return !skip_reason.empty(); }
  bool ok() const { return failed == 0; }
  void record(bool holds, const std::function<std::string()>& describe);
  void fail(const std::string& why);
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckTally> checks;

  CheckTally& check(const std::string& name);
  bool ok() const;
  std::size_t failures() const;
  std::size_t samples() const;
  void merge(const SuiteReport& other);
  std::string format(bool machine) const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  /// Height bound for enumerated degrees; sampled degrees have height at
  /// most bound / 3 so that triple products stay within it.
  unsigned bound = 6;
};

/// Random nonzero residue: a rational constant, times up to two twisting
/// values of the choice function, occasionally plus a second such term.
ResidueElement random_residue(Rng& rng, const TwistingTable& twist, const std::vector<GroupElement>& degrees);

/// Random twisted ring element with 1 to `max_terms` terms.
TwistedRingElement random_twisted(Rng& rng, const TwistingTable& twist, const std::vector<GroupElement>& degrees,
                                  std::size_t max_terms = 4);

/// Commutativity, unit, distributivity, associativity and additive
/// inverses of x_eps on random elements.
SuiteReport ring_axioms_suite(const ChoiceFunction& eps, const SuiteOptions& opt);

/// eps-bar(a,b) eps-bar(a+b,c) = eps-bar(a,b+c) eps-bar(b,c), symmetry,
/// eps-bar(0,a) = 1, and the single-term reduction of associativity.
SuiteReport cocycle_suite(const ChoiceFunction& eps, const SuiteOptions& opt);

/// Injectivity (both directions), additivity in both cases,
/// multiplicativity, degree preservation and, with a lifting oracle, both
/// round trips.
SuiteReport iso_suite(const GradedIsomorphism& iso, const SuiteOptions& opt);

/// is_trivial against semigroup_hom_check on one choice function.
SuiteReport triviality_agreement(const ChoiceFunction& eps, unsigned bound, const std::string& label);

/// Randomized rank-one choice function: 2 or 3 variables with rational
/// weights, 1 to 3 generators, table over generator sums of height at most
/// `height`. Some variants are trivial by construction, others carry
/// rational or non-rational twisting.
struct RandomSetup {
  std::string label;
  ChoiceFunction eps;
};
RandomSetup random_choice_setup(Rng& rng, unsigned height = 6);

}  // namespace vgr
