#pragma once

// The associated graded algebra gr_v(R) of a polynomial subring (or the
// whole function field) and the map psi into the twisted semigroup ring.

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "vgr/twist.hpp"
#include "vgr/valuation.hpp"

namespace vgr {

enum class Subring { polynomial, field };

/// Homogeneous element of gr_v(R): the zero of its degree, or in_v(x) for
/// a representative x of that value, stored as an initial fraction.
class HomogeneousElement {
 public:
  static HomogeneousElement zero(GroupElement degree) { return HomogeneousElement(std::move(degree), std::nullopt); }

  const GroupElement& degree() const { return degree_; }
  bool is_zero() const { return !rep_.has_value(); }
  /// Throws Error on the zero element.
  const RationalFunction& rep() const;

 private:
  friend class GradedAlgebra;
  HomogeneousElement(GroupElement degree, std::optional<RationalFunction> rep)
      : degree_(std::move(degree)), rep_(std::move(rep)) {}

  GroupElement degree_;
  std::optional<RationalFunction> rep_;
};

/// Finite sum of nonzero homogeneous elements, one per degree.
class GradedElement {
 public:
  using Components = std::map<GroupElement, HomogeneousElement>;

  GradedElement() = default;
  const Components& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }

 private:
  friend class GradedAlgebra;
  Components components_;
};

class GradedAlgebra {
 public:
  GradedAlgebra(ValuationPtr v, Subring subring);

  const ValuationPtr& valuation() const { return valuation_; }
  Subring subring() const { return subring_; }
  bool in_subring(const RationalFunction& x) const;

  /// Image of x in P_g / P_g^+ for g = v(x). Throws ZeroInput on zero and
  /// Error when x lies outside R.
  HomogeneousElement in_v(const RationalFunction& x) const;

  HomogeneousElement mul(const HomogeneousElement& a, const HomogeneousElement& b) const;
  /// Requires equal degrees. The result is the zero marker when the sum
  /// gains value.
  HomogeneousElement add(const HomogeneousElement& a, const HomogeneousElement& b) const;
  bool equal(const HomogeneousElement& a, const HomogeneousElement& b) const;

  GradedElement lift(const HomogeneousElement& h) const;
  GradedElement add(const GradedElement& a, const GradedElement& b) const;
  GradedElement mul(const GradedElement& a, const GradedElement& b) const;
  bool equal(const GradedElement& a, const GradedElement& b) const;

  /// One `deg=<g> rep=<f>` line per component, ascending degree.
  std::string report(const GradedElement& g) const;

 private:
  void accumulate(GradedElement& into, const HomogeneousElement& h) const;

  ValuationPtr valuation_;
  Subring subring_;
};

/// Returns z' in R whose residue is the given class, or nullopt when the
/// class cannot be lifted. Stands in for the hypothesis Kv = R/m.
using LiftingOracle = std::function<std::optional<RationalFunction>(const ResidueElement&)>;

/// Lifts classes that are rational numbers to the constants of R. Complete
/// when the weights are Z-independent, where Kv = Q.
LiftingOracle constant_lifting();

/// Raised by psi_inverse when a residue class has no lift into R.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// psi(in_v(x)) = residue(x / eps(v(x))) t^v(x), extended additively.
class GradedIsomorphism {
 public:
  GradedIsomorphism(GradedAlgebra algebra, ChoiceFunction eps, std::optional<LiftingOracle> lift = std::nullopt);

  const GradedAlgebra& algebra() const { return algebra_; }
  const ChoiceFunction& choice() const { return twist_.choice(); }
  const TwistingTable& twisting() const { return twist_; }
  bool has_lifting() const { return lift_.has_value(); }

  /// Throws DomainError when the degree is outside the choice domain.
  TwistedRingElement psi(const HomogeneousElement& h) const;
  TwistedRingElement psi(const GradedElement& g) const;

  /// in_v(eps(degree) z') with z' a lift of the coefficient. Throws
  /// HypothesisViolation without an oracle or when lifting fails.
  HomogeneousElement psi_inverse(const GroupElement& degree, const ResidueElement& coefficient) const;
  GradedElement psi_inverse(const TwistedRingElement& t) const;

 private:
  GradedAlgebra algebra_;
  TwistingTable twist_;
  std::optional<LiftingOracle> lift_;
};

}  // namespace vgr
