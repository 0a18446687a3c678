#include "vgr/graded.hpp"

namespace vgr {

const RationalFunction& HomogeneousElement::rep() const {
  if (!rep_) throw Error("representative of a zero homogeneous element");
  return *rep_;
}

GradedAlgebra::GradedAlgebra(ValuationPtr v, Subring subring) : valuation_(std::move(v)), subring_(subring) {
  if (!valuation_) throw Error("graded algebra without a valuation");
}

bool GradedAlgebra::in_subring(const RationalFunction& x) const {
  return subring_ == Subring::field || x.is_polynomial();
}

HomogeneousElement GradedAlgebra::in_v(const RationalFunction& x) const {
  if (x.is_zero()) throw ZeroInput("initial form of zero");
  if (!in_subring(x)) throw Error(valuation_->format(x) + " is not in the polynomial subring");
  return HomogeneousElement(valuation_->value(x), valuation_->initial_fraction(x));
}

HomogeneousElement GradedAlgebra::mul(const HomogeneousElement& a, const HomogeneousElement& b) const {
  GroupElement degree = a.degree() + b.degree();
  if (a.is_zero() || b.is_zero()) return HomogeneousElement::zero(std::move(degree));
  return HomogeneousElement(std::move(degree), valuation_->initial_fraction(a.rep() * b.rep()));
}

HomogeneousElement GradedAlgebra::add(const HomogeneousElement& a, const HomogeneousElement& b) const {
  if (a.degree() != b.degree())
    throw Error("adding homogeneous elements of degrees " + to_string(a.degree()) + " and " + to_string(b.degree()));
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RationalFunction sum = a.rep() + b.rep();
  if (sum.is_zero() || valuation_->value(sum) > a.degree()) return HomogeneousElement::zero(a.degree());
  return HomogeneousElement(a.degree(), valuation_->initial_fraction(sum));
}

bool GradedAlgebra::equal(const HomogeneousElement& a, const HomogeneousElement& b) const {
  if (a.degree() != b.degree()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return valuation_->in_eq(a.rep(), b.rep());
}

void GradedAlgebra::accumulate(GradedElement& into, const HomogeneousElement& h) const {
  if (h.is_zero()) return;
  auto it = into.components_.find(h.degree());
  if (it == into.components_.end()) {
    into.components_.emplace(h.degree(), h);
    return;
  }
  HomogeneousElement sum = add(it->second, h);
  if (sum.is_zero())
    into.components_.erase(it);
  else
    it->second = std::move(sum);
}

GradedElement GradedAlgebra::lift(const HomogeneousElement& h) const {
  GradedElement g;
  accumulate(g, h);
  return g;
}

GradedElement GradedAlgebra::add(const GradedElement& a, const GradedElement& b) const {
  GradedElement r = a;
  for (const auto& [d, h] : b.components()) accumulate(r, h);
  return r;
}

GradedElement GradedAlgebra::mul(const GradedElement& a, const GradedElement& b) const {
  GradedElement r;
  for (const auto& [da, ha] : a.components())
    for (const auto& [db, hb] : b.components()) accumulate(r, mul(ha, hb));
  return r;
}

bool GradedAlgebra::equal(const GradedElement& a, const GradedElement& b) const {
  if (a.components().size() != b.components().size()) return false;
  for (auto x = a.components().begin(), y = b.components().begin(); x != a.components().end(); ++x, ++y)
    if (!equal(x->second, y->second)) return false;
  return true;
}

std::string GradedAlgebra::report(const GradedElement& g) const {
  std::string out;
  for (const auto& [d, h] : g.components())
    out += "deg=" + to_string(d) + " rep=" + valuation_->format(h.rep()) + "\n";
  return out;
}

LiftingOracle constant_lifting() {
  return [](const ResidueElement& r) -> std::optional<RationalFunction> {
    if (auto c = r.rational_value()) return RationalFunction(*c);
    return std::nullopt;
  };
}

GradedIsomorphism::GradedIsomorphism(GradedAlgebra algebra, ChoiceFunction eps, std::optional<LiftingOracle> lift)
    : algebra_(std::move(algebra)), twist_(std::move(eps)), lift_(std::move(lift)) {
  if (twist_.choice().valuation() != algebra_.valuation())
    throw Error("choice function and graded algebra use different valuations");
}

TwistedRingElement GradedIsomorphism::psi(const HomogeneousElement& h) const {
  if (h.is_zero()) return TwistedRingElement();
  const RationalFunction d = choice()(h.degree());
  return TwistedRingElement::term(h.degree(), residue(algebra_.valuation(), h.rep() / d));
}

TwistedRingElement GradedIsomorphism::psi(const GradedElement& g) const {
  TwistedRingElement r;
  for (const auto& [d, h] : g.components()) r += psi(h);
  return r;
}

HomogeneousElement GradedIsomorphism::psi_inverse(const GroupElement& degree, const ResidueElement& coefficient) const {
  if (coefficient.is_zero()) return HomogeneousElement::zero(degree);
  if (!lift_) throw HypothesisViolation("no residue lifting oracle declared");
  auto lifted = (*lift_)(coefficient);
  if (!lifted) throw HypothesisViolation("residue " + coefficient.to_string() + " has no lift into R");
  if (!algebra_.in_subring(*lifted))
    throw HypothesisViolation("lift " + algebra_.valuation()->format(*lifted) + " is not in R");
  return algebra_.in_v(choice()(degree) * *lifted);
}

GradedElement GradedIsomorphism::psi_inverse(const TwistedRingElement& t) const {
  GradedElement g;
  for (const auto& [d, c] : t.terms()) g = algebra_.add(g, algebra_.lift(psi_inverse(d, c)));
  return g;
}

}  // namespace vgr
