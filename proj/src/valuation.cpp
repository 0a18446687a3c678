#include "vgr/valuation.hpp"

namespace vgr {

MonomialValuation::MonomialValuation(VariableSet variables, std::vector<GroupElement> weights)
    : variables_(std::move(variables)), weights_(std::move(weights)) {
  if (weights_.size() != variables_.size())
    throw Error("valuation needs one weight per variable (" + std::to_string(variables_.size()) +
                " variables, " + std::to_string(weights_.size()) + " weights)");
  if (weights_.empty()) throw Error("valuation without variables");
  dimension_ = weights_.front().dimension();
  if (dimension_ == 0) throw Error("weights must have dimension >= 1");
  for (const auto& w : weights_)
    if (w.dimension() != dimension_) throw DimensionMismatch("weights of different dimension");
}

const GroupElement& MonomialValuation::weight(Var v) const {
  if (v >= weights_.size()) throw Error("variable index " + std::to_string(v) + " outside the valuation");
  return weights_[v];
}

GroupElement MonomialValuation::value(const Monomial& m) const {
  GroupElement r = zero();
  for (const auto& [v, e] : m.entries()) r += weight(v) * Integer(e);
  return r;
}

GroupElement MonomialValuation::value(const Polynomial& p) const {
  if (p.is_zero()) throw ZeroInput("value of zero");
  std::optional<GroupElement> best;
  for (const auto& [m, c] : p.terms()) {
    GroupElement w = value(m);
    if (!best || w < *best) best = std::move(w);
  }
  return *best;
}

GroupElement MonomialValuation::value(const RationalFunction& f) const {
  if (f.is_zero()) throw ZeroInput("value of zero");
  return value(f.num()) - value(f.den());
}

Polynomial MonomialValuation::initial_part(const Polynomial& p) const {
  const GroupElement least = value(p);
  return p.filter([&](const Monomial& m) { return value(m) == least; });
}

RationalFunction MonomialValuation::initial_fraction(const RationalFunction& f) const {
  if (f.is_zero()) throw ZeroInput("initial part of zero");
  return RationalFunction(initial_part(f.num()), initial_part(f.den()));
}

bool MonomialValuation::in_eq(const RationalFunction& x, const RationalFunction& y) const {
  if (x.is_zero() || y.is_zero()) throw ZeroInput("initial form of zero");
  const GroupElement vx = value(x);
  if (vx != value(y)) return false;
  RationalFunction d = x - y;
  return d.is_zero() || value(d) > vx;
}

// ------------------------------------------------------------------ residues

ResidueElement residue(ValuationPtr v, const RationalFunction& f) {
  if (!v) throw Error("residue without a valuation");
  if (f.is_zero()) return ResidueElement(std::move(v), RationalFunction());
  const GroupElement value = v->value(f);
  if (!value.is_zero())
    throw Error("residue of an element of nonzero value " + to_string(value) + ": " + v->format(f));
  RationalFunction rep = v->initial_fraction(f);
  return ResidueElement(std::move(v), std::move(rep));
}

ResidueElement ResidueElement::zero(ValuationPtr v) { return residue(std::move(v), RationalFunction()); }

ResidueElement ResidueElement::constant(ValuationPtr v, const Rational& c) {
  return residue(std::move(v), RationalFunction(c));
}

void ResidueElement::require_same(const ResidueElement& o) const {
  if (valuation_ != o.valuation_) throw Error("residues of different valuations");
}

std::optional<Rational> ResidueElement::rational_value() const {
  if (is_zero()) return Rational(0);
  Rational c = rep_.num().leading_coefficient() / rep_.den().leading_coefficient();
  if (rep_.num() == rep_.den().scaled(c)) return c;
  return std::nullopt;
}

bool ResidueElement::is_one() const {
  auto c = rational_value();
  return c && *c == 1;
}

ResidueElement ResidueElement::operator*(const ResidueElement& o) const {
  require_same(o);
  return residue(valuation_, rep_ * o.rep_);
}

ResidueElement ResidueElement::operator+(const ResidueElement& o) const {
  require_same(o);
  RationalFunction sum = rep_ + o.rep_;
  // A sum of positive value collapses to the zero class.
  if (sum.is_zero() || valuation_->value(sum) > valuation_->zero()) return zero(valuation_);
  return residue(valuation_, sum);
}

ResidueElement ResidueElement::operator-() const { return ResidueElement(valuation_, -rep_); }

ResidueElement ResidueElement::operator-(const ResidueElement& o) const { return *this + (-o); }

ResidueElement ResidueElement::inverse() const {
  if (is_zero()) throw ZeroInput("inverse of the zero residue");
  return ResidueElement(valuation_, rep_.inverse());
}

bool operator==(const ResidueElement& a, const ResidueElement& b) {
  a.require_same(b);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const MonomialValuation& v = *a.valuation_;
  return v.initial_part(a.rep_.num() * b.rep_.den()) == v.initial_part(b.rep_.num() * a.rep_.den());
}

std::string ResidueElement::to_string() const { return valuation_->format(rep_); }

std::optional<RationalFunction> residue_nth_root(const ResidueElement& r, unsigned n) {
  auto root = nth_root(r.representative(), n);
  if (!root) return std::nullopt;
  // The representative has value zero, so the root does as well.
  if (!(residue(r.valuation(), root->pow(n)) == r)) return std::nullopt;
  return root;
}

}  // namespace vgr
