#include "vgr/constructions.hpp"

#include <functional>

namespace vgr {

ChoiceFunction free_choice(ValuationPtr v, std::vector<GroupElement> generators,
                           std::vector<RationalFunction> witnesses, DomainKind kind) {
  if (!v) throw Error("free_choice without a valuation");
  if (generators.size() != witnesses.size())
    throw Error("free_choice: " + std::to_string(generators.size()) + " generators but " +
                std::to_string(witnesses.size()) + " witnesses");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (witnesses[i].is_zero()) throw InvalidChoice("zero witness for " + to_string(generators[i]));
    if (v->value(witnesses[i]) != generators[i])
      throw InvalidChoice("witness " + v->format(witnesses[i]) + " has value " + to_string(v->value(witnesses[i])) +
                          ", not " + to_string(generators[i]));
  }
  FgSubgroup lattice(v->dimension(), generators);
  if (!lattice.is_basis()) throw Error("free_choice: generators are not independent");

  auto defined = [lattice, kind](const GroupElement& g) {
    auto w = lattice.decompose(g);
    if (!w) return false;
    if (kind == DomainKind::semigroup)
      for (const auto& n : *w)
        if (n < 0) return false;
    return true;
  };
  auto rule = [lattice, witnesses](const GroupElement& g) {
    auto w = lattice.decompose(g);
    RationalFunction r(1);
    for (std::size_t i = 0; i < witnesses.size(); ++i)
      if ((*w)[i] != 0) r = r * witnesses[i].pow((*w)[i].get_si());
    return r;
  };
  return ChoiceFunction::from_rule(std::move(v), std::move(generators), kind, defined, rule, true);
}

SubgroupWithChoice cyclic_choice(ValuationPtr v, const GroupElement& alpha, const RationalFunction& z) {
  if (alpha.is_zero()) throw Error("cyclic_choice needs a nonzero generator");
  const std::size_t dim = v->dimension();
  ChoiceFunction eps = free_choice(std::move(v), {alpha}, {z});
  return SubgroupWithChoice{FgSubgroup(dim, {alpha}), std::move(eps), true, nullptr};
}

Extension::Canonical Extension::canonical_form(const GroupElement& g) const {
  auto w = extended.decompose(g);
  if (!w) throw DomainError(to_string(g) + " is outside the extended subgroup");
  const Integer r = w->back();
  const GroupElement base_part = g - gamma * r;
  if (!period) return Canonical{base_part, r};
  const Integer l = floor_div(r, *period);
  const Integer shift = *period * l;
  return Canonical{base_part + gamma * shift, r - shift};
}

SubgroupWithChoice extend_choice(const SubgroupWithChoice& base, const GroupElement& gamma,
                                 const RationalFunction& x_gamma) {
  const ValuationPtr& v = base.choice.valuation();
  if (base.subgroup.contains(gamma)) throw Error(to_string(gamma) + " already lies in the base subgroup");
  if (!base.certified_trivial) throw Error("extend_choice needs a certified-trivial base");
  if (x_gamma.is_zero() || v->value(x_gamma) != gamma)
    throw InvalidChoice("witness " + v->format(x_gamma) + " does not have value " + to_string(gamma));

  auto ext = std::make_shared<Extension>(Extension{base, base.subgroup.with_generator(gamma), gamma, x_gamma,
                                                   base.subgroup.min_multiple(gamma), RationalFunction(1), x_gamma});
  if (ext->period) {
    const Integer& n0 = *ext->period;
    if (!n0.fits_uint_p() || n0 > 1u << 16) throw Error("period " + to_string(n0) + " is too large");
    const unsigned n = static_cast<unsigned>(n0.get_ui());
    const RationalFunction x0 = base.choice(gamma * n0);
    const ResidueElement target = residue(v, x0 / x_gamma.pow(n));
    auto a = residue_nth_root(target, n);
    if (!a)
      throw RootNotFound("no root of order " + std::to_string(n) + " found for the residue of " + target.to_string() +
                         " while extending by " + to_string(gamma));
    ext->root = *a;
    ext->step = *a * x_gamma;
  }

  std::shared_ptr<const Extension> frozen = ext;
  FgSubgroup psi = ext->extended;
  auto defined = [psi](const GroupElement& g) { return psi.contains(g); };
  auto rule = [frozen](const GroupElement& g) {
    auto c = frozen->canonical_form(g);
    return frozen->base.choice(c.base_part) * frozen->step.pow(c.multiple.get_si());
  };
  ChoiceFunction eps = ChoiceFunction::from_rule(v, psi.generators(), DomainKind::group, defined, rule, true);
  return SubgroupWithChoice{std::move(psi), std::move(eps), true, std::move(frozen)};
}

SubgroupWithChoice extend_chain(SubgroupWithChoice base, const std::vector<ChainStep>& steps) {
  for (const auto& s : steps) base = extend_choice(base, s.gamma, s.witness);
  return base;
}

ChoiceFunction make_initial(const ChoiceFunction& eps) {
  const auto* table = eps.table();
  if (!table) throw Error("make_initial needs a table-backed choice function");
  const MonomialValuation& v = *eps.valuation();
  ChoiceFunction::Table initial;
  for (const auto& [g, f] : *table) initial.emplace(g, v.initial_fraction(f));
  return ChoiceFunction::from_table(eps.valuation(), std::move(initial), eps.generators(), eps.kind());
}

ForcedPower forced_power_check(const ChoiceFunction& eps, const GroupElement& alpha, unsigned n) {
  if (n == 0) throw Error("forced_power_check needs n >= 1");
  const RationalFunction base = eps(alpha);
  const RationalFunction power = eps(alpha * Integer(n));
  ForcedPower r;
  r.lhs = base.num().pow(n) * power.den();
  r.rhs = base.den().pow(n) * power.num();
  r.consistent = r.lhs == r.rhs;
  return r;
}

}  // namespace vgr
