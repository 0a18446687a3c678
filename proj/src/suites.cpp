#include "vgr/suites.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vgr {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("Rng::below(0)");
  return engine_() % n;
}

long Rng::between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

Rational Rng::nonzero_rational(long size) {
  long n = between(1, size);
  if (chance(50)) n = -n;
  Rational q(n, between(1, size));
  q.canonicalize();
  return q;
}

void CheckTally::record(bool holds, const std::function<std::string()>& describe) {
  if (holds) {
    ++passed;
    return;
  }
  if (failed == 0) first_failure = describe();
  ++failed;
}

void CheckTally::fail(const std::string& why) {
  if (failed == 0) first_failure = why;
  ++failed;
}

CheckTally& SuiteReport::check(const std::string& name) {
  for (auto& c : checks)
    if (c.name == name) return c;
  checks.push_back(CheckTally{name, 0, 0, {}, {}});
  return checks.back();
}

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.ok(); });
}

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.failed;
  return n;
}

std::size_t SuiteReport::samples() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed + c.failed;
  return n;
}

void SuiteReport::merge(const SuiteReport& other) {
  for (const auto& c : other.checks) {
    CheckTally& mine = check(c.name);
    if (mine.failed == 0 && c.failed) mine.first_failure = c.first_failure;
    mine.passed += c.passed;
    mine.failed += c.failed;
    if (mine.skip_reason.empty()) mine.skip_reason = c.skip_reason;
  }
}

std::string SuiteReport::format(bool machine) const {
  std::string out;
  if (machine) {
    out += "suite=" + suite + "\n";
    for (const auto& c : checks) {
      const std::string status = c.skipped() ? "skipped" : c.ok() ? "pass" : "fail";
      out += "check." + c.name + "=" + status + " passed=" + std::to_string(c.passed) +
             " failed=" + std::to_string(c.failed) + "\n";
      if (!c.ok()) out += "check." + c.name + ".first_failure=" + c.first_failure + "\n";
      if (c.skipped()) out += "check." + c.name + ".reason=" + c.skip_reason + "\n";
    }
    out += std::string("result=") + (ok() ? "pass" : "fail") + "\n";
    return out;
  }
  out += "suite " + suite + "\n";
  for (const auto& c : checks) {
    std::string line = "  " + c.name;
    line.resize(std::max<std::size_t>(line.size() + 1, 34), ' ');
    const std::string counts = std::to_string(c.passed) + "/" + std::to_string(c.passed + c.failed);
    if (c.skipped())
      line += "SKIPPED (" + c.skip_reason + ")";
    else if (c.ok())
      line += "PASS  " + counts;
    else
      line += "FAIL  " + counts + "  first failure: " + c.first_failure;
    out += line + "\n";
  }
  out += std::string("result: ") + (ok() ? "PASS" : "FAIL") + "\n";
  return out;
}

namespace {

// Degrees of height at most bound / 3 whose sums of up to three stay in the
// domain.
std::vector<GroupElement> safe_degrees(const ChoiceFunction& eps, unsigned bound) {
  std::vector<GroupElement> safe;
  for (const auto& d : eps.elements(std::max(1u, bound / 3))) {
    bool ok = eps.defined_at(d + d) && eps.defined_at(d + d + d);
    for (std::size_t i = 0; ok && i < safe.size(); ++i) {
      ok = eps.defined_at(d + safe[i]) && eps.defined_at(d + d + safe[i]) && eps.defined_at(d + safe[i] + safe[i]);
      for (std::size_t j = i; ok && j < safe.size(); ++j) ok = eps.defined_at(d + safe[i] + safe[j]);
    }
    if (ok) safe.push_back(d);
  }
  return safe;
}

template <class F>
void guarded(CheckTally& tally, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    tally.fail(std::string("exception: ") + e.what());
  }
}

}  // namespace

ResidueElement random_residue(Rng& rng, const TwistingTable& twist, const std::vector<GroupElement>& degrees) {
  const ChoiceFunction& eps = twist.choice();
  const ValuationPtr& v = eps.valuation();
  auto factor = [&]() -> ResidueElement {
    for (int tries = 0; tries < 8; ++tries) {
      const GroupElement& a = rng.pick(degrees);
      const GroupElement& b = rng.pick(degrees);
      if (!eps.defined_at(a + b)) continue;
      ResidueElement t = twist(a, b);
      return rng.chance(30) ? t.inverse() : t;
    }
    return ResidueElement::one(v);
  };
  auto monomial_term = [&] {
    ResidueElement r = ResidueElement::constant(v, rng.nonzero_rational());
    for (std::uint64_t k = rng.below(3); k > 0; --k) r = r * factor();
    return r;
  };
  ResidueElement r = monomial_term();
  if (rng.chance(25)) {
    ResidueElement s = r + monomial_term();
    if (!s.is_zero()) r = s;
  }
  return r;
}

TwistedRingElement random_twisted(Rng& rng, const TwistingTable& twist, const std::vector<GroupElement>& degrees,
                                  std::size_t max_terms) {
  TwistedRingElement e;
  const std::size_t n = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < n; ++i)
    e += TwistedRingElement::term(rng.pick(degrees), random_residue(rng, twist, degrees));
  return e;
}

SuiteReport ring_axioms_suite(const ChoiceFunction& eps, const SuiteOptions& opt) {
  SuiteReport report{"ring-axioms", {}};
  Rng rng(opt.seed);
  TwistingTable t(eps);
  const auto degrees = safe_degrees(eps, opt.bound);
  const TwistedRingElement one = TwistedRingElement::one(eps.valuation());
  for (const char* name : {"commutativity", "unit", "distributivity", "associativity", "additive-group"})
    report.check(name);

  for (std::size_t s = 0; s < opt.samples; ++s) {
    const auto a = random_twisted(rng, t, degrees);
    const auto b = random_twisted(rng, t, degrees);
    const auto c = random_twisted(rng, t, degrees);
    auto show = [&](std::initializer_list<const TwistedRingElement*> xs) {
      return [xs] {
        std::string d;
        char name = 'a';
        for (const auto* x : xs) d += std::string(d.empty() ? "" : ", ") + name++ + " = " + x->to_string();
        return d;
      };
    };
    guarded(report.check("commutativity"),
            [&] { report.check("commutativity").record(twisted_mul(t, a, b) == twisted_mul(t, b, a), show({&a, &b})); });
    guarded(report.check("unit"), [&] {
      report.check("unit").record(twisted_mul(t, one, a) == a && twisted_mul(t, a, one) == a, show({&a}));
    });
    guarded(report.check("distributivity"), [&] {
      report.check("distributivity")
          .record(twisted_mul(t, a, b + c) == twisted_mul(t, a, b) + twisted_mul(t, a, c), show({&a, &b, &c}));
    });
    guarded(report.check("associativity"), [&] {
      report.check("associativity")
          .record(twisted_mul(t, twisted_mul(t, a, b), c) == twisted_mul(t, a, twisted_mul(t, b, c)),
                  show({&a, &b, &c}));
    });
    guarded(report.check("additive-group"), [&] {
      report.check("additive-group")
          .record((a + -a).is_zero() && (a + b) + c == a + (b + c) && a + b == b + a, show({&a, &b, &c}));
    });
  }
  return report;
}

SuiteReport cocycle_suite(const ChoiceFunction& eps, const SuiteOptions& opt) {
  SuiteReport report{"cocycle", {}};
  Rng rng(opt.seed);
  TwistingTable t(eps);
  const auto degrees = safe_degrees(eps, opt.bound);
  const ValuationPtr& v = eps.valuation();
  const GroupElement zero = v->zero();
  for (const char* name : {"cocycle-identity", "symmetry", "unit-twisting", "single-term-associativity"})
    report.check(name);

  for (std::size_t s = 0; s < opt.samples; ++s) {
    const GroupElement a = rng.pick(degrees), b = rng.pick(degrees), c = rng.pick(degrees);
    auto show = [&] { return "a = " + to_string(a) + ", b = " + to_string(b) + ", c = " + to_string(c); };
    guarded(report.check("cocycle-identity"), [&] {
      report.check("cocycle-identity").record(t(a, b) * t(a + b, c) == t(a, b + c) * t(b, c), show);
    });
    guarded(report.check("symmetry"), [&] { report.check("symmetry").record(t(a, b) == t(b, a), show); });
    guarded(report.check("unit-twisting"),
            [&] { report.check("unit-twisting").record(t(zero, a).is_one() && t(a, zero).is_one(), show); });
    guarded(report.check("single-term-associativity"), [&] {
      const ResidueElement u = ResidueElement::one(v);
      const auto ta = TwistedRingElement::term(a, u), tb = TwistedRingElement::term(b, u),
                 tc = TwistedRingElement::term(c, u);
      const auto left = twisted_mul(t, twisted_mul(t, ta, tb), tc);
      const auto right = twisted_mul(t, ta, twisted_mul(t, tb, tc));
      const bool holds = left == TwistedRingElement::term(a + b + c, t(a, b) * t(a + b, c)) &&
                         right == TwistedRingElement::term(a + b + c, t(a, b + c) * t(b, c)) && left == right;
      report.check("single-term-associativity").record(holds, show);
    });
  }
  return report;
}

namespace {

// Random elements x of R with v(x) in the domain of the choice function.
class ElementSampler {
 public:
  ElementSampler(const GradedIsomorphism& iso, const std::vector<GroupElement>& degrees) : iso_(iso) {
    const MonomialValuation& v = *iso.algebra().valuation();
    const std::size_t k = v.variables().size();
    const Exponent top = k <= 3 ? 3 : 2;
    std::vector<Exponent> e(k, 0);
    while (true) {
      std::vector<Monomial::Entry> entries;
      for (std::size_t i = 0; i < k; ++i) entries.emplace_back(static_cast<Var>(i), e[i]);
      Monomial m(entries);
      pool_[v.value(m)].push_back(m);
      std::size_t i = 0;
      while (i < k && e[i] == top) e[i++] = 0;
      if (i == k) break;
      ++e[i];
    }
    for (const auto& d : degrees) {
      const bool by_monomial = pool_.count(d) > 0;
      const bool by_choice = iso.algebra().in_subring(iso.choice()(d));
      if (by_monomial || by_choice) degrees_.push_back(d);
    }
    if (degrees_.empty()) throw Error("no sampleable degree in the choice domain");
  }

  const std::vector<GroupElement>& degrees() const { return degrees_; }

  /// Terms of value strictly above `floor`, times `scale`, or zero.
  RationalFunction noise(Rng& rng, const GroupElement& floor, const RationalFunction& scale) {
    RationalFunction r;
    const GroupElement base = iso_.algebra().valuation()->value(scale);
    for (std::uint64_t n = 1 + rng.below(2); n > 0; --n) {
      auto it = pool_.upper_bound(floor - base);
      if (it == pool_.end()) break;
      std::advance(it, rng.below(std::min<std::size_t>(3, std::distance(it, pool_.end()))));
      r = r + RationalFunction(Polynomial::term(rng.nonzero_rational(), rng.pick(it->second))) * scale;
    }
    return r;
  }

  RationalFunction sample(Rng& rng, const GroupElement& degree) {
    const ValuationPtr& v = iso_.algebra().valuation();
    RationalFunction lead, scale(1);
    auto found = pool_.find(degree);
    if (found != pool_.end() && (rng.chance(60) || !iso_.algebra().in_subring(iso_.choice()(degree)))) {
      const auto& monos = found->second;
      const std::size_t i = rng.below(monos.size());
      lead = RationalFunction(Polynomial::term(rng.nonzero_rational(), monos[i]));
      const std::size_t j = rng.below(monos.size());
      if (j != i && rng.chance(40)) lead = lead + RationalFunction(Polynomial::term(rng.nonzero_rational(), monos[j]));
    } else {
      scale = iso_.choice()(degree);
      lead = scale * RationalFunction(rng.nonzero_rational());
    }
    if (lead.is_zero() || v->value(lead) != degree) lead = iso_.choice()(degree);
    if (rng.chance(60)) lead = lead + noise(rng, degree, scale);
    return lead;
  }

  RationalFunction sample(Rng& rng) { return sample(rng, rng.pick(degrees_)); }

 private:
  const GradedIsomorphism& iso_;
  std::map<GroupElement, std::vector<Monomial>> pool_;
  std::vector<GroupElement> degrees_;
};

}  // namespace

SuiteReport iso_suite(const GradedIsomorphism& iso, const SuiteOptions& opt) {
  SuiteReport report{"iso-verify", {}};
  Rng rng(opt.seed);
  const GradedAlgebra& A = iso.algebra();
  const ValuationPtr& v = A.valuation();
  const auto degrees = safe_degrees(iso.choice(), opt.bound);
  ElementSampler sampler(iso, degrees);
  const char* names[] = {"well-defined", "injective", "additivity-gains-value", "additivity-same-value",
                         "graded-sum", "multiplicativity", "degree", "round-trip-inverse-psi",
                         "round-trip-psi-inverse"};
  for (const char* n : names) report.check(n);
  if (!iso.has_lifting()) {
    report.check("round-trip-inverse-psi").skip_reason = "no lifting oracle declared";
    report.check("round-trip-psi-inverse").skip_reason = "no lifting oracle declared";
  }
  auto fmt = [&](const RationalFunction& f) { return v->format(f); };

  for (std::size_t s = 0; s < opt.samples; ++s) {
    const RationalFunction x = sampler.sample(rng);
    const GroupElement gx = v->value(x);
    const HomogeneousElement hx = A.in_v(x);

    // Pairs for well-definedness and injectivity.
    RationalFunction y;
    switch (rng.below(4)) {
      case 0: y = x + sampler.noise(rng, gx, RationalFunction(1)); break;
      case 1: {
        Rational c = rng.nonzero_rational();
        if (c == 1) c = 2;
        y = x * RationalFunction(c);
        break;
      }
      case 2: y = sampler.sample(rng, gx); break;
      default: y = sampler.sample(rng); break;
    }
    if (y.is_zero()) y = x;
    guarded(report.check("well-defined"), [&] {
      const bool eq = v->in_eq(x, y);
      const bool psi_eq = iso.psi(hx) == iso.psi(A.in_v(y));
      report.check("well-defined").record(!eq || psi_eq, [&] { return "x = " + fmt(x) + ", y = " + fmt(y); });
      report.check("injective").record(!psi_eq || eq, [&] { return "x = " + fmt(x) + ", y = " + fmt(y); });
    });

    // Additivity where the sum gains value.
    guarded(report.check("additivity-gains-value"), [&] {
      RationalFunction n = sampler.noise(rng, gx, RationalFunction(1));
      RationalFunction z = -x + n;
      if (z.is_zero() || v->value(z) != gx) z = -x;
      const RationalFunction sum = x + z;
      const bool gains = sum.is_zero() || v->value(sum) > gx;
      const auto lhs = iso.psi(A.add(hx, A.in_v(z)));
      report.check("additivity-gains-value").record(gains && lhs.is_zero() && lhs == iso.psi(hx) + iso.psi(A.in_v(z)),
                                                    [&] { return "x = " + fmt(x) + ", y = " + fmt(z); });
    });

    // Additivity where the sum keeps the value.
    guarded(report.check("additivity-same-value"), [&] {
      RationalFunction z = rng.chance(50) ? sampler.sample(rng, gx) : x * RationalFunction(rng.nonzero_rational());
      const RationalFunction sum = x + z;
      if (sum.is_zero() || v->value(sum) != gx) return;
      const auto expected = iso.psi(hx) + iso.psi(A.in_v(z));
      report.check("additivity-same-value").record(
          iso.psi(A.in_v(sum)) == expected && iso.psi(A.add(hx, A.in_v(z))) == expected,
          [&] { return "x = " + fmt(x) + ", y = " + fmt(z); });
    });

    // psi on a graded element with several components.
    guarded(report.check("graded-sum"), [&] {
      const RationalFunction z = sampler.sample(rng);
      const GradedElement g = A.add(A.lift(hx), A.lift(A.in_v(z)));
      TwistedRingElement expected;
      for (const auto& [d, h] : g.components()) expected += iso.psi(h);
      const auto total = iso.psi(g);
      report.check("graded-sum").record(total == expected && total == iso.psi(hx) + iso.psi(A.in_v(z)),
                                        [&] { return "x = " + fmt(x) + ", y = " + fmt(z); });
    });

    // Multiplicativity into the twisted ring.
    guarded(report.check("multiplicativity"), [&] {
      const RationalFunction z = sampler.sample(rng);
      const HomogeneousElement hz = A.in_v(z);
      const auto product = twisted_mul(iso.twisting(), iso.psi(hx), iso.psi(hz));
      report.check("multiplicativity")
          .record(iso.psi(A.in_v(x * z)) == product && iso.psi(A.mul(hx, hz)) == product,
                  [&] { return "x = " + fmt(x) + ", y = " + fmt(z); });
    });

    guarded(report.check("degree"), [&] {
      const auto p = iso.psi(hx);
      report.check("degree").record(p.size() == 1 && p.terms().begin()->first == gx,
                                    [&] { return "x = " + fmt(x); });
    });

    if (iso.has_lifting()) {
      guarded(report.check("round-trip-inverse-psi"), [&] {
        const GradedElement back = iso.psi_inverse(iso.psi(hx));
        report.check("round-trip-inverse-psi").record(A.equal(back, A.lift(hx)), [&] { return "x = " + fmt(x); });
      });
      guarded(report.check("round-trip-psi-inverse"), [&] {
        const GroupElement& d = rng.pick(sampler.degrees());
        const ResidueElement c = ResidueElement::constant(v, rng.nonzero_rational());
        const auto term = TwistedRingElement::term(d, c);
        report.check("round-trip-psi-inverse").record(iso.psi(iso.psi_inverse(term)) == term, [&] {
          return "term = " + term.to_string();
        });
      });
    }
  }
  return report;
}

SuiteReport triviality_agreement(const ChoiceFunction& eps, unsigned bound, const std::string& label) {
  SuiteReport report{"triviality-agreement", {}};
  guarded(report.check("agreement"), [&] {
    const TrivialityVerdict a = is_trivial(eps, bound);
    const TrivialityVerdict b = semigroup_hom_check(eps, bound);
    report.check("agreement").record(a.trivial == b.trivial && a.counterexample == b.counterexample, [&] {
      return label + ": is_trivial=" + (a.trivial ? "true" : "false") +
             " semigroup_hom_check=" + (b.trivial ? "true" : "false");
    });
  });
  return report;
}

RandomSetup random_choice_setup(Rng& rng, unsigned height) {
  static const char* weight_pool[] = {"1/2", "1/3", "1", "2/3", "1/4", "3/2", "2"};
  static const char* name_pool[] = {"x", "y", "z"};
  const std::size_t k = 2 + rng.below(2);
  std::vector<std::string> names;
  std::vector<GroupElement> weights;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(name_pool[i]);
    weights.push_back(parse_group_element(weight_pool[rng.below(7)]));
  }
  auto v = std::make_shared<const MonomialValuation>(VariableSet(names), weights);

  auto random_monomial = [&] {
    std::vector<Monomial::Entry> e;
    for (std::size_t i = 0; i < k; ++i) e.emplace_back(static_cast<Var>(i), static_cast<Exponent>(rng.below(3)));
    Monomial m(e);
    return m.is_one() ? Monomial::variable(static_cast<Var>(rng.below(k))) : m;
  };

  static const char* variants[] = {"cyclic", "cyclic-noise", "scaled", "first-path", "unit-twisted"};
  const std::size_t variant = rng.below(5);
  const std::size_t gen_count = variant < 2 ? 1 : 1 + rng.below(3);
  std::vector<GroupElement> gens;
  std::vector<Monomial> witnesses;
  for (std::size_t i = 0; i < gen_count; ++i) {
    Monomial m = random_monomial();
    GroupElement g = v->value(m);
    if (std::find(gens.begin(), gens.end(), g) != gens.end()) continue;
    gens.push_back(g);
    witnesses.push_back(m);
  }

  // A value-zero monomial quotient that is not constant, if one exists.
  std::optional<RationalFunction> unit;
  for (int tries = 0; tries < 40 && !unit; ++tries) {
    Monomial a = random_monomial(), b = random_monomial();
    if (!(a == b) && v->value(a) == v->value(b))
      unit = RationalFunction(Polynomial::term(1, a), Polynomial::term(1, b));
  }

  ChoiceFunction::Table table;
  table.emplace(v->zero(), RationalFunction(1));
  std::vector<GroupElement> frontier{v->zero()};
  std::map<GroupElement, Monomial> path{{v->zero(), Monomial()}};
  for (unsigned h = 0; h < height; ++h) {
    std::vector<GroupElement> next;
    for (const auto& f : frontier)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        GroupElement g = f + gens[i];
        if (path.count(g)) continue;
        path.emplace(g, path.at(f) * witnesses[i]);
        next.push_back(g);
      }
    frontier = std::move(next);
  }
  for (const auto& [g, m] : path) {
    if (g.is_zero()) continue;
    RationalFunction value(Polynomial::term(1, m));
    switch (variant) {
      case 1: {
        Monomial bump = random_monomial();
        value = value * RationalFunction(Polynomial(1) + Polynomial::term(rng.nonzero_rational(), bump));
        break;
      }
      case 2: value = value * RationalFunction(rng.nonzero_rational()); break;
      case 4:
        if (unit && rng.chance(50)) value = value * unit->pow(rng.between(-2, 2));
        break;
      default: break;
    }
    table.emplace(g, value);
  }

  std::string label = std::string(variants[variant]) + " weights=(";
  for (std::size_t i = 0; i < k; ++i) label += (i ? "," : "") + to_string(weights[i]);
  label += ") gens=(";
  for (std::size_t i = 0; i < gens.size(); ++i) label += (i ? "," : "") + to_string(gens[i]);
  label += ")";
  return RandomSetup{label, ChoiceFunction::from_table(v, std::move(table), gens, DomainKind::semigroup)};
}

}  // namespace vgr
