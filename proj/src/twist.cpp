#include "vgr/twist.hpp"

#include <mutex>
#include <set>

namespace vgr {

struct ChoiceFunction::State {
  ValuationPtr valuation;
  std::vector<GroupElement> generators;
  DomainKind kind = DomainKind::semigroup;
  bool certified = false;
  std::optional<Table> table;
  Membership defined;
  Rule rule;

  mutable std::shared_mutex mutex;
  mutable std::map<GroupElement, RationalFunction> memo;
};

namespace {

void check_value(const MonomialValuation& v, const GroupElement& g, const RationalFunction& f) {
  if (f.is_zero()) throw InvalidChoice("choice function maps " + to_string(g) + " to zero");
  const GroupElement actual = v.value(f);
  if (actual != g)
    throw InvalidChoice("choice function maps " + to_string(g) + " to " + v.format(f) + " of value " +
                        to_string(actual));
  if (g.is_zero() && !(f == RationalFunction(1)))
    throw InvalidChoice("choice function must map 0 to 1, got " + v.format(f));
}

}  // namespace

ChoiceFunction ChoiceFunction::from_table(ValuationPtr v, Table table, std::vector<GroupElement> generators,
                                          DomainKind kind) {
  if (!v) throw Error("choice function without a valuation");
  const GroupElement zero = v->zero();
  table.try_emplace(zero, RationalFunction(1));
  for (const auto& [g, f] : table) check_value(*v, g, f);
  if (generators.empty())
    for (const auto& [g, f] : table)
      if (!g.is_zero()) generators.push_back(g);
  for (const auto& g : generators)
    if (g.dimension() != v->dimension()) throw DimensionMismatch("generator " + to_string(g));

  auto s = std::make_shared<State>();
  s->valuation = std::move(v);
  s->generators = std::move(generators);
  s->kind = kind;
  s->table = std::move(table);
  return ChoiceFunction(std::move(s));
}

ChoiceFunction ChoiceFunction::from_rule(ValuationPtr v, std::vector<GroupElement> generators, DomainKind kind,
                                         Membership defined, Rule rule, bool certified_trivial) {
  if (!v) throw Error("choice function without a valuation");
  for (const auto& g : generators)
    if (g.dimension() != v->dimension()) throw DimensionMismatch("generator " + to_string(g));
  auto s = std::make_shared<State>();
  s->valuation = std::move(v);
  s->generators = std::move(generators);
  s->kind = kind;
  s->certified = certified_trivial;
  s->defined = std::move(defined);
  s->rule = std::move(rule);
  return ChoiceFunction(std::move(s));
}

const ValuationPtr& ChoiceFunction::valuation() const { return state_->valuation; }
const std::vector<GroupElement>& ChoiceFunction::generators() const { return state_->generators; }
DomainKind ChoiceFunction::kind() const { return state_->kind; }
bool ChoiceFunction::certified_trivial() const { return state_->certified; }
const ChoiceFunction::Table* ChoiceFunction::table() const {
  return state_->table ? &*state_->table : nullptr;
}

bool ChoiceFunction::defined_at(const GroupElement& g) const {
  if (g.dimension() != state_->valuation->dimension()) return false;
  if (state_->table) return state_->table->count(g) > 0;
  return state_->defined(g);
}

RationalFunction ChoiceFunction::operator()(const GroupElement& g) const {
  if (state_->table) {
    auto it = state_->table->find(g);
    if (it == state_->table->end()) throw DomainError(to_string(g) + " is outside the choice table");
    return it->second;
  }
  {
    std::shared_lock lock(state_->mutex);
    auto it = state_->memo.find(g);
    if (it != state_->memo.end()) return it->second;
  }
  if (!state_->defined(g)) throw DomainError(to_string(g) + " is outside the domain of the choice function");
  RationalFunction f = state_->rule(g);
  check_value(*state_->valuation, g, f);
  std::unique_lock lock(state_->mutex);
  return state_->memo.try_emplace(g, std::move(f)).first->second;
}

std::vector<GroupElement> ChoiceFunction::elements(unsigned height) const {
  std::set<GroupElement> seen{state_->valuation->zero()};
  std::vector<GroupElement> frontier{state_->valuation->zero()};
  std::vector<GroupElement> steps = state_->generators;
  if (state_->kind == DomainKind::group)
    for (const auto& g : state_->generators) steps.push_back(-g);
  for (unsigned h = 0; h < height; ++h) {
    std::vector<GroupElement> next;
    for (const auto& f : frontier)
      for (const auto& s : steps) {
        GroupElement e = f + s;
        if (seen.insert(e).second) next.push_back(std::move(e));
      }
    frontier = std::move(next);
  }
  std::vector<GroupElement> out;
  for (const auto& e : seen)
    if (defined_at(e)) out.push_back(e);
  return out;
}

ResidueElement twisting(const ChoiceFunction& eps, const GroupElement& a, const GroupElement& b) {
  RationalFunction q = eps(a) * eps(b) / eps(a + b);
  return residue(eps.valuation(), q);
}

ResidueElement TwistingTable::operator()(const GroupElement& a, const GroupElement& b) const {
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  ResidueElement r = twisting(eps_, key.first, key.second);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(std::move(key), std::move(r)).first->second;
}

std::size_t TwistingTable::cached() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

// ----------------------------------------------------------- twisted ring

TwistedRingElement TwistedRingElement::term(const GroupElement& degree, const ResidueElement& coefficient) {
  TwistedRingElement r;
  r.add_term(degree, coefficient);
  return r;
}

TwistedRingElement TwistedRingElement::one(const ValuationPtr& v) {
  return term(v->zero(), ResidueElement::one(v));
}

void TwistedRingElement::add_term(const GroupElement& degree, const ResidueElement& coefficient) {
  if (coefficient.is_zero()) return;
  auto it = terms_.find(degree);
  if (it == terms_.end()) {
    terms_.emplace(degree, coefficient);
    return;
  }
  ResidueElement sum = it->second + coefficient;
  if (sum.is_zero())
    terms_.erase(it);
  else
    it->second = std::move(sum);
}

TwistedRingElement& TwistedRingElement::operator+=(const TwistedRingElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

TwistedRingElement TwistedRingElement::operator+(const TwistedRingElement& o) const {
  TwistedRingElement r = *this;
  r += o;
  return r;
}

TwistedRingElement TwistedRingElement::operator-() const {
  TwistedRingElement r;
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
  return r;
}

TwistedRingElement TwistedRingElement::operator-(const TwistedRingElement& o) const { return *this + (-o); }

TwistedRingElement TwistedRingElement::scaled(const ResidueElement& c) const {
  TwistedRingElement r;
  for (const auto& [g, a] : terms_) r.add_term(g, a * c);
  return r;
}

bool operator==(const TwistedRingElement& a, const TwistedRingElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto x = a.terms_.begin(), y = b.terms_.begin(); x != a.terms_.end(); ++x, ++y)
    if (x->first != y->first || !(x->second == y->second)) return false;
  return true;
}

std::string TwistedRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [g, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*t^" + vgr::to_string(g);
  }
  return s;
}

TwistedRingElement twisted_mul(const TwistingTable& twist, const TwistedRingElement& a,
                               const TwistedRingElement& b) {
  TwistedRingElement r;
  for (const auto& [ga, ca] : a.terms())
    for (const auto& [gb, cb] : b.terms())
      r += TwistedRingElement::term(ga + gb, ca * cb * twist(ga, gb));
  return r;
}

// ------------------------------------------------------ triviality checks

namespace {

template <typename PairCheck>
TrivialityVerdict scan_pairs(const ChoiceFunction& eps, unsigned bound, PairCheck&& holds) {
  TrivialityVerdict verdict;
  verdict.bound = bound;
  verdict.certified = eps.certified_trivial();
  const auto elems = eps.elements(bound);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j) {
      const GroupElement sum = elems[i] + elems[j];
      if (!eps.defined_at(sum)) continue;
      ++verdict.pairs_checked;
      if (!holds(elems[i], elems[j])) {
        verdict.trivial = false;
        verdict.certified = false;
        verdict.counterexample = std::make_pair(elems[i], elems[j]);
        return verdict;
      }
    }
  return verdict;
}

}  // namespace

TrivialityVerdict is_trivial(const TwistingTable& twist, unsigned bound) {
  return scan_pairs(twist.choice(), bound,
                    [&](const GroupElement& a, const GroupElement& b) { return twist(a, b).is_one(); });
}

TrivialityVerdict is_trivial(const ChoiceFunction& eps, unsigned bound) {
  TwistingTable twist(eps);
  return is_trivial(twist, bound);
}

TrivialityVerdict semigroup_hom_check(const ChoiceFunction& eps, unsigned bound) {
  const MonomialValuation& v = *eps.valuation();
  return scan_pairs(eps, bound, [&](const GroupElement& a, const GroupElement& b) {
    return v.in_eq(eps(a) * eps(b), eps(a + b));
  });
}

}  // namespace vgr
