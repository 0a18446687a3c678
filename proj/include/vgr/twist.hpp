#pragma once

// Choice functions, their twistings, and the twisted semigroup ring
// Kv[t^S]_eps with t^a x t^b = twist(a, b) t^(a+b).

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "vgr/ordgroup.hpp"
#include "vgr/valuation.hpp"

namespace vgr {

/// A degree outside the domain of a choice function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A choice function violating v(eps(g)) = g or eps(0) = 1.
class InvalidChoice : public Error {
 public:
  using Error::Error;
};

enum class DomainKind { semigroup, group };

/// Right inverse eps of v on a finitely generated sub-semigroup (or
/// subgroup) of the value group, with eps(0) = 1.
///
/// Table-backed functions are partial: evaluating a degree missing from the
/// table is a DomainError. Rule-backed functions evaluate lazily; every
/// value is checked against v before it is returned and then memoized.
/// Copies share the memo, which is safe under concurrent use.
class ChoiceFunction {
 public:
  using Table = std::map<GroupElement, RationalFunction>;
  using Rule = std::function<RationalFunction(const GroupElement&)>;
  using Membership = std::function<bool(const GroupElement&)>;

  /// Missing eps(0) is filled in with 1. Generators default to the nonzero
  /// table keys.
  static ChoiceFunction from_table(ValuationPtr v, Table table, std::vector<GroupElement> generators = {},
                                   DomainKind kind = DomainKind::semigroup);
  static ChoiceFunction from_rule(ValuationPtr v, std::vector<GroupElement> generators, DomainKind kind,
                                  Membership defined, Rule rule, bool certified_trivial = false);

  const ValuationPtr& valuation() const;
  const std::vector<GroupElement>& generators() const;
  DomainKind kind() const;
  /// eps(a) eps(b) = eps(a + b) holds by construction, not by checking.
  bool certified_trivial() const;
  /// nullptr for rule-backed functions.
  const Table* table() const;

  bool defined_at(const GroupElement& g) const;
  RationalFunction operator()(const GroupElement& g) const;

  /// Domain elements that are combinations of the generators of height
  /// (sum of absolute coefficients) at most `height`, ascending.
  std::vector<GroupElement> elements(unsigned height) const;

 private:
  struct State;
  explicit ChoiceFunction(std::shared_ptr<State> s) : state_(std::move(s)) {}
  std::shared_ptr<State> state_;
};

/// Residue of eps(a) eps(b) / eps(a + b). Throws DomainError if a, b or
/// a + b lies outside the domain.
ResidueElement twisting(const ChoiceFunction& eps, const GroupElement& a, const GroupElement& b);

/// Memoized twisting values, keyed by unordered pairs.
class TwistingTable {
 public:
  explicit TwistingTable(ChoiceFunction eps) : eps_(std::move(eps)) {}
  TwistingTable(const TwistingTable&) = delete;
  TwistingTable& operator=(const TwistingTable&) = delete;

  const ChoiceFunction& choice() const { return eps_; }
  ResidueElement operator()(const GroupElement& a, const GroupElement& b) const;
  std::size_t cached() const;

 private:
  ChoiceFunction eps_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<GroupElement, GroupElement>, ResidueElement> memo_;
};

/// Finite formal sum of a_i t^(g_i) with nonzero residue coefficients.
class TwistedRingElement {
 public:
  using Terms = std::map<GroupElement, ResidueElement>;

  TwistedRingElement() = default;
  static TwistedRingElement term(const GroupElement& degree, const ResidueElement& coefficient);
  static TwistedRingElement one(const ValuationPtr& v);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  TwistedRingElement operator+(const TwistedRingElement& o) const;
  TwistedRingElement operator-(const TwistedRingElement& o) const;
  TwistedRingElement operator-() const;
  TwistedRingElement& operator+=(const TwistedRingElement& o);
  /// Multiplies every coefficient by c.
  TwistedRingElement scaled(const ResidueElement& c) const;

  friend bool operator==(const TwistedRingElement& a, const TwistedRingElement& b);

  std::string to_string() const;

 private:
  void add_term(const GroupElement& degree, const ResidueElement& coefficient);
  Terms terms_;
};

/// Bilinear extension of t^a x t^b = twist(a, b) t^(a + b).
TwistedRingElement twisted_mul(const TwistingTable& twist, const TwistedRingElement& a,
                               const TwistedRingElement& b);

struct TrivialityVerdict {
  bool trivial = true;
  std::optional<std::pair<GroupElement, GroupElement>> counterexample;
  std::size_t pairs_checked = 0;
  unsigned bound = 0;
  /// Triviality also holds beyond the bound, by construction.
  bool certified = false;
};

/// Checks twist(a, b) == 1 over all pairs of domain elements of height at
/// most `bound`; reports the first failing pair.
TrivialityVerdict is_trivial(const TwistingTable& twist, unsigned bound = 6);
TrivialityVerdict is_trivial(const ChoiceFunction& eps, unsigned bound = 6);

/// Checks in_v(eps(a + b)) == in_v(eps(a)) in_v(eps(b)) over the same pairs
/// and in the same order as is_trivial.
TrivialityVerdict semigroup_hom_check(const ChoiceFunction& eps, unsigned bound = 6);

}  // namespace vgr
