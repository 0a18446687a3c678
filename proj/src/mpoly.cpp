#include "vgr/mpoly.hpp"

#include <algorithm>
#include <set>

namespace vgr {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [v, e] : entries) {
    if (e == 0) continue;
    if (!entries_.empty() && entries_.back().first == v)
      entries_.back().second += e;
    else
      entries_.emplace_back(v, e);
  }
}

Monomial Monomial::variable(Var v, Exponent e) { return Monomial({{v, e}}); }

Exponent Monomial::exponent(Var v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{v, 0});
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin(), b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      r.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      r.entries_.push_back(*b++);
    } else {
      r.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : entries_)
    if (other.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw Error("monomial division is not exact");
  Monomial r;
  for (const auto& [v, e] : entries_) {
    Exponent d = e - divisor.exponent(v);
    if (d) r.entries_.emplace_back(v, d);
  }
  return r;
}

Monomial Monomial::pow(Exponent n) const {
  Monomial r;
  if (n == 0) return r;
  r.entries_ = entries_;
  for (auto& [v, e] : r.entries_) e *= n;
  return r;
}

std::optional<Monomial> Monomial::root(Exponent n) const {
  Monomial r;
  for (const auto& [v, e] : entries_) {
    if (e % n) return std::nullopt;
    r.entries_.emplace_back(v, e / n);
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (const auto& [v, e] : a.entries_) {
    Exponent m = std::min(e, b.exponent(v));
    if (m) r.entries_.emplace_back(v, m);
  }
  return r;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  auto x = a.entries().begin(), y = b.entries().begin();
  const auto xe = a.entries().end(), ye = b.entries().end();
  for (; x != xe && y != ye; ++x, ++y) {
    if (x->first != y->first) return x->first < y->first ? 1 : -1;
    if (x->second != y->second) return x->second > y->second ? 1 : -1;
  }
  if (x != xe) return 1;
  if (y != ye) return -1;
  return 0;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

Polynomial Polynomial::variable(Var v) { return term(1, Monomial::variable(v)); }

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw ZeroInput("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw ZeroInput("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

std::uint64_t Polynomial::total_degree() const {
  if (terms_.empty()) throw ZeroInput("degree of the zero polynomial");
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Monomial Polynomial::content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    g = Monomial::gcd(g, m);
    if (g.is_one()) break;
  }
  return g;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial();
  Polynomial r = *this;
  for (auto& [m, k] : r.terms_) k *= c;
  return r;
}

Polynomial Polynomial::times(const Rational& c, const Monomial& mono) const {
  Polynomial r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, k * c);
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1), base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::divide_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial r;
  for (const auto& [t, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), t / m, c);
  return r;
}

Polynomial Polynomial::filter(const std::function<bool(const Monomial&)>& pred) const {
  Polynomial r;
  for (const auto& [m, c] : terms_)
    if (pred(m)) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

std::uint64_t total_degree(const Polynomial& f) { return f.total_degree(); }

std::optional<Polynomial> nth_root(const Polynomial& f, unsigned n) {
  if (n == 0) throw Error("nth_root: n must be positive");
  if (n == 1 || f.is_zero()) return f;

  const std::uint64_t degree = f.total_degree();
  if (degree % n) return std::nullopt;
  const std::uint64_t root_degree = degree / n;

  auto lead_coeff = exact_root(f.leading_coefficient(), n);
  auto lead_mono = f.leading_monomial().root(n);
  if (!lead_coeff || !lead_mono) return std::nullopt;

  std::set<Var> vars;
  for (const auto& [m, c] : f.terms())
    for (const auto& [v, e] : m.entries()) vars.insert(v);

  // Each further term t of the root satisfies LT(f - g^n) = n * LT(g)^(n-1) * t.
  Rational divisor_coeff = n;
  for (unsigned i = 1; i < n; ++i) divisor_coeff *= *lead_coeff;
  const Monomial divisor_mono = lead_mono->pow(n - 1);

  Polynomial g = Polynomial::term(*lead_coeff, *lead_mono);
  Monomial last = *lead_mono;
  while (true) {
    Polynomial rest = f - g.pow(n);
    if (rest.is_zero()) return g;
    const Monomial& m = rest.leading_monomial();
    if (!divisor_mono.divides(m)) return std::nullopt;
    Monomial t = m / divisor_mono;
    if (lex_compare(t, last) >= 0 || t.degree() > root_degree) return std::nullopt;
    for (const auto& [v, e] : t.entries())
      if (!vars.count(v)) return std::nullopt;
    g += Polynomial::term(rest.leading_coefficient() / divisor_coeff, t);
    last = t;
  }
}

// -------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw ZeroInput("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Monomial g = Monomial::gcd(num_.content(), den_.content());
  if (!g.is_one()) {
    num_ = num_.divide_monomial(g);
    den_ = den_.divide_monomial(g);
  }
  const Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

std::optional<Rational> RationalFunction::constant_value() const {
  if (!den_.is_constant()) return std::nullopt;
  return num_.constant_value();
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw ZeroInput("division by the zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ZeroInput("inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long n) const {
  if (n >= 0) return RationalFunction(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
  return inverse().pow(-n);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::uint64_t total_degree(const RationalFunction& f) {
  if (f.is_zero()) throw ZeroInput("degree of the zero rational function");
  return std::max(f.num().total_degree(), f.den().total_degree());
}

bool may_share_nonmonomial_factor(const RationalFunction& f) {
  return f.num().term_count() > 1 && f.den().term_count() > 1;
}

std::optional<RationalFunction> nth_root(const RationalFunction& f, unsigned n) {
  auto num = nth_root(f.num(), n);
  if (!num) return std::nullopt;
  auto den = nth_root(f.den(), n);
  if (!den) return std::nullopt;
  return RationalFunction(*num, *den);
}

}  // namespace vgr
