#include "vgr/ordgroup.hpp"

#include <cctype>
#include <utility>

namespace vgr {

namespace {

void require_same_dimension(const GroupElement& a, const GroupElement& b) {
  if (a.dimension() != b.dimension())
    throw DimensionMismatch("group elements of dimension " + std::to_string(a.dimension()) +
                            " and " + std::to_string(b.dimension()));
}

}  // namespace

GroupElement::GroupElement(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
}

GroupElement GroupElement::zero(std::size_t dimension) {
  return GroupElement(std::vector<Rational>(dimension, Rational(0)));
}

GroupElement GroupElement::scalar(const Rational& q) { return GroupElement({q}); }

bool GroupElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  GroupElement r = *this;
  r += other;
  return r;
}

GroupElement& GroupElement::operator+=(const GroupElement& other) {
  require_same_dimension(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

GroupElement GroupElement::operator-(const GroupElement& other) const {
  require_same_dimension(*this, other);
  GroupElement r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= other.coords_[i];
  return r;
}

GroupElement GroupElement::operator-() const {
  GroupElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

GroupElement GroupElement::operator*(const Integer& n) const {
  GroupElement r = *this;
  for (auto& c : r.coords_) c *= n;
  return r;
}

GroupElement GroupElement::scaled(const Rational& q) const {
  GroupElement r = *this;
  for (auto& c : r.coords_) c *= q;
  return r;
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  require_same_dimension(a, b);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  require_same_dimension(a, b);
  return a.coords_ == b.coords_;
}

std::string to_string(const GroupElement& g) {
  if (g.dimension() == 1) return to_string(g[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    if (i) s += ",";
    s += to_string(g[i]);
  }
  return s + ")";
}

GroupElement parse_group_element(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view body = text.substr(b, e - b);
  if (body.empty()) throw ParseError("empty group element");
  if (body.front() == '(') {
    if (body.back() != ')') throw ParseError("unbalanced group element: '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    coords.push_back(parse_rational(body.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return GroupElement(std::move(coords));
}

FgSubgroup::FgSubgroup(std::size_t dimension, std::vector<GroupElement> generators)
    : dimension_(dimension), generators_(std::move(generators)) {
  if (dimension_ == 0) throw Error("subgroup of a zero-dimensional group");
  for (const auto& g : generators_)
    if (g.dimension() != dimension_)
      throw DimensionMismatch("generator " + to_string(g) + " has the wrong dimension");

  for (const auto& g : generators_)
    for (const auto& c : g.coords()) scale_ = lcm(scale_, c.get_den());

  const std::size_t k = generators_.size();
  std::vector<std::vector<Integer>> cols(k, std::vector<Integer>(dimension_));
  std::vector<std::vector<Integer>> trans(k, std::vector<Integer>(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < dimension_; ++i) {
      Rational s = generators_[j][i] * scale_;
      cols[j][i] = s.get_num();
    }
    trans[j][j] = 1;
  }

  auto combine = [](std::vector<Integer>& x, std::vector<Integer>& y, const Integer& s,
                    const Integer& t, const Integer& u, const Integer& w) {
    // (x, y) <- (s*x + t*y, u*x + w*y)
    for (std::size_t r = 0; r < x.size(); ++r) {
      Integer nx = s * x[r] + t * y[r];
      Integer ny = u * x[r] + w * y[r];
      x[r] = std::move(nx);
      y[r] = std::move(ny);
    }
  };

  std::size_t c = 0;
  for (std::size_t row = 0; row < dimension_ && c < k; ++row) {
    for (std::size_t j = c + 1; j < k; ++j) {
      if (cols[j][row] == 0) continue;
      if (cols[c][row] == 0) {
        std::swap(cols[c], cols[j]);
        std::swap(trans[c], trans[j]);
        continue;
      }
      Integer a = cols[c][row], b = cols[j][row], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer u = -b / g, w = a / g;
      combine(cols[c], cols[j], s, t, u, w);
      combine(trans[c], trans[j], s, t, u, w);
    }
    if (cols[c][row] == 0) continue;
    if (cols[c][row] < 0) {
      for (auto& x : cols[c]) x = -x;
      for (auto& x : trans[c]) x = -x;
    }
    pivots_.push_back(row);
    ++c;
  }
  cols.resize(c);
  trans.resize(c);
  basis_ = std::move(cols);
  transform_ = std::move(trans);
}

std::optional<std::vector<Rational>> FgSubgroup::echelon_coordinates(const GroupElement& a) const {
  if (a.dimension() != dimension_)
    throw DimensionMismatch("element " + to_string(a) + " has the wrong dimension");
  std::vector<Rational> rest(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) rest[i] = a[i] * scale_;
  std::vector<Rational> y(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    const std::size_t p = pivots_[j];
    y[j] = rest[p] / Rational(basis_[j][p]);
    for (std::size_t i = p; i < dimension_; ++i) rest[i] -= y[j] * basis_[j][i];
  }
  for (const auto& r : rest)
    if (r != 0) return std::nullopt;
  return y;
}

std::optional<std::vector<Integer>> FgSubgroup::decompose(const GroupElement& a) const {
  auto y = echelon_coordinates(a);
  if (!y) return std::nullopt;
  std::vector<Integer> w(generators_.size(), 0);
  for (std::size_t j = 0; j < y->size(); ++j) {
    const Rational& yj = (*y)[j];
    if (yj.get_den() != 1) return std::nullopt;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += yj.get_num() * transform_[j][i];
  }
  return w;
}

GroupElement FgSubgroup::recombine(std::span<const Integer> coefficients) const {
  if (coefficients.size() != generators_.size())
    throw Error("recombine: expected " + std::to_string(generators_.size()) + " coefficients");
  GroupElement r = GroupElement::zero(dimension_);
  for (std::size_t i = 0; i < coefficients.size(); ++i) r += generators_[i] * coefficients[i];
  return r;
}

std::optional<Integer> FgSubgroup::min_multiple(const GroupElement& g, std::uint64_t bound) const {
  if (contains(g)) throw Error("min_multiple: " + to_string(g) + " already lies in the subgroup");
  auto y = echelon_coordinates(g);
  if (!y) return std::nullopt;  // <g> meets the subgroup only in 0
  Integer n = 1;
  for (const auto& c : *y) n = lcm(n, c.get_den());
  if (dimension_ > 1 && n > bound) return std::nullopt;
  return n;
}

FgSubgroup FgSubgroup::with_generator(const GroupElement& extra) const {
  auto gens = generators_;
  gens.push_back(extra);
  return FgSubgroup(dimension_, std::move(gens));
}

}  // namespace vgr
