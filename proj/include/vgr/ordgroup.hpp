#pragma once

// Ordered abelian groups hosting value groups: subgroups of Q^d under the
// lexicographic order, and finitely generated subgroups with exact
// membership and integer decomposition.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vgr/rational.hpp"

namespace vgr {

/// An element of Q^d, ordered lexicographically.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Rational> coords);

  static GroupElement zero(std::size_t dimension);
  /// Element of the rank-one group Q.
  static GroupElement scalar(const Rational& q);

  std::size_t dimension() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& other);
  GroupElement operator*(const Integer& n) const;
  GroupElement scaled(const Rational& q) const;

  // Both throw DimensionMismatch on elements of different dimension.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b);

 private:
  std::vector<Rational> coords_;
};

inline std::strong_ordering cmp(const GroupElement& a, const GroupElement& b) { return a <=> b; }

/// "1/2" for rank one, "(1,0)" otherwise.
std::string to_string(const GroupElement& g);
/// Accepts "1/2", "(1/2)", "(1, -3/4, 0)".
GroupElement parse_group_element(std::string_view text);

/// Subgroup of Q^d generated by finitely many elements.
///
/// Generators are scaled by their common denominator and brought to column
/// echelon form by unimodular column operations, which yields a Z-basis of
/// the lattice together with the transform back to the original generators.
class FgSubgroup {
 public:
  FgSubgroup() = default;
  FgSubgroup(std::size_t dimension, std::vector<GroupElement> generators);

  std::size_t dimension() const { return dimension_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  /// Rank of the lattice (number of echelon basis vectors).
  std::size_t rank() const { return pivots_.size(); }
  /// True when the generators are Z-independent, so decompositions are unique.
  bool is_basis() const { return rank() == generators_.size(); }

  /// Integer coefficients w with sum w_i g_i = a, or nullopt if a is not in
  /// the subgroup.
  std::optional<std::vector<Integer>> decompose(const GroupElement& a) const;
  bool contains(const GroupElement& a) const { return decompose(a).has_value(); }
  GroupElement recombine(std::span<const Integer> coefficients) const;

  /// Least n >= 2 with n*g in the subgroup, or nullopt. Throws Error if g
  /// already lies in the subgroup. In rank one the answer is exact; in
  /// higher dimension results above `bound` are reported as nullopt.
  std::optional<Integer> min_multiple(const GroupElement& g, std::uint64_t bound = 10000) const;

  /// Subgroup generated by these generators and `extra`.
  FgSubgroup with_generator(const GroupElement& extra) const;

 private:
  // Coordinates of a in the echelon basis, over Q; nullopt if a is outside
  // the Q-span of the generators.
  std::optional<std::vector<Rational>> echelon_coordinates(const GroupElement& a) const;

  std::size_t dimension_ = 0;
  std::vector<GroupElement> generators_;
  Integer scale_ = 1;                             // common denominator
  std::vector<std::vector<Integer>> basis_;       // echelon columns, scaled
  std::vector<std::size_t> pivots_;               // pivot row per column
  std::vector<std::vector<Integer>> transform_;   // basis_[j] = sum_i transform_[j][i] * gen_i
};

}  // namespace vgr
