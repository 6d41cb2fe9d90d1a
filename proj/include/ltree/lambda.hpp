#pragma once

// Finite-rank ordered abelian groups modelled as k-tuples of exact
// rationals under lexicographic order.

#include <cstdint>
#include <string>
#include <vector>

#include "ltree/rational.hpp"

namespace ltree {

/// The ambient group: integer k-tuples, or dyadic k-tuples for Λ[1/2].
///
/// `trivial` marks the zero group (kept with rank_k == 1 and only the zero
/// element), which arises as the quotient of a group by itself.
struct LambdaGroup {
  int rank_k = 1;
  bool dyadic_allowed = false;
  bool trivial = false;

  static LambdaGroup integers(int rank = 1) { return {rank, false, false}; }
  static LambdaGroup dyadics(int rank = 1) { return {rank, true, false}; }
  static LambdaGroup zero_group() { return {1, false, true}; }

  LambdaGroup with_half() const { return {rank_k, true, trivial}; }
  bool contains(const std::vector<Rational>& coords) const;

  friend bool operator==(const LambdaGroup&, const LambdaGroup&) = default;
};

std::string describe(const LambdaGroup& g);

/// Rank as the length of the maximal convex-subgroup chain minus one.
int group_rank(const LambdaGroup& g);

enum class Order { less, equal, greater };

class LambdaElement {
 public:
  /// Validates that coords lie in the group (NotInGroup otherwise).
  LambdaElement(LambdaGroup group, std::vector<Rational> coords);

  static LambdaElement zero(const LambdaGroup& group);
  static LambdaElement integer(std::int64_t value);  // rank-1 integers
  /// Builds an element without membership validation. Used for
  /// intermediate values such as half-lengths whose membership is decided
  /// later with representable().
  static LambdaElement unchecked(const LambdaGroup& group, std::vector<Rational> coords);

  const LambdaGroup& group() const { return group_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  bool representable() const { return group_.contains(coords_); }
  bool is_zero() const;
  int sign() const;
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }

  LambdaElement operator-() const;
  LambdaElement& operator+=(const LambdaElement& o);
  LambdaElement& operator-=(const LambdaElement& o);
  friend LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
  friend LambdaElement operator-(LambdaElement a, const LambdaElement& b) { return a -= b; }
  friend LambdaElement operator*(LambdaElement a, std::int64_t n);
  friend LambdaElement operator*(std::int64_t n, LambdaElement a) { return std::move(a) * n; }

  /// Coordinates divided by two, same group, not validated.
  LambdaElement half() const;

  friend bool operator==(const LambdaElement& a, const LambdaElement& b);
  friend bool operator<(const LambdaElement& a, const LambdaElement& b);
  friend bool operator<=(const LambdaElement& a, const LambdaElement& b) { return !(b < a); }
  friend bool operator>(const LambdaElement& a, const LambdaElement& b) { return b < a; }
  friend bool operator>=(const LambdaElement& a, const LambdaElement& b) { return !(a < b); }

  // "(1,-3/2)"
  std::string str() const;

 private:
  LambdaElement() = default;
  LambdaGroup group_;
  std::vector<Rational> coords_;
};

/// Lexicographic comparison. Throws GroupMismatch across groups.
Order compare(const LambdaElement& a, const LambdaElement& b);
LambdaElement lambda_add(const LambdaElement& a, const LambdaElement& b);
LambdaElement lambda_sub(const LambdaElement& a, const LambdaElement& b);
LambdaElement abs(const LambdaElement& x);
const LambdaElement& min(const LambdaElement& a, const LambdaElement& b);
const LambdaElement& max(const LambdaElement& a, const LambdaElement& b);

/// Convex subgroup of elements whose first `depth_j` coordinates vanish.
/// depth 0 is the whole group, depth k the trivial subgroup.
struct ConvexSubgroup {
  int depth_j = 0;
};

bool in_subgroup(const LambdaElement& x, const ConvexSubgroup& s);
LambdaGroup quotient_group(const LambdaGroup& g, const ConvexSubgroup& s);
/// Image in Λ/Λ₀: the leading depth_j coordinates.
LambdaElement convex_quotient(const LambdaElement& x, const ConvexSubgroup& s);

/// x/2 as an element of Λ[1/2].
LambdaElement halve(const LambdaElement& x);
/// Whether x ∈ 2Λ.
bool in_two_lambda(const LambdaElement& x);

/// Order embeddings between built-in groups: integers into dyadics of the
/// same or larger rank, and rank k into rank k' >= k by padding trailing
/// zero coordinates.
bool embeds_into(const LambdaGroup& from, const LambdaGroup& to);
LambdaElement embed(const LambdaElement& x, const LambdaGroup& to);

/// Element of [0, ∞].
struct ExtendedRatio {
  bool infinite = false;
  Rational value;

  double to_double() const;
  friend bool operator==(const ExtendedRatio&, const ExtendedRatio&) = default;
};

/// The archimedean ratio x/y for x, y >= 0, not both zero: ratio of the
/// coordinates at the first index where either is nonzero.
ExtendedRatio ratio(const LambdaElement& x, const LambdaElement& y);

}  // namespace ltree
