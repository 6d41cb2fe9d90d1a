#pragma once

// The tree of homothety classes of O(v)-lattices in K² and the action of
// SL2(K) on it.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ltree/lambda.hpp"
#include "ltree/valued_field.hpp"

namespace ltree {

/// [[a, b], [c, d]] over ℚ(t) (or ℚ).
struct Mat2 {
  FieldElement a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {}; }
  static Mat2 diag(const FieldElement& x, const FieldElement& y) { return {x, 0, 0, y}; }
  /// Four entries in row-major order, each parsed by FieldElement::parse.
  static Mat2 parse(const std::array<std::string, 4>& entries);

  FieldElement det() const { return a * d - b * c; }
  FieldElement trace() const { return a + d; }
  /// Throws SingularLattice when det = 0.
  Mat2 inverse() const;
  Mat2 pow(int k) const;
  std::array<std::string, 4> strs() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) = default;
};

/// Column basis [[π^n, a], [0, 1]] with a reduced mod π^n O(v). n may be
/// negative.
struct LatticeVertex {
  ValuedField field;
  long n = 0;
  FieldElement a;

  Mat2 basis() const;
  std::string key() const;
  friend bool operator==(const LatticeVertex& x, const LatticeVertex& y) {
    return x.field == y.field && x.n == y.n && x.a == y.a;
  }
};

LatticeVertex base_vertex(const ValuedField& f);
/// SingularLattice for det = 0; FieldMismatch for entries outside the field.
LatticeVertex canonical_vertex(const ValuedField& f, const Mat2& basis);
/// Elementary-divisor distance v(det g) - 2 min v(g_ij) for g = B_x⁻¹ B_y.
LambdaElement lattice_distance(const LatticeVertex& x, const LatticeVertex& y);
long lattice_distance_int(const LatticeVertex& x, const LatticeVertex& y);

/// DeterminantNotOne unless det g = 1.
void require_sl2(const ValuedField& f, const Mat2& g);
LatticeVertex act(const Mat2& g, const LatticeVertex& x);
/// Action of any invertible matrix (GL2), used for neighbors and conjugates.
LatticeVertex act_gl(const Mat2& g, const LatticeVertex& x);

/// The p+1 vertices at distance 1: one per point of P¹(F_p).
std::vector<LatticeVertex> neighbors(const LatticeVertex& x);

struct LatticeBall {
  std::vector<LatticeVertex> vertices;  // BFS order from the center
  std::vector<long> depth;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::optional<std::size_t> find(const LatticeVertex& x) const;
};

LatticeBall lattice_ball(const LatticeVertex& center, int radius);

/// max(0, -2 v(tr g)).
LambdaElement sl2_translation_length(const ValuedField& f, const Mat2& g);

struct Displacement {
  long distance;
  std::size_t vertex;  // index into the ball
};
/// Minimum of d(x, g x) over the ball.
Displacement min_displacement(const Mat2& g, const LatticeBall& ball);
std::vector<std::size_t> fixed_vertices(const Mat2& g, const LatticeBall& ball);

/// |min v(entries of B_x⁻¹ g B_x)|, the entry-valuation displacement rule.
long entry_valuation_displacement(const Mat2& g, const LatticeVertex& x);

enum class Stabilizer { sl2_O, delta, sl2_O_conjugate };
bool stabilizer_membership(const ValuedField& f, const Mat2& g, Stabilizer which);

}  // namespace ltree
