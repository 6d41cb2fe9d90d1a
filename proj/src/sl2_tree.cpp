#include "ltree/sl2_tree.hpp"

#include <deque>
#include <limits>
#include <unordered_map>

#include "ltree/error.hpp"

namespace ltree {

Mat2 Mat2::parse(const std::array<std::string, 4>& e) {
  return {FieldElement::parse(e[0]), FieldElement::parse(e[1]), FieldElement::parse(e[2]),
          FieldElement::parse(e[3])};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 Mat2::inverse() const {
  FieldElement D = det();
  if (D.is_zero()) fail(ErrorCode::SingularLattice, "matrix is singular");
  FieldElement inv = D.inverse();
  return {d * inv, -b * inv, -c * inv, a * inv};
}

Mat2 Mat2::pow(int k) const {
  Mat2 base = k < 0 ? inverse() : *this, out;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

std::array<std::string, 4> Mat2::strs() const { return {a.str(), b.str(), c.str(), d.str()}; }

Mat2 LatticeVertex::basis() const { return {field.uniformizer_pow(n), a, 0, 1}; }

std::string LatticeVertex::key() const { return std::to_string(n) + "|" + a.str(); }

LatticeVertex base_vertex(const ValuedField& f) { return {f, 0, FieldElement(0)}; }

namespace {

long val(const ValuedField& f, const FieldElement& x) {
  auto o = f.order(x);
  return o ? *o : std::numeric_limits<long>::max();
}

void require_entries(const ValuedField& f, const Mat2& m) {
  for (const auto* x : {&m.a, &m.b, &m.c, &m.d})
    if (!f.contains(*x)) fail(ErrorCode::FieldMismatch, "entry " + x->str() + " is not in " + f.describe());
}

}  // namespace

LatticeVertex canonical_vertex(const ValuedField& f, const Mat2& basis) {
  require_entries(f, basis);
  if (basis.det().is_zero()) fail(ErrorCode::SingularLattice, "basis vectors are dependent");
  // Columns (x1, x2) and (y1, y2); move the column whose second entry has
  // the smaller valuation to the second slot.
  FieldElement x1 = basis.a, x2 = basis.c, y1 = basis.b, y2 = basis.d;
  if (val(f, x2) < val(f, y2)) {
    std::swap(x1, y1);
    std::swap(x2, y2);
  }
  // Clear x2 with an O(v)-multiple of the pivot column.
  if (!x2.is_zero()) {
    FieldElement r = x2 / y2;
    x1 = x1 - r * y1;
  }
  long m = val(f, x1), k = val(f, y2);
  // Dividing a column by a unit keeps the lattice.
  FieldElement unit = y2 / f.uniformizer_pow(k);
  y1 = y1 / unit;
  // Homothety by π^{-k} brings the second diagonal entry to 1.
  long n = m - k;
  FieldElement a = y1 / f.uniformizer_pow(k);
  return {f, n, f.reduce_mod(a, n)};
}

LambdaElement lattice_distance(const LatticeVertex& x, const LatticeVertex& y) {
  return LambdaElement::integer(lattice_distance_int(x, y));
}

long lattice_distance_int(const LatticeVertex& x, const LatticeVertex& y) {
  if (!(x.field == y.field)) fail(ErrorCode::FieldMismatch, "vertices of different lattice trees");
  const ValuedField& f = x.field;
  Mat2 g = x.basis().inverse() * y.basis();
  long low = std::min({val(f, g.a), val(f, g.b), val(f, g.c), val(f, g.d)});
  return val(f, g.det()) - 2 * low;
}

void require_sl2(const ValuedField& f, const Mat2& g) {
  require_entries(f, g);
  if (!(g.det() == FieldElement(1)))
    fail(ErrorCode::DeterminantNotOne, "determinant is " + g.det().str() + ", expected 1");
}

LatticeVertex act(const Mat2& g, const LatticeVertex& x) {
  require_sl2(x.field, g);
  return canonical_vertex(x.field, g * x.basis());
}

LatticeVertex act_gl(const Mat2& g, const LatticeVertex& x) { return canonical_vertex(x.field, g * x.basis()); }

std::vector<LatticeVertex> neighbors(const LatticeVertex& x) {
  const ValuedField& f = x.field;
  std::vector<FieldElement> reps = f.residue_representatives();
  if (f.prime() > 13) fail(ErrorCode::DomainError, "neighbor enumeration is limited to p <= 13");
  Mat2 B = x.basis();
  FieldElement pi = f.uniformizer();
  std::vector<LatticeVertex> out;
  for (const auto& r : reps) out.push_back(canonical_vertex(f, B * Mat2{pi, r, 0, 1}));
  out.push_back(canonical_vertex(f, B * Mat2::diag(1, pi)));
  return out;
}

std::optional<std::size_t> LatticeBall::find(const LatticeVertex& x) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == x) return i;
  return std::nullopt;
}

LatticeBall lattice_ball(const LatticeVertex& center, int radius) {
  LatticeBall ball;
  std::unordered_map<std::string, std::size_t> seen;
  ball.vertices.push_back(center);
  ball.depth.push_back(0);
  seen.emplace(center.key(), 0);
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    if (ball.depth[i] >= radius) continue;
    for (auto& w : neighbors(ball.vertices[i])) {
      auto [it, fresh] = seen.emplace(w.key(), ball.vertices.size());
      if (!fresh) continue;
      ball.edges.push_back({i, it->second});
      ball.vertices.push_back(std::move(w));
      ball.depth.push_back(ball.depth[i] + 1);
    }
  }
  return ball;
}

LambdaElement sl2_translation_length(const ValuedField& f, const Mat2& g) {
  require_sl2(f, g);
  FieldElement tr = g.trace();
  if (tr.is_zero()) return LambdaElement::integer(0);
  return LambdaElement::integer(std::max(0L, -2 * *f.order(tr)));
}

Displacement min_displacement(const Mat2& g, const LatticeBall& ball) {
  Displacement best{std::numeric_limits<long>::max(), 0};
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    long d = lattice_distance_int(ball.vertices[i], act(g, ball.vertices[i]));
    if (d < best.distance) best = {d, i};
    if (d == 0) break;
  }
  return best;
}

std::vector<std::size_t> fixed_vertices(const Mat2& g, const LatticeBall& ball) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ball.vertices.size(); ++i)
    if (act(g, ball.vertices[i]) == ball.vertices[i]) out.push_back(i);
  return out;
}

long entry_valuation_displacement(const Mat2& g, const LatticeVertex& x) {
  const ValuedField& f = x.field;
  Mat2 m = x.basis().inverse() * g * x.basis();
  long low = std::min({val(f, m.a), val(f, m.b), val(f, m.c), val(f, m.d)});
  return std::abs(low);
}

bool stabilizer_membership(const ValuedField& f, const Mat2& g, Stabilizer which) {
  require_sl2(f, g);
  auto integral = [&](const Mat2& m) {
    return val(f, m.a) >= 0 && val(f, m.b) >= 0 && val(f, m.c) >= 0 && val(f, m.d) >= 0;
  };
  switch (which) {
    case Stabilizer::sl2_O: return integral(g);
    case Stabilizer::delta: return integral(g) && val(f, g.c) >= 1;
    case Stabilizer::sl2_O_conjugate: {
      // g ∈ D SL2(O) D⁻¹ with D = diag(1, π).
      Mat2 D = Mat2::diag(1, f.uniformizer());
      return integral(D.inverse() * g * D);
    }
  }
  return false;
}

}  // namespace ltree
