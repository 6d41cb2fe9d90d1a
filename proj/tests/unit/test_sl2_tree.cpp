#include <deque>
#include <random>

#include "doctest.h"
#include "ltree/error.hpp"
#include "ltree/sl2_tree.hpp"

using namespace ltree;

namespace {

FieldElement F(const char* s) { return FieldElement::parse(s); }

Mat2 M(const char* a, const char* b, const char* c, const char* d) { return {F(a), F(b), F(c), F(d)}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

// Graph distances inside the ball by breadth-first search over its edges.
std::vector<std::vector<long>> ball_bfs(const LatticeBall& ball) {
  std::size_t n = ball.vertices.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : ball.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::vector<long>> dist(n, std::vector<long>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> q{s};
    dist[s][s] = 0;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop_front();
      for (std::size_t w : adj[v])
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          q.push_back(w);
        }
    }
  }
  return dist;
}

std::vector<Mat2> generators(long p) {
  FieldElement P(p);
  return {Mat2::diag(P, P.inverse()), M("1", "1", "0", "1"), M("1", "0", "1", "1")};
}

Mat2 random_word(std::mt19937_64& rng, const std::vector<Mat2>& gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), pick(0, static_cast<int>(gens.size()) - 1), sign(0, 1);
  Mat2 g;
  for (int i = len(rng); i > 0; --i) g = g * (sign(rng) ? gens[pick(rng)] : gens[pick(rng)].inverse());
  return g;
}

}  // namespace

TEST_CASE("canonical vertices") {
  auto f = ValuedField::p_adic(2);
  LatticeVertex v0 = base_vertex(f);
  CHECK(canonical_vertex(f, Mat2::identity()) == v0);
  CHECK(canonical_vertex(f, Mat2::diag(2, F("1/2"))) == canonical_vertex(f, Mat2::diag(4, 1)));
  // Columns swapped, one scaled by the unit 3.
  CHECK(canonical_vertex(f, M("0", "3", "1", "0")) == v0);
  CHECK(canonical_vertex(f, Mat2::diag(1, 2)) == canonical_vertex(f, Mat2::diag(F("1/2"), 1)));
  CHECK(code_of([&] { canonical_vertex(f, M("1", "2", "2", "4")); }) == ErrorCode::SingularLattice);
  CHECK(code_of([&] { canonical_vertex(f, M("t", "0", "0", "1")); }) == ErrorCode::FieldMismatch);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> small(-9, 9);
  auto v = canonical_vertex(f, M("3", "5/4", "1/2", "7"));
  for (int i = 0; i < 100; ++i) {
    // Right multiplication by GL2(O) and scaling leave the class unchanged.
    Mat2 u{FieldElement(2 * small(rng) + 1), FieldElement(small(rng)), FieldElement(2 * small(rng)),
           FieldElement(2 * small(rng) + 1)};
    if (u.det().is_zero() || *f.order(u.det()) != 0) continue;
    FieldElement scale(mpq_class(2 * (std::abs(small(rng)) + 1), 5));
    Mat2 b = M("3", "5/4", "1/2", "7") * u;
    b = Mat2{b.a * scale, b.b * scale, b.c * scale, b.d * scale};
    CHECK(canonical_vertex(f, b) == v);
    CHECK(canonical_vertex(f, v.basis()) == v);
  }
}

TEST_CASE("distances") {
  auto f = ValuedField::p_adic(2);
  LatticeVertex v0 = base_vertex(f);
  CHECK(lattice_distance_int(v0, canonical_vertex(f, Mat2::diag(2, 1))) == 1);
  CHECK(lattice_distance_int(v0, canonical_vertex(f, Mat2::diag(4, 1))) == 2);
  CHECK(lattice_distance_int(v0, v0) == 0);
  CHECK(code_of([&] { lattice_distance(v0, base_vertex(ValuedField::p_adic(3))); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("action") {
  auto f = ValuedField::p_adic(2);
  LatticeVertex v0 = base_vertex(f);
  CHECK(act(Mat2::identity(), v0) == v0);
  CHECK(act(Mat2::diag(2, F("1/2")), v0) == canonical_vertex(f, Mat2::diag(4, 1)));
  CHECK(act(M("1", "1", "0", "1"), v0) == v0);
  CHECK(code_of([&] { act(Mat2::diag(2, 1), v0); }) == ErrorCode::DeterminantNotOne);

  std::mt19937_64 rng(9);
  for (long p : {2L, 3L}) {
    auto fp = ValuedField::p_adic(p);
    auto ball = lattice_ball(base_vertex(fp), 3);
    auto gens = generators(p);
    std::uniform_int_distribution<std::size_t> pick(0, ball.vertices.size() - 1);
    for (int i = 0; i < 60; ++i) {
      Mat2 g = random_word(rng, gens, 4), h = random_word(rng, gens, 4);
      const auto &x = ball.vertices[pick(rng)], &y = ball.vertices[pick(rng)];
      CHECK(lattice_distance_int(act(g, x), act(g, y)) == lattice_distance_int(x, y));
      CHECK(act(g * h, x) == act(g, act(h, x)));
    }
  }
}

TEST_CASE("neighbors") {
  for (long p : {2L, 3L, 5L}) {
    auto f = ValuedField::p_adic(p);
    LatticeVertex v0 = base_vertex(f);
    auto nb = neighbors(v0);
    CHECK(nb.size() == static_cast<std::size_t>(p + 1));
    // Oracle: kernels of the functionals (x, y) -> αx + βy mod p, one per
    // point of P¹(F_p).
    std::vector<LatticeVertex> kernels{canonical_vertex(f, Mat2::diag(p, 1))};
    for (long alpha = 0; alpha < p; ++alpha)
      kernels.push_back(canonical_vertex(f, Mat2{1, 0, FieldElement(-alpha), FieldElement(p)}));
    for (const auto& k : kernels) CHECK(std::count(nb.begin(), nb.end(), k) == 1);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      CHECK(lattice_distance_int(v0, nb[i]) == 1);
      for (std::size_t j = i + 1; j < nb.size(); ++j) CHECK_FALSE(nb[i] == nb[j]);
    }
  }
  CHECK(code_of([] { neighbors(base_vertex(ValuedField::at_point(0))); }) == ErrorCode::InfiniteResidueField);
  CHECK(lattice_ball(base_vertex(ValuedField::p_adic(2)), 2).vertices.size() == 10);
}

TEST_CASE("metric matches the neighbor graph") {
  std::mt19937_64 rng(5);
  for (long p : {2L, 3L}) {
    auto ball = lattice_ball(base_vertex(ValuedField::p_adic(p)), 3);
    auto bfs = ball_bfs(ball);
    for (std::size_t i = 0; i < ball.vertices.size(); ++i)
      for (std::size_t j = 0; j < ball.vertices.size(); ++j)
        CHECK(lattice_distance_int(ball.vertices[i], ball.vertices[j]) == bfs[i][j]);

    auto big = lattice_ball(base_vertex(ValuedField::p_adic(p)), 4);
    std::uniform_int_distribution<std::size_t> pick(0, big.vertices.size() - 1);
    for (int k = 0; k < 300; ++k) {
      const auto &a = big.vertices[pick(rng)], &b = big.vertices[pick(rng)], &c = big.vertices[pick(rng)],
                 &d = big.vertices[pick(rng)];
      std::vector<long> s{lattice_distance_int(a, b) + lattice_distance_int(c, d),
                          lattice_distance_int(a, c) + lattice_distance_int(b, d),
                          lattice_distance_int(a, d) + lattice_distance_int(b, c)};
      std::sort(s.begin(), s.end());
      CHECK(s[1] == s[2]);
    }
  }
}

TEST_CASE("translation lengths") {
  auto f2 = ValuedField::p_adic(2);
  CHECK(sl2_translation_length(f2, M("1", "1", "0", "1")).is_zero());
  CHECK(act(M("1", "1", "0", "1"), base_vertex(f2)) == base_vertex(f2));
  Mat2 d = Mat2::diag(2, F("1/2"));
  CHECK(sl2_translation_length(f2, d) == LambdaElement::integer(2));
  auto ball = lattice_ball(base_vertex(f2), 4);
  CHECK(min_displacement(d, ball).distance == 2);

  auto ft = ValuedField::at_point(0);
  Mat2 dt = Mat2::diag(F("t"), F("1/t"));
  CHECK(sl2_translation_length(ft, dt) == LambdaElement::integer(2));
  for (int k = 0; k < 4; ++k) {
    // Axis vertices diag(t^{2k}, 1) are moved by exactly 2.
    LatticeVertex x = canonical_vertex(ft, Mat2::diag(F("t").pow(2 * k), 1));
    CHECK(lattice_distance_int(x, act(dt, x)) == 2);
  }
  CHECK(code_of([&] { sl2_translation_length(f2, Mat2::diag(2, 1)); }) == ErrorCode::DeterminantNotOne);

  std::mt19937_64 rng(17);
  for (long p : {2L, 3L}) {
    auto f = ValuedField::p_adic(p);
    auto gens = generators(p);
    for (int i = 0; i < 40; ++i) {
      Mat2 g = random_word(rng, gens, 3);
      LambdaElement len = sl2_translation_length(f, g);
      if (len.is_positive())
        for (int k = 2; k <= 3; ++k) CHECK(sl2_translation_length(f, g.pow(k)) == len * k);
    }
  }
}

TEST_CASE("entry valuation displacement is recorded separately") {
  auto f = ValuedField::p_adic(2);
  Mat2 d = Mat2::diag(2, F("1/2"));
  CHECK(entry_valuation_displacement(d, base_vertex(f)) == 1);
  CHECK(lattice_distance_int(base_vertex(f), act(d, base_vertex(f))) == 2);
}

TEST_CASE("stabilizers") {
  auto f = ValuedField::p_adic(2);
  CHECK(stabilizer_membership(f, M("1", "0", "2", "1"), Stabilizer::delta));
  CHECK(stabilizer_membership(f, M("1", "0", "1", "1"), Stabilizer::sl2_O));
  CHECK_FALSE(stabilizer_membership(f, M("1", "0", "1", "1"), Stabilizer::delta));
  CHECK_FALSE(stabilizer_membership(f, M("1", "1/2", "0", "1"), Stabilizer::sl2_O));
  CHECK(stabilizer_membership(f, M("1", "1/2", "0", "1"), Stabilizer::sl2_O_conjugate));

  std::mt19937_64 rng(23);
  for (long p : {2L, 3L}) {
    auto fp = ValuedField::p_adic(p);
    LatticeVertex v0 = base_vertex(fp);
    LatticeVertex edge_end = canonical_vertex(fp, Mat2::diag(1, p));
    auto gens = generators(p);
    for (int i = 0; i < 150; ++i) {
      Mat2 g = random_word(rng, gens, 4);
      bool fixes_v0 = act(g, v0) == v0, fixes_end = act(g, edge_end) == edge_end;
      CHECK(fixes_v0 == stabilizer_membership(fp, g, Stabilizer::sl2_O));
      CHECK(fixes_end == stabilizer_membership(fp, g, Stabilizer::sl2_O_conjugate));
      CHECK((fixes_v0 && fixes_end) == stabilizer_membership(fp, g, Stabilizer::delta));
    }
  }
}
