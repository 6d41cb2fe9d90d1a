#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "doctest.h"
#include "ltree/error.hpp"
#include "ltree/lambda_tree.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace ltree;
using ltree::testing::lam;
using ltree::testing::Z;

namespace {

LambdaTree tripod() {
  return LambdaTree(MetricGraph{LambdaGroup::integers(1),
                                {"c", "a", "b", "d"},
                                {{"ea", "c", "a", Z(1)}, {"eb", "c", "b", Z(1)}, {"ed", "c", "d", Z(1)}}});
}

LambdaTree unit_line(int n) {
  MetricGraph g{LambdaGroup::integers(1), {}, {}};
  for (int i = 0; i <= n; ++i) g.vertices.push_back("x" + std::to_string(i));
  for (int i = 0; i < n; ++i) g.edges.push_back({"", g.vertices[i], g.vertices[i + 1], Z(1)});
  return LambdaTree(g);
}

// Distances computed by subdividing edges at the query points and walking
// the resulting tree depth-first.
std::vector<LambdaElement> oracle_distances(const LambdaTree& t, const std::vector<TreePoint>& pts,
                                            std::size_t source) {
  std::size_t n = t.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, LambdaElement>>> adj(n + pts.size());
  std::vector<std::size_t> node(pts.size());
  std::map<std::size_t, std::vector<std::pair<LambdaElement, std::size_t>>> cuts;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].is_vertex()) {
      node[i] = pts[i].vertex();
    } else {
      node[i] = n + i;
      cuts[pts[i].edge()].push_back({pts[i].offset(), n + i});
    }
  }
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    const TreeEdge& ed = t.edge(e);
    auto chain = cuts[e];
    std::sort(chain.begin(), chain.end(), [](auto& x, auto& y) { return x.first < y.first; });
    std::size_t prev = ed.a;
    LambdaElement at = LambdaElement::zero(t.group());
    for (auto& [off, id] : chain) {
      adj[prev].push_back({id, off - at});
      adj[id].push_back({prev, off - at});
      prev = id;
      at = off;
    }
    adj[prev].push_back({ed.b, ed.length - at});
    adj[ed.b].push_back({prev, ed.length - at});
  }
  std::vector<std::optional<LambdaElement>> dist(adj.size());
  std::function<void(std::size_t, LambdaElement)> dfs = [&](std::size_t v, LambdaElement d) {
    dist[v] = d;
    for (auto& [w, len] : adj[v])
      if (!dist[w]) dfs(w, d + len);
  };
  dfs(node[source], LambdaElement::zero(t.group()));
  std::vector<LambdaElement> out;
  for (std::size_t i = 0; i < pts.size(); ++i) out.push_back(*dist[node[i]]);
  return out;
}

}  // namespace

TEST_CASE("tripod distances, segments and directions") {
  LambdaTree t = tripod();
  auto a = TreePoint::at_vertex(*t.find_vertex("a"));
  auto b = TreePoint::at_vertex(*t.find_vertex("b"));
  auto d = TreePoint::at_vertex(*t.find_vertex("d"));
  auto c = TreePoint::at_vertex(*t.find_vertex("c"));
  CHECK(t.distance(a, b) == Z(2));
  CHECK(t.distance(a, a).is_zero());
  Segment s = t.segment(a, b);
  CHECK(s.length == Z(2));
  CHECK(s.vertex_path == std::vector<std::size_t>{*t.find_vertex("c")});
  Segment deg = t.segment(a, a);
  CHECK_FALSE(deg.nondegenerate());
  CHECK(deg.vertex_path.empty());
  CHECK(t.median(a, b, d) == c);
  CHECK(t.median(a, b, a) == a);
  CHECK(t.classify_point(c).kind == PointKind::branch);
  CHECK(t.classify_point(c).directions == 3);
  CHECK(t.classify_point(a).kind == PointKind::dead_end);
  auto mid = t.point_on_edge(*t.find_edge("ea"), Z(1));
  CHECK(mid == a);
  CHECK_THROWS_AS(t.point_on_edge(*t.find_edge("ea"), Z(2)), Error);
}

TEST_CASE("interior points are regular") {
  LambdaTree t = base_change(tripod(), LambdaGroup::dyadics(1));
  auto p = t.point_on_edge(0, lam({Rational(1, 2)}, true));
  CHECK(t.classify_point(p).kind == PointKind::regular);
  CHECK(t.classify_point(p).directions == 2);
}

TEST_CASE("lexicographic path lengths") {
  LambdaTree t(MetricGraph{LambdaGroup::integers(2), {"u", "v", "w"},
                           {{"", "u", "v", lam({1, 0})}, {"", "v", "w", lam({0, 5})}}});
  CHECK(t.distance(TreePoint::at_vertex(0), TreePoint::at_vertex(2)) == lam({1, 5}));
}

TEST_CASE("median of collinear points") {
  LambdaTree t = unit_line(10);
  auto at = [&](int i) { return TreePoint::at_vertex(i); };
  CHECK(t.median(at(2), at(5), at(9)) == at(5));
}

TEST_CASE("segments sharing an endpoint intersect in a segment") {
  LambdaTree t = tripod();
  auto a = TreePoint::at_vertex(1), b = TreePoint::at_vertex(2), d = TreePoint::at_vertex(3);
  auto s1 = t.segment(a, b), s2 = t.segment(a, d);
  std::vector<std::size_t> v1{1}, v2{1};
  v1.insert(v1.end(), s1.vertex_path.begin(), s1.vertex_path.end());
  v2.insert(v2.end(), s2.vertex_path.begin(), s2.vertex_path.end());
  std::size_t common = 0;
  while (common < v1.size() && common < v2.size() && v1[common] == v2[common]) ++common;
  CHECK(common == 2);  // a, c
  CHECK(t.distance(a, TreePoint::at_vertex(v1[common - 1])) == t.distance(a, t.median(a, b, d)));
}

TEST_CASE("invalid trees and points") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code_of([] {
          LambdaTree(MetricGraph{LambdaGroup::integers(1), {"a", "b"}, {{"", "a", "b", Z(0)}}});
        }) == ErrorCode::InvalidTree);
  CHECK(code_of([] {
          LambdaTree(MetricGraph{LambdaGroup::integers(1), {"a", "b", "c"},
                                 {{"", "a", "b", Z(1)}, {"", "b", "a", Z(1)}}});
        }) == ErrorCode::InvalidTree);
  LambdaTree t = tripod();
  CHECK(code_of([&] { t.distance(TreePoint::at_vertex(9), TreePoint::at_vertex(0)); }) ==
        ErrorCode::InvalidPoint);
}

TEST_CASE("base change to dyadics") {
  LambdaTree t(MetricGraph{LambdaGroup::integers(1), {"a", "b"}, {{"e", "a", "b", Z(1)}}});
  CHECK_THROWS_AS(t.point_on_edge(0, lam({Rational(1, 2)}, true)), Error);
  LambdaTree d = base_change(t, LambdaGroup::dyadics(1));
  auto m = d.point_on_edge(0, lam({Rational(1, 2)}, true));
  CHECK(d.distance(m, TreePoint::at_vertex(0)) == lam({Rational(1, 2)}, true));
  CHECK(base_change(t, t.group()) == t);
  CHECK_THROWS_AS(base_change(d, LambdaGroup::integers(1)), Error);

  testing::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    LambdaTree src = testing::random_tree(rng, 1 + i % 2, 8);
    LambdaGroup target = LambdaGroup::dyadics(src.group().rank_k + i % 2);
    LambdaTree dst = base_change(src, target);
    for (int j = 0; j < 10; ++j) {
      TreePoint p = src.sample_point(rng), q = src.sample_point(rng);
      CHECK(dst.distance(base_change_point(dst, p), base_change_point(dst, q)) ==
            embed(src.distance(p, q), target));
    }
  }
}

TEST_CASE("convex quotients") {
  LambdaTree t(MetricGraph{LambdaGroup::integers(2), {"u", "v", "w"},
                           {{"short", "u", "v", lam({0, 5})}, {"long", "v", "w", lam({1, 0})}}});
  QuotientTree q = convex_quotient_tree(t, ConvexSubgroup{1});
  CHECK(q.tree.vertex_count() == 2);
  CHECK(q.tree.edge_count() == 1);
  CHECK(q.tree.edge(0).length == lam({1}));
  CHECK(q.vertex_map[0] == q.vertex_map[1]);
  const LambdaTree& fiber = q.fibers[q.vertex_map[0]];
  CHECK(fiber.vertex_count() == 2);
  CHECK(fiber.distance(TreePoint::at_vertex(0), TreePoint::at_vertex(1)) == lam({0, 5}));

  QuotientTree same = convex_quotient_tree(t, ConvexSubgroup{2});
  CHECK(same.tree == t);

  QuotientTree all = convex_quotient_tree(t, ConvexSubgroup{0});
  CHECK(all.tree.vertex_count() == 1);
  CHECK(all.fibers[0].vertex_count() == 3);

  testing::Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    LambdaTree src = testing::random_tree(rng, 2, 10);
    for (int depth = 0; depth <= 2; ++depth) {
      QuotientTree qt = convex_quotient_tree(src, ConvexSubgroup{depth});
      for (int j = 0; j < 10; ++j) {
        TreePoint p = src.sample_point(rng), r = src.sample_point(rng);
        CHECK(qt.tree.distance(qt.map_point(src, p), qt.map_point(src, r)) ==
              convex_quotient(src.distance(p, r), ConvexSubgroup{depth}));
      }
    }
  }
}

TEST_CASE("axiom checking") {
  MetricGraph triangle{LambdaGroup::integers(1),
                       {"a", "b", "c"},
                       {{"ab", "a", "b", Z(1)}, {"bc", "b", "c", Z(1)}, {"ca", "c", "a", Z(1)}}};
  AxiomReport r = check_axioms(triangle, 10);
  CHECK_FALSE(r.ok);
  CHECK(r.axiom == "b");
  REQUIRE(r.arcs.size() == 2);
  CHECK(r.arcs[0].front() == r.arcs[1].front());
  CHECK(r.arcs[0].back() == r.arcs[1].back());
  CHECK(r.arcs[0] != r.arcs[1]);

  MetricGraph parallel{LambdaGroup::integers(1), {"a", "b"}, {{"e", "a", "b", Z(1)}, {"f", "a", "b", Z(2)}}};
  r = check_axioms(parallel, 10);
  CHECK(r.axiom == "b");
  REQUIRE(r.arcs.size() == 2);
  CHECK(r.arcs[0] == std::vector<std::string>{"a", "f", "b"});
  CHECK(r.arcs[1] == std::vector<std::string>{"a", "e", "b"});

  MetricGraph forest{LambdaGroup::integers(1), {"a", "b", "c", "d"}, {{"", "a", "b", Z(1)}, {"", "c", "d", Z(1)}}};
  AxiomReport f = check_axioms(forest, 10);
  CHECK_FALSE(f.ok);
  CHECK(f.axiom == "a");

  CHECK(check_axioms(tripod().to_graph(), 50).ok);
}

TEST_CASE("metric properties on random trees") {
  testing::Rng rng(99);
  for (int i = 0; i < 150; ++i) {
    LambdaTree t = testing::random_tree(rng, 1 + i % 2, 20, 1, i % 3 == 0);
    std::vector<TreePoint> pts;
    for (int j = 0; j < 6; ++j) pts.push_back(t.sample_point(rng));
    auto from0 = oracle_distances(t, pts, 0);
    for (std::size_t j = 0; j < pts.size(); ++j) CHECK(t.distance(pts[0], pts[j]) == from0[j]);

    const auto &p = pts[0], &q = pts[1], &r = pts[2], &s = pts[3];
    CHECK(t.distance(p, q) == t.distance(q, p));
    CHECK((t.distance(p, q).is_zero() == (p == q)));
    CHECK(t.distance(p, r) <= t.distance(p, q) + t.distance(q, r));
    CHECK((t.distance(p, r) == t.distance(p, q) + t.distance(q, r)) == t.on_segment(q, p, r));

    std::vector<LambdaElement> sums{t.distance(p, q) + t.distance(r, s), t.distance(p, r) + t.distance(q, s),
                                    t.distance(p, s) + t.distance(q, r)};
    std::sort(sums.begin(), sums.end());
    CHECK(sums[1] == sums[2]);

    TreePoint m = t.median(p, q, r);
    CHECK(m == t.median(q, r, p));
    CHECK(m == t.median(r, q, p));
    CHECK(t.on_segment(m, p, q));
    CHECK(t.on_segment(m, q, r));
    CHECK(t.on_segment(m, p, r));

    Segment seg = t.segment(p, q);
    LambdaElement walked = LambdaElement::zero(t.group());
    auto stations = t.route(p, q);
    for (std::size_t k = 0; k + 1 < stations.size(); ++k) {
      std::size_t e = t.leg_edge(stations[k], stations[k + 1]);
      walked += abs(t.position_on(e, stations[k + 1]) - t.position_on(e, stations[k]));
    }
    CHECK(walked == seg.length);
  }
}
