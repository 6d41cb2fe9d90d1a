#include <random>
#include <set>

#include "doctest.h"
#include "ltree/error.hpp"
#include "ltree/graph_of_groups.hpp"
#include "support/generators.hpp"

using namespace ltree;
using ltree::testing::Rng;

namespace {

Presentation P(std::vector<std::string> gens, std::vector<std::string> rels = {}) {
  Presentation p{std::move(gens), {}};
  for (const auto& r : rels) p.rels.push_back(parse_word(r));
  return p;
}

GogEdge edge(std::string name, std::string tail, std::string head, Presentation group,
             std::map<std::string, std::string> to_tail, std::map<std::string, std::string> to_head) {
  GogEdge e{std::move(name), std::move(tail), std::move(head), std::move(group), {}, {}, {}};
  for (const auto& [k, w] : to_tail) e.to_tail[k] = parse_word(w);
  for (const auto& [k, w] : to_head) e.to_head[k] = parse_word(w);
  return e;
}

std::vector<std::string> rel_strs(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.rels) out.push_back(word_str(r));
  return out;
}

GraphOfGroups loop_over_z() {
  return {{{"v", P({"a"})}}, {edge("e", "v", "v", P({"c"}), {{"c", "a"}}, {{"c", "a"}})}};
}

GraphOfGroups trefoil() {
  return {{{"u", P({"a"})}, {"w", P({"b"})}}, {edge("e", "u", "w", P({"c"}), {{"c", "a a"}}, {{"c", "b b b"}})}};
}

GraphOfGroups free_loop() { return {{{"v", P({})}}, {edge("e", "v", "v", P({}), {}, {})}}; }

// Graph with trivial groups on the given vertex count and edge list.
GraphOfGroups trivial_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& es) {
  GraphOfGroups g;
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back({"v" + std::to_string(i), P({})});
  for (std::size_t i = 0; i < es.size(); ++i)
    g.edges.push_back(edge("e" + std::to_string(i), "v" + std::to_string(es[i].first),
                           "v" + std::to_string(es[i].second), P({}), {}, {}));
  return g;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("words") {
  CHECK(word_str(parse_word("a b a-")) == "a b a-");
  CHECK(word_str(free_reduce(parse_word("a b b- a- c"))) == "c");
  CHECK(word_str(cyclic_reduce(parse_word("a b c a-"))) == "b c");
  CHECK(word_str(inverse(parse_word("a b-"))) == "b a-");
  CHECK(word_str(power(parse_word("a b"), -2)) == "b- a- b- a-");
  CHECK(code_of([] { parse_word("a -b"); }) == ErrorCode::ParseError);
}

TEST_CASE("presentations of the basic examples") {
  auto hnn = fundamental_group_presentation(loop_over_z());
  CHECK(hnn.gens == std::vector<std::string>{"a", "s"});
  CHECK(rel_strs(hnn) == std::vector<std::string>{"s- a s a-"});

  auto amalgam = fundamental_group_presentation(trefoil());
  CHECK(amalgam.gens == std::vector<std::string>{"a", "b"});
  CHECK(rel_strs(amalgam) == std::vector<std::string>{"a a b- b- b-"});

  auto free = fundamental_group_presentation(free_loop());
  CHECK(free.gens == std::vector<std::string>{"s"});
  CHECK(free.rels.empty());

  GraphOfGroups single{{{"v", P({"x", "y"}, {"x y x- y-"})}}, {}};
  CHECK(fundamental_group_presentation(single) == single.vertices[0].group);
}

TEST_CASE("stable letters") {
  auto g = loop_over_z();
  g.edges[0].stable_letter = "t";
  CHECK(fundamental_group_presentation(g).gens == std::vector<std::string>{"a", "t"});

  auto two = trivial_graph(1, {{0, 0}, {0, 0}});
  CHECK(fundamental_group_presentation(two).gens == std::vector<std::string>{"s1", "s2"});

  GraphOfGroups clash{{{"v", P({"s"})}}, {edge("e", "v", "v", P({}), {}, {})}};
  CHECK(fundamental_group_presentation(clash).gens == std::vector<std::string>{"s", "s1"});
}

TEST_CASE("disconnected graphs are rejected") {
  auto g = trivial_graph(3, {{0, 1}});
  CHECK(code_of([&] { fundamental_group_presentation(g); }) == ErrorCode::NotConnected);
  CHECK_FALSE(validate_graph_of_groups(g).valid);
}

TEST_CASE("Euler characteristic of trivial graphs of groups") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 7, extra = rng() % 5;
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (std::size_t i = 1; i < n; ++i) es.push_back({rng() % i, i});
    for (std::size_t i = 0; i < extra; ++i) es.push_back({rng() % n, rng() % n});
    std::shuffle(es.begin(), es.end(), rng);
    auto g = trivial_graph(n, es);
    auto p = fundamental_group_presentation(g);
    CHECK(p.gens.size() == es.size() - n + 1);
    CHECK(p.rels.empty());
  }
}

TEST_CASE("counts do not depend on the spanning tree") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 5;
    GraphOfGroups g;
    for (std::size_t i = 0; i < n; ++i) {
      std::string x = "x" + std::to_string(i), y = "y" + std::to_string(i);
      g.vertices.push_back({"v" + std::to_string(i), P({x, y}, {x + " " + y + " " + x + "- " + y + "-"})});
    }
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (std::size_t i = 1; i < n; ++i) es.push_back({rng() % i, i});
    for (std::size_t i = 0; i < 3; ++i) es.push_back({rng() % n, rng() % n});
    for (std::size_t i = 0; i < es.size(); ++i) {
      auto [a, b] = es[i];
      g.edges.push_back(edge("e" + std::to_string(i), "v" + std::to_string(a), "v" + std::to_string(b), P({"c"}),
                             {{"c", "x" + std::to_string(a)}}, {{"c", "y" + std::to_string(b)}}));
    }
    auto base = fundamental_group_presentation(g);
    CHECK(base.gens.size() == 2 * n + 3);
    CHECK(base.rels.size() == n + es.size());
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto other = fundamental_group_presentation(g, {seed, std::nullopt});
      CHECK(other.gens.size() == base.gens.size());
      CHECK(other.rels.size() == base.rels.size());
    }
  }
}

TEST_CASE("default spanning tree is breadth first from the least vertex") {
  auto g = trivial_graph(3, {{2, 1}, {1, 0}, {0, 2}});
  CHECK(spanning_tree(g) == std::vector<std::string>{"e1", "e2"});
  CHECK(spanning_tree(g, {std::nullopt, std::vector<std::string>{"e0", "e1"}}) == std::vector<std::string>{"e0", "e1"});
  CHECK(code_of([&] { spanning_tree(g, {std::nullopt, std::vector<std::string>{"e0", "e1", "e2"}}); }) ==
        ErrorCode::InvalidGraph);
}

TEST_CASE("validation") {
  auto report = validate_graph_of_groups(trefoil());
  CHECK(report.valid);
  REQUIRE(report.attachments.size() == 2);
  for (const auto& a : report.attachments) CHECK(a.injectivity == "verified");

  auto undeclared = trefoil();
  undeclared.edges[0].to_head["c"] = parse_word("z");
  CHECK_FALSE(validate_graph_of_groups(undeclared).valid);

  auto empty_image = trefoil();
  empty_image.edges[0].to_tail["c"] = Word{};
  auto bad = validate_graph_of_groups(empty_image);
  CHECK_FALSE(bad.valid);
  CHECK(bad.attachments[0].injectivity == "fails");

  auto cancelling = trefoil();
  cancelling.edges[0].to_tail["c"] = parse_word("a a-");
  CHECK_FALSE(validate_graph_of_groups(cancelling).valid);

  // Z^2 into Z^2 by a matrix of determinant zero.
  GraphOfGroups torus{{{"v", P({"x", "y"}, {"x y x- y-"})}},
                      {edge("e", "v", "v", P({"c", "d"}, {"c d c- d-"}), {{"c", "x"}, {"d", "y"}},
                            {{"c", "x y"}, {"d", "x x y y"}})}};
  auto t = validate_graph_of_groups(torus);
  CHECK(t.attachments[0].injectivity == "verified");
  CHECK(t.attachments[1].injectivity == "fails");

  // Rank two free edge group into a free group.
  GraphOfGroups f2{{{"u", P({"a", "b"})}, {"w", P({"p", "q"})}},
                   {edge("e", "u", "w", P({"c", "d"}), {{"c", "a"}, {"d", "b a b-"}}, {{"c", "p p"}, {"d", "p-"}})}};
  auto r = validate_graph_of_groups(f2);
  CHECK(r.attachments[0].injectivity == "verified");
  CHECK(r.attachments[1].injectivity == "fails");

  // Anything else is an assumption.
  GraphOfGroups other{{{"u", P({"a"}, {"a a a"})}, {"w", P({"b"})}},
                      {edge("e", "u", "w", P({"c"}, {"c c c"}), {{"c", "a"}}, {{"c", "b"}})}};
  CHECK(validate_graph_of_groups(other).attachments[0].injectivity == "assumed");

  GraphOfGroups dup{{{"u", P({"a"})}, {"w", P({"a"})}}, {edge("e", "u", "w", P({}), {}, {})}};
  CHECK_FALSE(validate_graph_of_groups(dup).valid);
}

TEST_CASE("decomposition along an edge") {
  auto amalgam = decompose_along_edge(trefoil(), "e");
  CHECK(amalgam.separating);
  REQUIRE(amalgam.sides.size() == 2);
  CHECK(amalgam.sides[0] == P({"a"}));
  CHECK(amalgam.sides[1] == P({"b"}));
  CHECK(amalgam.tail_proper);
  CHECK(amalgam.head_proper);

  auto hnn = decompose_along_edge(loop_over_z(), "e");
  CHECK_FALSE(hnn.separating);
  REQUIRE(hnn.sides.size() == 1);
  CHECK(hnn.sides[0] == P({"a"}));
  CHECK(hnn.stable_letter == "s");
  CHECK_FALSE(hnn.tail_proper);

  // Path u - v - w: the middle edges separate.
  GraphOfGroups path{{{"u", P({"a"})}, {"v", P({"b"})}, {"w", P({"c"})}},
                     {edge("e1", "u", "v", P({"x"}), {{"x", "a a"}}, {{"x", "b"}}),
                      edge("e2", "v", "w", P({"y"}), {{"y", "b b"}}, {{"y", "c c c"}})}};
  auto split = decompose_along_edge(path, "e2");
  CHECK(split.separating);
  CHECK(split.sides[0].gens == std::vector<std::string>{"a", "b"});
  CHECK(rel_strs(split.sides[0]) == std::vector<std::string>{"a a b-"});
  CHECK(split.sides[1] == P({"c"}));
  CHECK(split.tail_proper);
  CHECK(split.head_proper);

  // Theta graph: two vertices joined by three edges.
  auto theta = trivial_graph(2, {{0, 1}, {0, 1}, {1, 0}});
  for (const auto& e : {"e0", "e1", "e2"}) {
    auto d = decompose_along_edge(theta, e);
    CHECK_FALSE(d.separating);
    CHECK(d.sides[0].gens.size() == 1);
  }
  CHECK(code_of([&] { decompose_along_edge(theta, "nope"); }) == ErrorCode::InvalidEdge);
}

TEST_CASE("Schreier rank examples") {
  CosetAction swap{2, {{1, 0}, {0, 1}}, {}};
  auto r = schreier_rank(swap);
  CHECK(r.rank == 3);

  CosetAction whole{1, {{0}, {0}, {0}}, {}};
  auto w = schreier_rank(whole);
  CHECK(w.rank == 3);
  std::vector<std::string> gens;
  for (const auto& g : w.generators) gens.push_back(word_str(g));
  CHECK(gens == std::vector<std::string>{"a", "b", "c"});

  CosetAction cycle{3, {{1, 2, 0}, {0, 1, 2}}, {}};
  CHECK(schreier_rank(cycle).rank == 4);

  CosetAction split{3, {{1, 0, 2}, {0, 1, 2}}, {}};
  CHECK(code_of([&] { schreier_rank(split); }) == ErrorCode::NotTransitive);
  CosetAction broken{2, {{0, 0}}, {}};
  CHECK(code_of([&] { schreier_rank(broken); }) == ErrorCode::DomainError);
}

TEST_CASE("Schreier index formula on random actions") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 8, r = 1 + rng() % 4;
    auto action = ltree::testing::random_transitive_action(rng, n, r);
    auto res = schreier_rank(action);
    CHECK(res.rank == n * (r - 1) + 1);
    CHECK(res.generators.size() == res.rank);
    std::set<std::string> distinct;
    for (const auto& g : res.generators) {
      CHECK(act_on_coset(action, 0, g) == 0);
      CHECK_FALSE(g.empty());
      distinct.insert(word_str(g));
    }
    CHECK(distinct.size() == res.rank);
  }
}
