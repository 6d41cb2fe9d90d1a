#include "support/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ltree::testing {

LambdaElement random_element(Rng& rng, int rank, bool dyadic) {
  std::uniform_int_distribution<std::int64_t> coord(-6, 6);
  std::uniform_int_distribution<int> shift(0, dyadic ? 2 : 0);
  std::vector<Rational> c(rank);
  for (auto& x : c) x = Rational(coord(rng), std::int64_t{1} << shift(rng));
  LambdaGroup g = dyadic ? LambdaGroup::dyadics(rank) : LambdaGroup::integers(rank);
  return LambdaElement(g, c);
}

LambdaElement random_positive(Rng& rng, int rank, bool dyadic) {
  std::uniform_int_distribution<std::int64_t> lead(0, 3);
  std::uniform_int_distribution<int> shift(0, dyadic ? 2 : 0);
  for (;;) {
    LambdaElement x = random_element(rng, rank, dyadic);
    std::vector<Rational> c = x.coords();
    c[0] = Rational(lead(rng), std::int64_t{1} << shift(rng));
    LambdaElement y(x.group(), c);
    if (y.is_positive()) return y;
  }
}

MetricGraph random_tree_graph(Rng& rng, int rank, int max_edges, int min_edges, bool dyadic) {
  std::uniform_int_distribution<int> count(min_edges, max_edges);
  int m = count(rng);
  MetricGraph g{dyadic ? LambdaGroup::dyadics(rank) : LambdaGroup::integers(rank), {}, {}};
  g.vertices.push_back("v0");
  for (int i = 1; i <= m; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    g.vertices.push_back("v" + std::to_string(i));
    g.edges.push_back({"e" + std::to_string(i - 1), "v" + std::to_string(parent(rng)), g.vertices.back(),
                       random_positive(rng, rank, dyadic)});
  }
  return g;
}

LambdaTree random_tree(Rng& rng, int rank, int max_edges, int min_edges, bool dyadic) {
  return LambdaTree(random_tree_graph(rng, rank, max_edges, min_edges, dyadic));
}

MetricGraph random_graph_with_cycle(Rng& rng, int rank, int max_edges) {
  MetricGraph g = random_tree_graph(rng, rank, std::max(1, max_edges - 1), 1);
  std::uniform_int_distribution<std::size_t> pick(0, g.vertices.size() - 1);
  std::size_t a = pick(rng), b = pick(rng);
  while (a == b) b = pick(rng);
  g.edges.push_back({"extra", g.vertices[a], g.vertices[b], random_positive(rng, rank)});
  return g;
}

}  // namespace ltree::testing

namespace ltree::testing {

Shape random_shape(Rng& rng, int rank, int max_nodes, bool dyadic) {
  std::uniform_int_distribution<int> count(1, std::max(1, max_nodes));
  int n = count(rng);
  Shape s;
  s.parent.push_back(0);
  s.length.push_back(LambdaElement::zero(dyadic ? LambdaGroup::dyadics(rank) : LambdaGroup::integers(rank)));
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    s.parent.push_back(parent(rng));
    s.length.push_back(random_positive(rng, rank, dyadic));
  }
  return s;
}

namespace {

// Adds a copy of `shape` whose nodes are named prefix + index.
std::vector<std::size_t> add_copy(MetricGraph& g, const Shape& shape, const std::string& prefix) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    ids.push_back(g.vertices.size());
    g.vertices.push_back(prefix + std::to_string(i));
    if (i > 0) g.edges.push_back({"", g.vertices[ids[shape.parent[i]]], g.vertices.back(), shape.length[i]});
  }
  return ids;
}

}  // namespace

IsometryCase symmetric_star(Rng& rng, int rank, int arms, int max_nodes, bool dyadic) {
  Shape shape = random_shape(rng, rank, max_nodes, dyadic);
  LambdaElement spoke = random_positive(rng, rank, dyadic);
  MetricGraph g{spoke.group(), {"c"}, {}};
  std::vector<std::vector<std::size_t>> copies;
  for (int k = 0; k < arms; ++k) {
    copies.push_back(add_copy(g, shape, "a" + std::to_string(k) + "_"));
    g.edges.push_back({"", "c", g.vertices[copies.back()[0]], spoke});
  }
  std::vector<int> perm(arms);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto tree = std::make_shared<const LambdaTree>(g);
  std::vector<std::optional<TreePoint>> images(tree->vertex_count());
  images[0] = TreePoint::at_vertex(0);
  for (int k = 0; k < arms; ++k)
    for (std::size_t i = 0; i < shape.size(); ++i) images[copies[k][i]] = TreePoint::at_vertex(copies[perm[k]][i]);
  return {tree, TreeIsometry(tree, images), IsometryKind::elliptic, LambdaElement::zero(g.group)};
}

NestedStar nested_star(Rng& rng, int rank, int arms, int subarms, int max_nodes) {
  Shape shape = random_shape(rng, rank, max_nodes);
  LambdaElement spoke = random_positive(rng, rank), stalk = random_positive(rng, rank);
  MetricGraph g{spoke.group(), {"c"}, {}};
  NestedStar s;
  for (int k = 0; k < arms; ++k) {
    s.hubs.push_back(g.vertices.size());
    g.vertices.push_back("h" + std::to_string(k));
    g.edges.push_back({"", "c", g.vertices.back(), spoke});
    s.copies.emplace_back();
    for (int j = 0; j < subarms; ++j) {
      s.copies[k].push_back(add_copy(g, shape, "h" + std::to_string(k) + "_" + std::to_string(j) + "_"));
      g.edges.push_back({"", "h" + std::to_string(k), g.vertices[s.copies[k][j][0]], stalk});
    }
  }
  s.tree = std::make_shared<const LambdaTree>(g);
  return s;
}

TreeIsometry random_automorphism(Rng& rng, const NestedStar& s) {
  auto random_perm = [&](std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    // Keep some permutations trivial so fixed sets vary in size.
    if (rng() % 3 != 0) std::shuffle(p.begin(), p.end(), rng);
    return p;
  };
  std::vector<std::optional<TreePoint>> images(s.tree->vertex_count());
  images[0] = TreePoint::at_vertex(0);
  auto sigma = random_perm(s.hubs.size());
  for (std::size_t k = 0; k < s.hubs.size(); ++k) {
    images[s.hubs[k]] = TreePoint::at_vertex(s.hubs[sigma[k]]);
    auto tau = random_perm(s.copies[k].size());
    for (std::size_t j = 0; j < s.copies[k].size(); ++j)
      for (std::size_t i = 0; i < s.copies[k][j].size(); ++i)
        images[s.copies[k][j][i]] = TreePoint::at_vertex(s.copies[sigma[k]][tau[j]][i]);
  }
  return TreeIsometry(s.tree, std::move(images));
}

IsometryCase swapped_pair(Rng& rng, const LambdaElement& bridge, int max_nodes) {
  int rank = bridge.group().rank_k;
  Shape shape = random_shape(rng, rank, max_nodes, bridge.group().dyadic_allowed);
  MetricGraph g{bridge.group(), {}, {}};
  auto left = add_copy(g, shape, "l"), right = add_copy(g, shape, "r");
  g.edges.push_back({"bridge", g.vertices[left[0]], g.vertices[right[0]], bridge});
  auto tree = std::make_shared<const LambdaTree>(g);
  std::vector<std::optional<TreePoint>> images(tree->vertex_count());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    images[left[i]] = TreePoint::at_vertex(right[i]);
    images[right[i]] = TreePoint::at_vertex(left[i]);
  }
  bool flips = !in_two_lambda(bridge);
  return {tree, TreeIsometry(tree, images), flips ? IsometryKind::inversion : IsometryKind::elliptic,
          flips ? bridge : LambdaElement::zero(bridge.group())};
}

IsometryCase periodic_translation(Rng& rng, int rank, int period, int repeats, int max_nodes) {
  std::vector<LambdaElement> steps;
  std::vector<Shape> decorations;
  for (int r = 0; r < period; ++r) {
    steps.push_back(random_positive(rng, rank));
    decorations.push_back(random_shape(rng, rank, max_nodes));
  }
  int n = period * repeats;
  MetricGraph g{LambdaGroup::integers(rank), {}, {}};
  std::vector<std::size_t> line;
  std::vector<std::vector<std::size_t>> decor;
  for (int i = 0; i <= n; ++i) {
    Shape d = decorations[i % period];
    decor.push_back(add_copy(g, d, "x" + std::to_string(i) + "_"));
    line.push_back(decor.back()[0]);
    if (i > 0) g.edges.push_back({"", g.vertices[line[i - 1]], g.vertices[line[i]], steps[(i - 1) % period]});
  }
  auto tree = std::make_shared<const LambdaTree>(g);
  std::vector<std::optional<TreePoint>> images(tree->vertex_count());
  for (int i = 0; i + period <= n; ++i)
    for (std::size_t j = 0; j < decor[i].size(); ++j) images[decor[i][j]] = TreePoint::at_vertex(decor[i + period][j]);
  LambdaElement tau = LambdaElement::zero(g.group);
  for (const auto& s : steps) tau += s;
  return {tree, TreeIsometry(tree, images), IsometryKind::hyperbolic, tau};
}

DecoratedLine decorated_line(Rng& rng, int rank, int n, int max_nodes, const LambdaElement& step) {
  Shape shape = random_shape(rng, rank, max_nodes, step.group().dyadic_allowed);
  MetricGraph g{step.group(), {}, {}};
  DecoratedLine dl;
  for (int i = 0; i <= n; ++i) {
    dl.decor.push_back(add_copy(g, shape, "x" + std::to_string(i) + "_"));
    dl.line.push_back(dl.decor.back()[0]);
    if (i > 0) g.edges.push_back({"", g.vertices[dl.line[i - 1]], g.vertices[dl.line[i]], step});
  }
  dl.tree = std::make_shared<const LambdaTree>(g);
  return dl;
}

namespace {

TreeIsometry line_map(const DecoratedLine& dl, int sign, int offset) {
  int n = static_cast<int>(dl.line.size()) - 1;
  std::vector<std::optional<TreePoint>> images(dl.tree->vertex_count());
  for (int i = 0; i <= n; ++i) {
    int j = sign * i + offset;
    if (j < 0 || j > n) continue;
    for (std::size_t k = 0; k < dl.decor[i].size(); ++k) images[dl.decor[i][k]] = TreePoint::at_vertex(dl.decor[j][k]);
  }
  return TreeIsometry(dl.tree, images);
}

}  // namespace

TreeIsometry reflection(const DecoratedLine& dl, int twice_center) { return line_map(dl, -1, twice_center); }
TreeIsometry line_shift(const DecoratedLine& dl, int k) { return line_map(dl, 1, k); }

}  // namespace ltree::testing

namespace ltree::testing {

CosetAction random_transitive_action(Rng& rng, std::size_t n, std::size_t r) {
  CosetAction a;
  a.degree = n;
  for (;;) {
    a.perms.assign(r, {});
    for (auto& p : a.perms) {
      p.resize(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (const auto& p : a.perms)
        for (std::size_t j : {p[i], static_cast<std::size_t>(std::find(p.begin(), p.end(), i) - p.begin())})
          if (!seen[j]) {
            seen[j] = true;
            ++count;
            stack.push_back(j);
          }
    }
    if (count == n) return a;
  }
}

Word random_word(Rng& rng, const std::vector<std::string>& gens, std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, 2 * gens.size() - 1);
  Word w;
  while (w.size() < len) {
    std::size_t k = pick(rng);
    Letter l{gens[k / 2], k % 2 == 1};
    if (!w.empty() && w.back() == l.inverted()) continue;
    w.push_back(l);
  }
  return w;
}

}  // namespace ltree::testing
