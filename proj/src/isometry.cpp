#include "ltree/isometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ltree/error.hpp"

namespace ltree {

namespace {

std::int64_t floor_div(const Rational& r) {
  std::int64_t n = r.num(), d = r.den();
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

std::int64_t ceil_div(const Rational& r) { return -floor_div(-r); }

LambdaElement recast(const LambdaElement& x, const LambdaGroup& g) {
  return LambdaElement::unchecked(g, x.coords());
}

// A representable element of [lo, hi]: the least one when it exists,
// otherwise some witness. Endpoints may lie in Λ[1/2].
std::optional<LambdaElement> lowest_in(const LambdaElement& lo, const LambdaElement& hi) {
  if (hi < lo) return std::nullopt;
  if (lo.representable()) return lo;
  const LambdaGroup& g = lo.group();
  std::size_t k = lo.coords().size(), i = 0;
  while (i < k && lo[i].is_integer()) ++i;
  std::vector<Rational> c = lo.coords();
  c[i] = ceil_div(lo[i]);
  std::vector<std::vector<Rational>> candidates;
  for (std::size_t j = i + 1; j < k; ++j) c[j] = 0;
  candidates.push_back(c);
  for (std::size_t j = i + 1; j < k; ++j) c[j] = floor_div(hi[j]);
  candidates.push_back(c);
  std::vector<Rational> h = hi.coords();
  for (auto& x : h) x = floor_div(x);
  candidates.push_back(h);
  for (auto& cand : candidates) {
    LambdaElement x = LambdaElement::unchecked(g, cand);
    if (x.representable() && lo <= x && x <= hi) return x;
  }
  return std::nullopt;
}

std::optional<LambdaElement> highest_in(const LambdaElement& lo, const LambdaElement& hi) {
  auto r = lowest_in(-hi, -lo);
  if (!r) return std::nullopt;
  return -*r;
}

// Whether an edge of length L has representable interior points.
bool has_interior(const LambdaElement& L) {
  if (L.group().dyadic_allowed) return true;
  std::vector<Rational> unit(L.coords().size(), 0);
  unit.back() = 1;
  return !(L.coords() == unit);
}

bool strictly_inside(const LambdaElement& x, const LambdaElement& L) { return x.is_positive() && x < L; }

// Keeps an interval only if it holds a representable interior point.
bool interval_worth_keeping(const LambdaElement& lo, const LambdaElement& hi, const LambdaElement& L) {
  auto r1 = lowest_in(lo, hi), r2 = highest_in(lo, hi);
  if (!r1) return false;
  if (strictly_inside(*r1, L) || strictly_inside(*r2, L)) return true;
  return r1->is_zero() && *r2 == L && has_interior(L);
}

void sort_unique(std::vector<std::size_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

// ---------------------------------------------------------------------------
// PointSet

bool PointSet::contains(const LambdaTree& t, const TreePoint& p) const {
  if (p.is_vertex()) return std::binary_search(vertices.begin(), vertices.end(), p.vertex());
  for (const auto& iv : intervals)
    if (iv.edge == p.edge() && iv.lo <= p.offset() && p.offset() <= iv.hi) return true;
  (void)t;
  return false;
}

std::vector<TreePoint> PointSet::extreme_points(const LambdaTree& t) const {
  std::vector<TreePoint> out;
  for (std::size_t v : vertices) out.push_back(TreePoint::at_vertex(v));
  auto add = [&](const TreePoint& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  for (const auto& iv : intervals) {
    if (auto r = lowest_in(iv.lo, iv.hi)) add(t.point_on_edge(iv.edge, *r));
    if (auto r = highest_in(iv.lo, iv.hi)) add(t.point_on_edge(iv.edge, *r));
  }
  return out;
}

TreePoint PointSet::some_point(const LambdaTree& t) const {
  if (!vertices.empty()) return TreePoint::at_vertex(vertices.front());
  for (const auto& iv : intervals)
    if (auto r = lowest_in(iv.lo, iv.hi)) return t.point_on_edge(iv.edge, *r);
  fail(ErrorCode::DomainError, "empty point set");
}

LambdaElement PointSet::distance_to(const LambdaTree& t, const TreePoint& p) const {
  std::optional<LambdaElement> best;
  auto offer = [&](LambdaElement d) {
    if (!best || d < *best) best = std::move(d);
  };
  for (std::size_t v : vertices) offer(t.distance(p, TreePoint::at_vertex(v)));
  for (const auto& iv : intervals) {
    auto r1 = lowest_in(iv.lo, iv.hi), r2 = highest_in(iv.lo, iv.hi);
    if (!r1) continue;
    TreePoint a = t.point_on_edge(iv.edge, *r1), b = t.point_on_edge(iv.edge, *r2);
    offer((t.distance(p, a) + t.distance(p, b) - t.distance(a, b)).half());
  }
  if (!best) fail(ErrorCode::DomainError, "distance to an empty point set");
  return *best;
}

std::string PointSet::describe(const LambdaTree& t) const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (std::size_t v : vertices) {
    out << (first ? "" : ", ") << t.vertex_name(v);
    first = false;
  }
  for (const auto& iv : intervals) {
    out << (first ? "" : ", ") << t.edge(iv.edge).name << "[" << iv.lo.str() << ", " << iv.hi.str() << "]";
    first = false;
  }
  out << "}";
  return out.str();
}

PointSet intersect(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                        std::back_inserter(out.vertices));
  for (const auto& x : a.intervals)
    for (const auto& y : b.intervals) {
      if (x.edge != y.edge) continue;
      LambdaElement lo = max(x.lo, y.lo), hi = min(x.hi, y.hi);
      if (hi < lo || !lowest_in(lo, hi)) continue;
      out.intervals.push_back({x.edge, lo, hi});
    }
  return out;
}

// ---------------------------------------------------------------------------
// TreeIsometry

TreeIsometry::TreeIsometry(std::shared_ptr<const LambdaTree> tree, std::vector<std::optional<TreePoint>> images)
    : tree_(std::move(tree)), images_(std::move(images)) {
  validate();
}

TreeIsometry TreeIsometry::identity(std::shared_ptr<const LambdaTree> tree) {
  std::vector<std::optional<TreePoint>> images;
  for (std::size_t v = 0; v < tree->vertex_count(); ++v) images.push_back(TreePoint::at_vertex(v));
  return TreeIsometry(std::move(tree), std::move(images), Unchecked{});
}

void TreeIsometry::validate() const {
  const LambdaTree& t = *tree_;
  if (images_.size() != t.vertex_count())
    fail(ErrorCode::NotAnIsometry, "expected one image slot per vertex");
  for (const auto& img : images_)
    if (img && !t.contains(*img)) fail(ErrorCode::NotAnIsometry, "image is not a point of the tree");

  for (const auto& e : t.edges()) {
    if (!images_[e.a] || !images_[e.b]) continue;
    if (!(t.distance(*images_[e.a], *images_[e.b]) == e.length))
      fail(ErrorCode::NotAnIsometry, "edge " + e.name + " is not mapped isometrically");
  }
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    if (!images_[v]) continue;
    const auto& inc = t.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        std::size_t u = inc[i].vertex, w = inc[j].vertex;
        if (!images_[u] || !images_[w]) continue;
        LambdaElement want = t.edge(inc[i].edge).length + t.edge(inc[j].edge).length;
        if (!(t.distance(*images_[u], *images_[w]) == want))
          fail(ErrorCode::NotAnIsometry, "edges at " + t.vertex_name(v) + " are folded together");
      }
  }

  // Local checks suffice on a connected domain; otherwise compare pairs.
  std::vector<std::size_t> comp(t.vertex_count());
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (const auto& e : t.edges())
    if (images_[e.a] && images_[e.b]) comp[find(e.a)] = find(e.b);
  std::vector<std::size_t> domain;
  for (std::size_t v = 0; v < t.vertex_count(); ++v)
    if (images_[v]) domain.push_back(v);
  for (std::size_t i = 0; i < domain.size(); ++i)
    for (std::size_t j = i + 1; j < domain.size(); ++j) {
      std::size_t u = domain[i], w = domain[j];
      if (find(u) == find(w)) continue;
      if (!(t.distance(*images_[u], *images_[w]) == t.vertex_distance(u, w)))
        fail(ErrorCode::NotAnIsometry,
             "distance between " + t.vertex_name(u) + " and " + t.vertex_name(w) + " is not preserved");
    }
}

bool TreeIsometry::defined_at(const TreePoint& p) const {
  if (p.is_vertex()) return images_.at(p.vertex()).has_value();
  const TreeEdge& e = tree_->edge(p.edge());
  return images_[e.a] && images_[e.b];
}

bool TreeIsometry::total() const {
  return std::all_of(images_.begin(), images_.end(), [](const auto& x) { return x.has_value(); });
}

std::optional<TreePoint> TreeIsometry::try_apply(const TreePoint& p) const {
  tree_->check_point(p);
  if (p.is_vertex()) return images_[p.vertex()];
  const TreeEdge& e = tree_->edge(p.edge());
  if (!images_[e.a] || !images_[e.b]) return std::nullopt;
  return tree_->point_along(*images_[e.a], *images_[e.b], p.offset());
}

TreePoint TreeIsometry::apply(const TreePoint& p) const {
  auto q = try_apply(p);
  if (!q) fail(ErrorCode::OrbitEscapesTree, "no image for " + tree_->point_str(p) + " inside the tree");
  return *q;
}

bool operator==(const TreeIsometry& a, const TreeIsometry& b) {
  return (a.tree_ == b.tree_ || *a.tree_ == *b.tree_) && a.images_ == b.images_;
}

TreeIsometry compose(const TreeIsometry& phi, const TreeIsometry& psi) {
  if (phi.tree_ != psi.tree_ && !(*phi.tree_ == *psi.tree_))
    fail(ErrorCode::TreeMismatch, "isometries act on different trees");
  std::vector<std::optional<TreePoint>> images(psi.images_.size());
  for (std::size_t v = 0; v < images.size(); ++v)
    if (psi.images_[v]) images[v] = phi.try_apply(*psi.images_[v]);
  return TreeIsometry(phi.tree_, std::move(images), TreeIsometry::Unchecked{});
}

TreeIsometry inverse(const TreeIsometry& phi) {
  const LambdaTree& t = phi.tree();
  std::vector<std::optional<TreePoint>> images(t.vertex_count());
  for (std::size_t v = 0; v < t.vertex_count(); ++v)
    if (phi.images_[v] && phi.images_[v]->is_vertex()) images[phi.images_[v]->vertex()] = TreePoint::at_vertex(v);
  // Edges whose image is a single edge of the tree cover no vertex in their interior.
  std::vector<std::size_t> spanning;
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    const TreeEdge& ed = t.edge(e);
    const auto &x = phi.images_[ed.a], &y = phi.images_[ed.b];
    if (!x || !y) continue;
    if (x->is_vertex() && y->is_vertex() && t.edge_between(x->vertex(), y->vertex())) continue;
    spanning.push_back(e);
  }
  for (std::size_t w = 0; w < t.vertex_count(); ++w) {
    if (images[w]) continue;
    TreePoint target = TreePoint::at_vertex(w);
    for (std::size_t e : spanning) {
      const TreeEdge& ed = t.edge(e);
      if (!t.on_segment(target, *phi.images_[ed.a], *phi.images_[ed.b])) continue;
      images[w] = t.point_on_edge(e, t.distance(*phi.images_[ed.a], target));
      break;
    }
  }
  return TreeIsometry(phi.tree_, std::move(images), TreeIsometry::Unchecked{});
}

TreeIsometry base_change(const TreeIsometry& phi, std::shared_ptr<const LambdaTree> changed) {
  std::vector<std::optional<TreePoint>> images;
  for (const auto& img : phi.images_)
    images.push_back(img ? std::optional<TreePoint>(base_change_point(*changed, *img)) : std::nullopt);
  return TreeIsometry(std::move(changed), std::move(images), TreeIsometry::Unchecked{});
}

LambdaElement displacement(const TreeIsometry& phi, const TreePoint& p) {
  return phi.tree().distance(p, phi.apply(p));
}

// ---------------------------------------------------------------------------
// Sublevel sets of the displacement function

namespace {

// Offsets s in [0, L] of edge e with d(x(s), φx(s)) <= bound, computed in a
// tree where halves are representable. The displacement is convex and
// piecewise linear with slopes in {-2, 0, 2}; its kinks sit where x(s) or
// φx(s) passes a projection point, or at a crossing with value 0.
std::optional<std::pair<LambdaElement, LambdaElement>> edge_sublevel(const TreeIsometry& phi, std::size_t e,
                                                                     const LambdaElement& bound) {
  const LambdaTree& t = phi.tree();
  const TreeEdge& ed = t.edge(e);
  TreePoint a = TreePoint::at_vertex(ed.a), b = TreePoint::at_vertex(ed.b);
  TreePoint c = *phi.images()[ed.a], d = *phi.images()[ed.b];
  const LambdaElement& L = ed.length;
  auto h = [&](const LambdaElement& s) { return t.distance(t.point_on_edge(e, s), t.point_along(c, d, s)); };

  LambdaElement A = t.distance(a, c), B = t.distance(b, d);
  std::vector<LambdaElement> cand{LambdaElement::zero(t.group()), L,
                                  t.distance(a, t.median(a, b, c)),
                                  t.distance(a, t.median(a, b, d)),
                                  t.distance(c, t.median(c, d, a)),
                                  t.distance(c, t.median(c, d, b)),
                                  A.half(),
                                  L - B.half()};
  std::vector<LambdaElement> s;
  for (auto& x : cand)
    if (!x.is_negative() && x <= L) s.push_back(x);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());

  std::vector<LambdaElement> hv;
  for (const auto& x : s) hv.push_back(h(x));
  std::optional<LambdaElement> lo, hi;
  auto cover = [&](const LambdaElement& u, const LambdaElement& w) {
    if (w < u) return;
    if (!lo || u < *lo) lo = u;
    if (!hi || *hi < w) hi = w;
  };
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const LambdaElement &u = s[i], &w = s[i + 1], &hu = hv[i], &hw = hv[i + 1];
    LambdaElement run = w - u, rise = hw - hu;
    if (rise.is_zero()) {
      if (hu <= bound) cover(u, w);
    } else if (rise == run * -2) {
      if (hw <= bound) cover(max(u, u + (hu - bound).half()), w);
    } else if (rise == run * 2) {
      if (hu <= bound) cover(u, min(w, u + (bound - hu).half()));
    } else {
      fail(ErrorCode::NotAnIsometry, "displacement along edge " + ed.name + " is not piecewise linear");
    }
  }
  if (s.size() == 1 && hv[0] <= bound) cover(s[0], s[0]);
  if (!lo) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

}  // namespace

PointSet displacement_sublevel(const TreeIsometry& phi, const LambdaElement& bound) {
  const LambdaTree& t = phi.tree();
  PointSet out;
  std::vector<std::optional<LambdaElement>> disp(t.vertex_count());
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    if (!phi.defined_at(v)) continue;
    disp[v] = t.distance(TreePoint::at_vertex(v), *phi.images()[v]);
    if (*disp[v] <= bound) out.vertices.push_back(v);
  }

  std::shared_ptr<const LambdaTree> half_tree;
  std::optional<TreeIsometry> half_phi;
  LambdaGroup hg = t.group().with_half();
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    const TreeEdge& ed = t.edge(e);
    if (!disp[ed.a] || !disp[ed.b]) continue;
    // Lipschitz bound: h(s) >= (h(0) + h(L))/2 - L on the whole edge.
    if (((*disp[ed.a] + *disp[ed.b]).half() - ed.length) > bound) continue;
    if (!half_phi) {
      half_tree = t.group() == hg ? phi.tree_ptr() : std::make_shared<const LambdaTree>(base_change(t, hg));
      half_phi = half_tree == phi.tree_ptr() ? phi : base_change(phi, half_tree);
    }
    auto range = edge_sublevel(*half_phi, e, embed(bound, hg));
    if (!range) continue;
    LambdaElement lo = recast(range->first, t.group()), hi = recast(range->second, t.group());
    if (interval_worth_keeping(lo, hi, ed.length)) out.intervals.push_back({e, lo, hi});
  }
  sort_unique(out.vertices);
  return out;
}

PointSet fixed_set(const TreeIsometry& phi) {
  return displacement_sublevel(phi, LambdaElement::zero(phi.tree().group()));
}

std::string_view isometry_kind_name(IsometryKind k) {
  switch (k) {
    case IsometryKind::elliptic: return "elliptic";
    case IsometryKind::inversion: return "inversion";
    case IsometryKind::hyperbolic: return "hyperbolic";
  }
  return "";
}

IsometryClass classify(const TreeIsometry& phi) {
  const LambdaTree& t = phi.tree();
  LambdaElement zero = LambdaElement::zero(t.group());
  PointSet fixed = fixed_set(phi);
  if (!fixed.empty()) return {IsometryKind::elliptic, zero, std::move(fixed), std::nullopt, {}};

  TreeIsometry square = compose(phi, phi);
  PointSet fixed2 = fixed_set(square);
  if (!fixed2.empty()) {
    std::optional<Segment> best;
    for (const TreePoint& x : fixed2.extreme_points(t)) {
      auto y = phi.try_apply(x);
      if (!y) continue;
      Segment s = t.segment(x, *y);
      if (!best || s.length < best->length) best = std::move(s);
    }
    if (!best) fail(ErrorCode::OrbitEscapesTree, "flipped segment leaves the tree");
    return {IsometryKind::inversion, zero, {}, std::move(best), {}};
  }

  // Hyperbolic: d(x, φ²x) = d(x, φx) + τ at every point.
  std::optional<LambdaElement> shift;
  for (std::size_t v = 0; v < t.vertex_count() && !shift; ++v) {
    if (!square.defined_at(v)) continue;
    TreePoint x = TreePoint::at_vertex(v);
    LambdaElement d1 = t.distance(x, *phi.images()[v]), d2 = t.distance(x, *square.images()[v]);
    if (d1 < d2) shift = d2 - d1;
  }
  if (!shift) fail(ErrorCode::OrbitEscapesTree, "the characteristic set of the isometry lies outside the tree");
  LambdaElement square_length = *shift * 2;
  if (!in_two_lambda(square_length)) fail(ErrorCode::NotInGroup, "translation length is not in the group");
  LambdaElement tau = recast(halve(square_length), t.group());
  PointSet axis = displacement_sublevel(phi, tau);
  if (axis.empty()) fail(ErrorCode::OrbitEscapesTree, "the axis of the isometry lies outside the tree");
  return {IsometryKind::hyperbolic, tau, {}, std::nullopt, std::move(axis)};
}

// ---------------------------------------------------------------------------
// Common fixed points

CommonFixedPoint common_fixed_point(const TreeIsometry& phi, const TreeIsometry& psi) {
  if (phi.tree_ptr() != psi.tree_ptr() && !(phi.tree() == psi.tree()))
    fail(ErrorCode::TreeMismatch, "isometries act on different trees");
  const LambdaTree& t = phi.tree();
  IsometryClass cphi = classify(phi), cpsi = classify(psi);
  CommonFixedPoint out;
  out.kinds = {cphi.kind, cpsi.kind};
  if (cphi.kind != IsometryKind::elliptic || cpsi.kind != IsometryKind::elliptic) return out;

  PointSet both = intersect(cphi.fixed_set, cpsi.fixed_set);
  if (!both.empty()) {
    out.point = both.some_point(t);
    return out;
  }
  std::optional<Bridge> bridge;
  auto ends_phi = cphi.fixed_set.extreme_points(t), ends_psi = cpsi.fixed_set.extreme_points(t);
  for (const auto& p : ends_phi)
    for (const auto& q : ends_psi) {
      LambdaElement d = t.distance(p, q);
      if (!bridge || d < bridge->length) bridge = Bridge{p, q, d};
    }
  out.bridge = bridge;
  try {
    out.composite = classify(compose(phi, psi));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OrbitEscapesTree) throw;
  }
  return out;
}

std::optional<TreePoint> common_fixed_point(const std::vector<TreeIsometry>& family) {
  if (family.empty()) return std::nullopt;
  PointSet common = fixed_set(family.front());
  for (std::size_t i = 1; i < family.size() && !common.empty(); ++i) {
    if (family[i].tree_ptr() != family[0].tree_ptr() && !(family[i].tree() == family[0].tree()))
      fail(ErrorCode::TreeMismatch, "isometries act on different trees");
    common = intersect(common, fixed_set(family[i]));
  }
  if (common.empty()) return std::nullopt;
  return common.some_point(family.front().tree());
}

}  // namespace ltree
