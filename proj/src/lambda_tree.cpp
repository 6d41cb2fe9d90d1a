#include "ltree/lambda_tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "ltree/error.hpp"

namespace ltree {

bool operator==(const TreePoint& a, const TreePoint& b) {
  if (a.is_vertex() != b.is_vertex() || a.index_ != b.index_) return false;
  return a.is_vertex() || a.offset().coords() == b.offset().coords();
}

std::string_view point_kind_name(PointKind k) {
  switch (k) {
    case PointKind::isolated: return "isolated";
    case PointKind::dead_end: return "dead_end";
    case PointKind::regular: return "regular";
    case PointKind::branch: return "branch";
  }
  return "";
}

namespace {

std::vector<TreeEdge> resolve_edges(const MetricGraph& g) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!index.emplace(g.vertices[i], i).second)
      fail(ErrorCode::InvalidTree, "duplicate vertex '" + g.vertices[i] + "'");
  }
  std::vector<TreeEdge> out;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const EdgeSpec& e = g.edges[i];
    auto a = index.find(e.a), b = index.find(e.b);
    if (a == index.end() || b == index.end())
      fail(ErrorCode::InvalidTree, "edge endpoint not declared: " + e.a + " - " + e.b);
    out.push_back({e.name.empty() ? "e" + std::to_string(i) : e.name, a->second, b->second, e.length});
  }
  return out;
}

}  // namespace

LambdaTree::LambdaTree(const MetricGraph& graph)
    : LambdaTree(graph.group, graph.vertices, resolve_edges(graph)) {}

LambdaTree::LambdaTree(LambdaGroup group, std::vector<std::string> vertices, std::vector<TreeEdge> edges)
    : group_(group), names_(std::move(vertices)), edges_(std::move(edges)) {
  build();
}

void LambdaTree::build() {
  const std::size_t n = names_.size();
  if (n == 0) fail(ErrorCode::InvalidTree, "a tree needs at least one vertex");
  if (edges_.size() != n - 1)
    fail(ErrorCode::InvalidTree, "a tree on " + std::to_string(n) + " vertices has " +
                                     std::to_string(n - 1) + " edges, got " + std::to_string(edges_.size()));
  adj_.assign(n, {});
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const TreeEdge& e = edges_[i];
    if (e.a >= n || e.b >= n || e.a == e.b) fail(ErrorCode::InvalidTree, "bad endpoints on edge " + e.name);
    if (!(e.length.group() == group_) || !e.length.representable())
      fail(ErrorCode::InvalidTree, "edge " + e.name + " length not in " + describe(group_));
    if (!e.length.is_positive()) fail(ErrorCode::InvalidTree, "edge " + e.name + " has nonpositive length");
    if (!seen.emplace(e.name, i).second) fail(ErrorCode::InvalidTree, "duplicate edge name " + e.name);
    adj_[e.a].push_back({e.b, i});
    adj_[e.b].push_back({e.a, i});
  }
  parent_.assign(n, SIZE_MAX);
  level_.assign(n, -1);
  depth_.assign(n, LambdaElement::zero(group_));
  std::deque<std::size_t> queue{0};
  level_[0] = 0;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& [w, e] : adj_[v]) {
      if (level_[w] >= 0) continue;
      level_[w] = level_[v] + 1;
      parent_[w] = v;
      depth_[w] = depth_[v] + edges_[e].length;
      queue.push_back(w);
      ++reached;
    }
  }
  if (reached != n) fail(ErrorCode::InvalidTree, "graph is not connected");
}

std::optional<std::size_t> LambdaTree::find_vertex(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::optional<std::size_t> LambdaTree::find_edge(const std::string& name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> LambdaTree::edge_between(std::size_t u, std::size_t v) const {
  for (const auto& inc : adj_.at(u))
    if (inc.vertex == v) return inc.edge;
  return std::nullopt;
}

MetricGraph LambdaTree::to_graph() const {
  MetricGraph g{group_, names_, {}};
  for (const auto& e : edges_) g.edges.push_back({e.name, names_[e.a], names_[e.b], e.length});
  return g;
}

TreePoint LambdaTree::point_on_edge(std::size_t e, const LambdaElement& offset) const {
  if (e >= edges_.size()) fail(ErrorCode::InvalidPoint, "no edge with index " + std::to_string(e));
  const TreeEdge& ed = edges_[e];
  if (!(offset.group() == group_)) fail(ErrorCode::InvalidPoint, "offset from another group");
  if (offset.is_negative() || ed.length < offset)
    fail(ErrorCode::InvalidPoint, "offset " + offset.str() + " outside edge " + ed.name);
  if (!offset.representable())
    fail(ErrorCode::InvalidPoint, "offset " + offset.str() + " is not in " + describe(group_));
  if (offset.is_zero()) return TreePoint::at_vertex(ed.a);
  if (offset == ed.length) return TreePoint::at_vertex(ed.b);
  return TreePoint(e, offset);
}

TreePoint LambdaTree::point_on_edge_from(std::size_t e, std::size_t from, const LambdaElement& s) const {
  const TreeEdge& ed = edges_.at(e);
  if (from == ed.a) return point_on_edge(e, s);
  if (from == ed.b) return point_on_edge(e, ed.length - s);
  fail(ErrorCode::InvalidPoint, "vertex is not an endpoint of edge " + ed.name);
}

void LambdaTree::check_point(const TreePoint& p) const {
  if (p.is_vertex()) {
    if (p.vertex() >= names_.size()) fail(ErrorCode::InvalidPoint, "no such vertex");
    return;
  }
  if (p.edge() >= edges_.size()) fail(ErrorCode::InvalidPoint, "no such edge");
  const LambdaElement& off = p.offset();
  if (!(off.group() == group_) || !off.representable() || !off.is_positive() ||
      !(off < edges_[p.edge()].length))
    fail(ErrorCode::InvalidPoint, "offset not strictly inside edge " + edges_[p.edge()].name);
}

bool LambdaTree::contains(const TreePoint& p) const {
  try {
    check_point(p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::string LambdaTree::point_str(const TreePoint& p) const {
  if (p.is_vertex()) return names_.at(p.vertex());
  return edges_.at(p.edge()).name + "@" + p.offset().str();
}

LambdaElement LambdaTree::vertex_distance(std::size_t u, std::size_t v) const {
  std::size_t x = u, y = v;
  while (level_[x] > level_[y]) x = parent_[x];
  while (level_[y] > level_[x]) y = parent_[y];
  while (x != y) {
    x = parent_[x];
    y = parent_[y];
  }
  return depth_[u] + depth_[v] - depth_[x] * 2;
}

std::vector<std::size_t> LambdaTree::vertex_path(std::size_t u, std::size_t v) const {
  std::vector<std::size_t> front, back;
  std::size_t x = u, y = v;
  while (level_[x] > level_[y]) {
    front.push_back(x);
    x = parent_[x];
  }
  while (level_[y] > level_[x]) {
    back.push_back(y);
    y = parent_[y];
  }
  while (x != y) {
    front.push_back(x);
    back.push_back(y);
    x = parent_[x];
    y = parent_[y];
  }
  front.push_back(x);
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

// Endpoint of p's edge through which every path from p to `toward` leaves.
// Requires toward not on the closure of p's edge.
std::size_t LambdaTree::exit_vertex(const TreePoint& p, const TreePoint& toward) const {
  const TreeEdge& e = edges_[p.edge()];
  std::size_t anchor = toward.is_vertex() ? toward.vertex() : edges_[toward.edge()].a;
  return vertex_distance(e.a, anchor) < vertex_distance(e.b, anchor) ? e.a : e.b;
}

std::vector<TreePoint> LambdaTree::route(const TreePoint& p, const TreePoint& q) const {
  check_point(p);
  check_point(q);
  if (p == q) return {p};
  // Same closed edge.
  if (!p.is_vertex() && !q.is_vertex() && p.edge() == q.edge()) return {p, q};
  auto on_closure = [&](const TreePoint& inner, const TreePoint& v) {
    return !inner.is_vertex() && v.is_vertex() &&
           (edges_[inner.edge()].a == v.vertex() || edges_[inner.edge()].b == v.vertex());
  };
  if (on_closure(p, q) || on_closure(q, p)) return {p, q};

  std::size_t from = p.is_vertex() ? p.vertex() : exit_vertex(p, q);
  std::size_t to = q.is_vertex() ? q.vertex() : exit_vertex(q, TreePoint::at_vertex(from));
  std::vector<TreePoint> out;
  if (!p.is_vertex()) out.push_back(p);
  for (std::size_t v : vertex_path(from, to)) out.push_back(TreePoint::at_vertex(v));
  if (!q.is_vertex()) out.push_back(q);
  return out;
}

std::size_t LambdaTree::leg_edge(const TreePoint& s, const TreePoint& t) const {
  if (!s.is_vertex()) return s.edge();
  if (!t.is_vertex()) return t.edge();
  auto e = edge_between(s.vertex(), t.vertex());
  if (!e) fail(ErrorCode::InvalidPoint, "stations are not adjacent");
  return *e;
}

LambdaElement LambdaTree::position_on(std::size_t e, const TreePoint& p) const {
  const TreeEdge& ed = edges_[e];
  if (!p.is_vertex()) return p.offset();
  return p.vertex() == ed.a ? LambdaElement::zero(group_) : ed.length;
}

LambdaElement LambdaTree::distance(const TreePoint& p, const TreePoint& q) const {
  if (p.is_vertex() && q.is_vertex()) {
    check_point(p);
    check_point(q);
    return vertex_distance(p.vertex(), q.vertex());
  }
  auto stations = route(p, q);
  if (stations.size() == 1) return LambdaElement::zero(group_);
  LambdaElement total = LambdaElement::zero(group_);
  // Interior stations are vertices; only the two end legs involve offsets.
  std::size_t first = 0, last = stations.size() - 1;
  auto leg = [&](const TreePoint& s, const TreePoint& t) {
    std::size_t e = leg_edge(s, t);
    return abs(position_on(e, t) - position_on(e, s));
  };
  if (stations.size() == 2) return leg(stations[0], stations[1]);
  if (!stations[first].is_vertex()) total += leg(stations[0], stations[1]), ++first;
  if (!stations[last].is_vertex()) total += leg(stations[last - 1], stations[last]), --last;
  total += vertex_distance(stations[first].vertex(), stations[last].vertex());
  return total;
}

Segment LambdaTree::segment(const TreePoint& p, const TreePoint& q) const {
  auto stations = route(p, q);
  Segment s{p, q, {}, distance(p, q)};
  for (std::size_t i = 1; i + 1 < stations.size(); ++i) s.vertex_path.push_back(stations[i].vertex());
  return s;
}

TreePoint LambdaTree::point_along(const TreePoint& p, const TreePoint& q, const LambdaElement& s) const {
  auto stations = route(p, q);
  if (s.is_negative()) fail(ErrorCode::InvalidPoint, "negative distance along segment");
  LambdaElement cum = LambdaElement::zero(group_);
  for (std::size_t i = 0; i + 1 < stations.size(); ++i) {
    std::size_t e = leg_edge(stations[i], stations[i + 1]);
    LambdaElement from = position_on(e, stations[i]);
    LambdaElement to = position_on(e, stations[i + 1]);
    LambdaElement len = abs(to - from);
    if (s <= cum + len) {
      LambdaElement step = s - cum;
      return point_on_edge(e, from < to ? from + step : from - step);
    }
    cum += len;
  }
  if (s == cum) return q;
  fail(ErrorCode::InvalidPoint, "distance " + s.str() + " exceeds segment length " + cum.str());
}

TreePoint LambdaTree::median(const TreePoint& p, const TreePoint& q, const TreePoint& r) const {
  LambdaElement gromov = (distance(p, q) + distance(p, r) - distance(q, r)).half();
  return point_along(p, q, gromov);
}

bool LambdaTree::on_segment(const TreePoint& x, const TreePoint& p, const TreePoint& q) const {
  return distance(p, x) + distance(x, q) == distance(p, q);
}

PointClass LambdaTree::classify_point(const TreePoint& p) const {
  check_point(p);
  std::size_t dirs = p.is_vertex() ? degree(p.vertex()) : 2;
  PointKind k = dirs == 0 ? PointKind::isolated
                : dirs == 1 ? PointKind::dead_end
                : dirs == 2 ? PointKind::regular
                            : PointKind::branch;
  return {k, dirs};
}

TreePoint LambdaTree::sample_point(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> coin(0, 2);
  if (edges_.empty() || coin(rng) == 0) {
    std::uniform_int_distribution<std::size_t> pick(0, names_.size() - 1);
    return TreePoint::at_vertex(pick(rng));
  }
  std::uniform_int_distribution<std::size_t> pick_edge(0, edges_.size() - 1);
  std::size_t e = pick_edge(rng);
  const LambdaElement& len = edges_[e].length;
  std::int64_t bound = 2;
  for (const auto& c : len.coords()) bound = std::max<std::int64_t>(bound, std::llabs(c.num() / c.den()) + 2);
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  std::uniform_int_distribution<int> denom(0, group_.dyadic_allowed ? 2 : 0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rational> c(group_.rank_k);
    for (auto& x : c) x = Rational(coord(rng), std::int64_t{1} << denom(rng));
    // Bias toward a leading coordinate within range.
    if (attempt % 2 == 0) {
      std::uniform_int_distribution<std::size_t> lead(0, c.size() - 1);
      std::size_t k = lead(rng);
      for (std::size_t i = 0; i < k; ++i) c[i] = len[i];
    }
    auto off = LambdaElement::unchecked(group_, c);
    if (off.is_positive() && off < len && off.representable()) return TreePoint(e, off);
  }
  return TreePoint::at_vertex(edges_[e].a);
}

bool operator==(const LambdaTree& a, const LambdaTree& b) {
  if (!(a.group_ == b.group_) || a.names_ != b.names_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto &x = a.edges_[i], &y = b.edges_[i];
    if (x.name != y.name || x.a != y.a || x.b != y.b || !(x.length == y.length)) return false;
  }
  return true;
}

LambdaTree base_change(const LambdaTree& tree, const LambdaGroup& target) {
  if (!embeds_into(tree.group(), target))
    fail(ErrorCode::EmbeddingError, "no order embedding " + describe(tree.group()) + " -> " + describe(target));
  std::vector<TreeEdge> edges;
  for (const auto& e : tree.edges()) edges.push_back({e.name, e.a, e.b, embed(e.length, target)});
  return LambdaTree(target, tree.vertex_names(), std::move(edges));
}

TreePoint base_change_point(const LambdaTree& changed, const TreePoint& p) {
  if (p.is_vertex()) return p;
  return changed.point_on_edge(p.edge(), embed(p.offset(), changed.group()));
}

// ---------------------------------------------------------------------------
// Convex quotients

TreePoint QuotientTree::map_point(const LambdaTree& source, const TreePoint& p) const {
  source.check_point(p);
  if (p.is_vertex()) return TreePoint::at_vertex(vertex_map[p.vertex()]);
  const TreeEdge& e = source.edge(p.edge());
  auto image = edge_map[p.edge()];
  if (!image) return TreePoint::at_vertex(vertex_map[e.a]);
  // Quotient edges keep the orientation of their source edge.
  return tree.point_on_edge(*image, convex_quotient(p.offset(), subgroup));
}

QuotientTree convex_quotient_tree(const LambdaTree& tree, const ConvexSubgroup& s) {
  LambdaGroup qg = quotient_group(tree.group(), s);
  const std::size_t n = tree.vertex_count();
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& e : tree.edges())
    if (in_subgroup(e.length, s)) {
      std::size_t a = find(e.a), b = find(e.b);
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }

  std::vector<std::size_t> new_index(n, SIZE_MAX), vertex_map(n);
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = find(v);
    if (new_index[r] == SIZE_MAX) {
      new_index[r] = names.size();
      names.push_back(tree.vertex_name(r));
      members.emplace_back();
    }
    vertex_map[v] = new_index[r];
    members[new_index[r]].push_back(v);
  }

  std::vector<TreeEdge> edges;
  std::vector<std::optional<std::size_t>> edge_map(tree.edge_count());
  for (std::size_t i = 0; i < tree.edge_count(); ++i) {
    const TreeEdge& e = tree.edge(i);
    if (in_subgroup(e.length, s)) continue;
    edge_map[i] = edges.size();
    edges.push_back({e.name, vertex_map[e.a], vertex_map[e.b], convex_quotient(e.length, s)});
  }

  std::vector<LambdaTree> fibers;
  for (const auto& group : members) {
    std::vector<std::size_t> local(n, SIZE_MAX);
    std::vector<std::string> fnames;
    for (std::size_t v : group) {
      local[v] = fnames.size();
      fnames.push_back(tree.vertex_name(v));
    }
    std::vector<TreeEdge> fedges;
    for (const auto& e : tree.edges())
      if (in_subgroup(e.length, s) && local[e.a] != SIZE_MAX)
        fedges.push_back({e.name, local[e.a], local[e.b], e.length});
    fibers.emplace_back(tree.group(), std::move(fnames), std::move(fedges));
  }

  return QuotientTree{LambdaTree(qg, std::move(names), std::move(edges)), s, std::move(vertex_map),
                      std::move(edge_map), std::move(fibers)};
}

// ---------------------------------------------------------------------------
// Axiom checking

namespace {

AxiomReport reject(std::string axiom, std::string witness) {
  AxiomReport r;
  r.ok = false;
  r.axiom = std::move(axiom);
  r.witness = std::move(witness);
  return r;
}

// Checks segment existence, intersection and concatenation on one triple.
std::optional<std::string> check_triple(const LambdaTree& t, const TreePoint& p, const TreePoint& q,
                                        const TreePoint& r, std::string& axiom) {
  auto name = [&](const TreePoint& x) { return t.point_str(x); };
  LambdaElement pq = t.distance(p, q), qp = t.distance(q, p);
  LambdaElement pr = t.distance(p, r), qr = t.distance(q, r);
  axiom = "metric";
  if (!(pq == qp)) return "d(" + name(p) + "," + name(q) + ") is not symmetric";
  if ((pq.is_zero()) != (p == q)) return "d(" + name(p) + "," + name(q) + ") = 0 for distinct points";
  if (pr > pq + qr) return "triangle inequality fails at " + name(p) + "," + name(q) + "," + name(r);

  axiom = "a";
  auto stations = t.route(p, q);
  LambdaElement walked = LambdaElement::zero(t.group());
  for (std::size_t i = 0; i + 1 < stations.size(); ++i) {
    std::size_t e = t.leg_edge(stations[i], stations[i + 1]);
    walked += abs(t.position_on(e, stations[i + 1]) - t.position_on(e, stations[i]));
  }
  if (!(walked == pq)) return "no segment of length d(" + name(p) + "," + name(q) + ")";

  axiom = "b";
  TreePoint m = t.median(p, q, r);
  LambdaElement gromov = (pq + pr - qr).half();
  if (!t.on_segment(m, p, q) || !t.on_segment(m, p, r) || !t.on_segment(m, q, r) ||
      !(t.distance(p, m) == gromov))
    return "[" + name(p) + "," + name(q) + "] and [" + name(p) + "," + name(r) + "] meet outside a segment";
  for (const TreePoint& x : stations) {
    bool in_both = t.on_segment(x, p, r);
    bool expected = t.distance(p, x) <= gromov;
    if (in_both != expected)
      return "intersection of [" + name(p) + "," + name(q) + "] and [" + name(p) + "," + name(r) +
             "] is not the segment [" + name(p) + "," + name(m) + "]";
  }

  axiom = "c";
  if (m == q && !(pr == pq + qr))
    return "[" + name(p) + "," + name(q) + "] and [" + name(q) + "," + name(r) + "] meet only at " +
           name(q) + " but their union is not a segment";
  axiom.clear();
  return std::nullopt;
}

}  // namespace

AxiomReport check_axioms(const MetricGraph& graph, std::size_t sample_size, std::uint64_t seed) {
  const std::size_t n = graph.vertices.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(graph.vertices[i], i).second)
      return reject("metric", "duplicate vertex " + graph.vertices[i]);
  if (n == 0) return reject("a", "empty graph");

  std::vector<TreeEdge> edges;
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const EdgeSpec& e = graph.edges[i];
    std::string label = e.name.empty() ? "e" + std::to_string(i) : e.name;
    auto a = index.find(e.a), b = index.find(e.b);
    if (a == index.end() || b == index.end())
      return reject("metric", "edge " + label + " has an undeclared endpoint");
    if (!(e.length.group() == graph.group) || !e.length.representable())
      return reject("metric", "edge " + label + " length " + e.length.str() + " not in " + describe(graph.group));
    if (!e.length.is_positive()) return reject("metric", "edge " + label + " has nonpositive length");
    edges.push_back({label, a->second, b->second, e.length});
  }

  // Spanning forest; the first edge closing a cycle gives two arcs between
  // its endpoints.
  std::vector<std::vector<Incidence>> forest(n);
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const TreeEdge& e = edges[i];
    std::size_t ra = find(e.a), rb = find(e.b);
    if (ra != rb) {
      comp[std::max(ra, rb)] = std::min(ra, rb);
      forest[e.a].push_back({e.b, i});
      forest[e.b].push_back({e.a, i});
      continue;
    }
    // Path from e.a to e.b inside the forest.
    std::vector<std::size_t> prev(n, SIZE_MAX), prev_edge(n, SIZE_MAX);
    std::deque<std::size_t> queue{e.a};
    prev[e.a] = e.a;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& inc : forest[v])
        if (prev[inc.vertex] == SIZE_MAX) {
          prev[inc.vertex] = v;
          prev_edge[inc.vertex] = inc.edge;
          queue.push_back(inc.vertex);
        }
    }
    std::vector<std::string> direct{graph.vertices[e.a], e.name, graph.vertices[e.b]};
    std::vector<std::string> around;
    std::string via;
    for (std::size_t v = e.b;; v = prev[v]) {
      around.push_back(graph.vertices[v]);
      if (v == e.a) break;
      around.push_back(edges[prev_edge[v]].name);
      via = edges[prev_edge[v]].name + (via.empty() ? "" : "," + via);
    }
    std::reverse(around.begin(), around.end());
    AxiomReport r = reject("b", "two distinct segments from " + graph.vertices[e.a] + " to " +
                                    graph.vertices[e.b] + ": via edge " + e.name +
                                    (e.a == e.b ? "" : " and via edges " + via));
    r.arcs = {direct, around};
    return r;
  }
  for (std::size_t v = 1; v < n; ++v)
    if (find(v) != find(0))
      return reject("a", "no segment joins " + graph.vertices[0] + " and " + graph.vertices[v]);

  LambdaTree tree(graph.group, graph.vertices, std::move(edges));
  std::mt19937_64 rng(seed);
  AxiomReport report;
  for (std::size_t i = 0; i < sample_size; ++i) {
    TreePoint p = tree.sample_point(rng), q = tree.sample_point(rng), r = tree.sample_point(rng);
    std::string axiom;
    if (auto bad = check_triple(tree, p, q, r, axiom)) {
      AxiomReport fail_report = reject(axiom, *bad);
      fail_report.samples_checked = i + 1;
      return fail_report;
    }
    ++report.samples_checked;
  }
  return report;
}

}  // namespace ltree
