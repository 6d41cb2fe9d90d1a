#include "ltree/graph_of_groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>

#include <gmpxx.h>

#include "ltree/error.hpp"

namespace ltree {

namespace {

std::size_t vertex_index(const GraphOfGroups& g, const std::string& name) {
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (g.vertices[i].name == name) return i;
  fail(ErrorCode::InvalidGraph, "edge endpoint '" + name + "' is not a vertex");
}

struct Dsu {
  std::vector<std::size_t> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t v) {
    while (p[v] != v) v = p[v] = p[p[v]];
    return v;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Indices of spanning tree edges; NotConnected if none exists.
std::vector<bool> tree_mask(const GraphOfGroups& g, const TreeChoice& choice) {
  std::size_t n = g.vertices.size();
  if (n == 0) fail(ErrorCode::InvalidGraph, "graph of groups has no vertices");
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& e : g.edges) ends.push_back({vertex_index(g, e.tail), vertex_index(g, e.head)});
  std::vector<bool> in_tree(g.edges.size(), false);
  Dsu dsu(n);
  std::size_t joined = 0;

  if (choice.edges) {
    for (const auto& name : *choice.edges) {
      auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const GogEdge& e) { return e.name == name; });
      if (it == g.edges.end()) fail(ErrorCode::InvalidEdge, "no edge named '" + name + "'");
      std::size_t i = it - g.edges.begin();
      if (!dsu.unite(ends[i].first, ends[i].second))
        fail(ErrorCode::InvalidGraph, "chosen tree edges contain a cycle");
      in_tree[i] = true;
      ++joined;
    }
  } else if (choice.seed) {
    std::vector<std::size_t> order(g.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(*choice.seed);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i : order)
      if (dsu.unite(ends[i].first, ends[i].second)) {
        in_tree[i] = true;
        ++joined;
      }
  } else {
    std::size_t root = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (g.vertices[i].name < g.vertices[root].name) root = i;
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [a, b] = ends[i];
        std::size_t w;
        if (a == v) w = b;
        else if (b == v) w = a;
        else continue;
        if (seen[w]) continue;
        seen[w] = true;
        in_tree[i] = true;
        ++joined;
        queue.push_back(w);
      }
    }
  }
  if (joined != n - 1) fail(ErrorCode::NotConnected, "the underlying graph is not connected");
  return in_tree;
}

Word image(const std::map<std::string, Word>& m, const std::string& gen, const GogEdge& e) {
  auto it = m.find(gen);
  if (it == m.end()) fail(ErrorCode::SymbolError, "edge " + e.name + " has no image for generator " + gen);
  return it->second;
}

std::vector<std::string> all_vertex_gens(const GraphOfGroups& g) {
  std::vector<std::string> out;
  for (const auto& v : g.vertices) out.insert(out.end(), v.group.gens.begin(), v.group.gens.end());
  return out;
}

}  // namespace

std::vector<std::string> spanning_tree(const GraphOfGroups& g, const TreeChoice& choice) {
  auto mask = tree_mask(g, choice);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(g.edges[i].name);
  return out;
}

Presentation fundamental_group_presentation(const GraphOfGroups& g, const TreeChoice& choice) {
  auto in_tree = tree_mask(g, choice);
  Presentation out;
  out.gens = all_vertex_gens(g);
  std::set<std::string> taken(out.gens.begin(), out.gens.end());
  if (taken.size() != out.gens.size()) fail(ErrorCode::SymbolError, "vertex groups share a generator symbol");
  for (const auto& v : g.vertices)
    for (const auto& r : v.group.rels) out.rels.push_back(free_reduce(r));

  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (!in_tree[i]) continue;
    const GogEdge& e = g.edges[i];
    for (const auto& c : e.group.gens)
      out.rels.push_back(free_reduce(concat(image(e.to_tail, c, e), inverse(image(e.to_head, c, e)))));
  }

  std::size_t off_tree = std::count(in_tree.begin(), in_tree.end(), false);
  std::size_t counter = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (in_tree[i]) continue;
    const GogEdge& e = g.edges[i];
    std::string s = e.stable_letter;
    if (s.empty()) {
      s = off_tree == 1 ? "s" : "s" + std::to_string(++counter);
      while (taken.count(s)) s = "s" + std::to_string(++counter);
    }
    if (!taken.insert(s).second) fail(ErrorCode::SymbolError, "stable letter '" + s + "' is already a generator");
    out.gens.push_back(s);
    // s⁻¹ φ₁(c) s φ₀(c)⁻¹
    for (const auto& c : e.group.gens) {
      Word w{{s, true}};
      w = concat(w, image(e.to_head, c, e));
      w.push_back({s, false});
      out.rels.push_back(free_reduce(concat(w, inverse(image(e.to_tail, c, e)))));
    }
  }
  out.rels.erase(std::remove_if(out.rels.begin(), out.rels.end(), [](const Word& w) { return w.empty(); }),
                 out.rels.end());
  return out;
}

namespace {

// An embedding is surjective (syntactically) when every generator of the
// target appears, possibly inverted, as a one-letter image.
bool syntactically_onto(const std::map<std::string, Word>& m, const Presentation& target) {
  for (const auto& x : target.gens) {
    bool hit = std::any_of(m.begin(), m.end(), [&](const auto& kv) {
      return kv.second.size() == 1 && kv.second[0].gen == x;
    });
    if (!hit) return false;
  }
  return true;
}

GraphOfGroups restrict_to(const GraphOfGroups& g, const std::vector<bool>& keep_vertex, std::size_t skip_edge) {
  GraphOfGroups out;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (keep_vertex[i]) out.vertices.push_back(g.vertices[i]);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i == skip_edge) continue;
    if (keep_vertex[vertex_index(g, g.edges[i].tail)]) out.edges.push_back(g.edges[i]);
  }
  return out;
}

}  // namespace

EdgeDecomposition decompose_along_edge(const GraphOfGroups& g, const std::string& edge) {
  auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const GogEdge& e) { return e.name == edge; });
  if (it == g.edges.end()) fail(ErrorCode::InvalidEdge, "no edge named '" + edge + "'");
  std::size_t skip = it - g.edges.begin();
  const GogEdge& e = *it;

  Dsu dsu(g.vertices.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (i != skip) dsu.unite(vertex_index(g, g.edges[i].tail), vertex_index(g, g.edges[i].head));
  std::size_t t = vertex_index(g, e.tail), h = vertex_index(g, e.head);

  EdgeDecomposition out;
  out.edge_group = e.group;
  out.to_tail = e.to_tail;
  out.to_head = e.to_head;
  out.separating = dsu.find(t) != dsu.find(h);
  if (out.separating) {
    for (std::size_t side : {t, h}) {
      std::vector<bool> keep(g.vertices.size());
      for (std::size_t v = 0; v < g.vertices.size(); ++v) keep[v] = dsu.find(v) == dsu.find(side);
      out.sides.push_back(fundamental_group_presentation(restrict_to(g, keep, skip)));
    }
  } else {
    std::vector<bool> keep(g.vertices.size(), true);
    out.sides.push_back(fundamental_group_presentation(restrict_to(g, keep, skip)));
    out.stable_letter = e.stable_letter.empty() ? "s" : e.stable_letter;
  }
  out.tail_proper = !syntactically_onto(e.to_tail, g.vertices[t].group);
  out.head_proper = !syntactically_onto(e.to_head, g.vertices[h].group);
  return out;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

bool is_free(const Presentation& p) { return p.rels.empty(); }

// Relators are exactly the commutators of distinct generator pairs.
bool is_free_abelian(const Presentation& p) {
  if (p.gens.size() <= 1) return p.rels.empty();
  std::set<std::pair<std::string, std::string>> need;
  for (std::size_t i = 0; i < p.gens.size(); ++i)
    for (std::size_t j = i + 1; j < p.gens.size(); ++j) need.insert({p.gens[i], p.gens[j]});
  for (const auto& r : p.rels) {
    Word w = cyclic_reduce(r);
    if (w.size() != 4) return false;
    // x y x- y- up to rotation and inversion.
    bool found = false;
    for (int rot = 0; rot < 4 && !found; ++rot) {
      const Letter &x = w[rot], &y = w[(rot + 1) % 4], &xi = w[(rot + 2) % 4], &yi = w[(rot + 3) % 4];
      if (x.gen != y.gen && xi == x.inverted() && yi == y.inverted()) {
        auto key = x.gen < y.gen ? std::make_pair(x.gen, y.gen) : std::make_pair(y.gen, x.gen);
        found = need.erase(key) > 0;
      }
    }
    if (!found) return false;
  }
  return need.empty();
}

std::vector<mpq_class> exponent_sums(const Word& w, const std::vector<std::string>& gens) {
  std::vector<mpq_class> v(gens.size(), 0);
  for (const auto& l : w) {
    auto i = std::find(gens.begin(), gens.end(), l.gen) - gens.begin();
    v[i] += l.inverse ? -1 : 1;
  }
  return v;
}

std::size_t matrix_rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0, cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::string injectivity(const Presentation& source, const std::map<std::string, Word>& m, const Presentation& target) {
  std::vector<Word> images;
  for (const auto& c : source.gens) images.push_back(free_reduce(m.at(c)));
  if (source.gens.empty()) return "verified";
  bool source_free = is_free(source), source_abelian = is_free_abelian(source);
  if (source.gens.size() == 1 && source_free && images[0].empty()) return "fails";
  if (is_free(target) && source_free && source.gens.size() <= 2) {
    if (source.gens.size() == 1) return "verified";  // free groups are torsion-free
    Word uv = free_reduce(concat(images[0], images[1])), vu = free_reduce(concat(images[1], images[0]));
    return uv == vu ? "fails" : "verified";
  }
  if (is_free_abelian(target) && source_abelian) {
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& w : images) rows.push_back(exponent_sums(w, target.gens));
    return matrix_rank(rows) == source.gens.size() ? "verified" : "fails";
  }
  return "assumed";
}

}  // namespace

GogReport validate_graph_of_groups(const GraphOfGroups& g) {
  GogReport report;
  auto problem = [&](std::string msg) {
    report.valid = false;
    report.problems.push_back(std::move(msg));
  };
  if (g.vertices.empty()) problem("graph has no vertices");

  std::set<std::string> names, symbols;
  for (const auto& v : g.vertices) {
    if (!names.insert(v.name).second) problem("duplicate vertex " + v.name);
    for (const auto& x : v.group.gens)
      if (!symbols.insert(x).second) problem("generator " + x + " is declared twice");
    for (const auto& r : v.group.rels)
      if (!uses_only(r, v.group.gens)) problem("relator '" + word_str(r) + "' of " + v.name + " uses undeclared symbols");
  }
  std::set<std::string> edge_names;
  bool endpoints_ok = true;
  for (const auto& e : g.edges) {
    if (!edge_names.insert(e.name).second) problem("duplicate edge " + e.name);
    if (!names.count(e.tail) || !names.count(e.head)) {
      problem("edge " + e.name + " has an undeclared endpoint");
      endpoints_ok = false;
    }
    if (!e.stable_letter.empty() && symbols.count(e.stable_letter))
      problem("stable letter " + e.stable_letter + " clashes with a generator");
    for (const auto& r : e.group.rels)
      if (!uses_only(r, e.group.gens)) problem("relator of edge " + e.name + " uses undeclared symbols");
  }
  if (!endpoints_ok || g.vertices.empty()) return report;

  try {
    tree_mask(g, {});
  } catch (const Error&) {
    problem("graph is not connected");
  }

  for (const auto& e : g.edges) {
    for (const auto& [side, map, vname] :
         {std::tuple{"tail", &e.to_tail, e.tail}, std::tuple{"head", &e.to_head, e.head}}) {
      const Presentation& target = g.vertices[vertex_index(g, vname)].group;
      bool ok = true;
      for (const auto& c : e.group.gens)
        if (!map->count(c)) {
          problem("edge " + e.name + " has no " + side + " image for " + c);
          ok = false;
        }
      for (const auto& [c, w] : *map) {
        if (std::find(e.group.gens.begin(), e.group.gens.end(), c) == e.group.gens.end()) {
          problem("edge " + e.name + " maps undeclared generator " + c);
          ok = false;
        }
        if (!uses_only(w, target.gens)) {
          problem("edge " + e.name + " " + side + " image '" + word_str(w) + "' uses symbols outside " + vname);
          ok = false;
        }
      }
      if (!ok) continue;
      std::string verdict = injectivity(e.group, *map, target);
      if (verdict == "fails") problem("edge " + e.name + " " + side + " attachment is not injective");
      report.attachments.push_back({e.name, side, verdict});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Schreier graphs

std::vector<std::string> default_generator_names(std::size_t r) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < r; ++i)
    out.push_back(r <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
  return out;
}

namespace {

void check_action(const CosetAction& a) {
  if (a.degree == 0) fail(ErrorCode::DomainError, "coset action of degree 0");
  if (!a.names.empty() && a.names.size() != a.perms.size())
    fail(ErrorCode::DomainError, "generator names do not match the permutations");
  for (const auto& p : a.perms) {
    if (p.size() != a.degree) fail(ErrorCode::DomainError, "permutation has the wrong length");
    std::vector<bool> hit(a.degree, false);
    for (std::size_t x : p) {
      if (x >= a.degree || hit[x]) fail(ErrorCode::DomainError, "not a permutation");
      hit[x] = true;
    }
  }
}

}  // namespace

std::size_t act_on_coset(const CosetAction& action, std::size_t start, const Word& w) {
  auto names = action.names.empty() ? default_generator_names(action.perms.size()) : action.names;
  std::size_t c = start;
  for (const auto& l : w) {
    auto i = std::find(names.begin(), names.end(), l.gen) - names.begin();
    if (static_cast<std::size_t>(i) == names.size()) fail(ErrorCode::SymbolError, "unknown generator " + l.gen);
    const auto& p = action.perms[i];
    if (l.inverse) c = std::find(p.begin(), p.end(), c) - p.begin();
    else c = p[c];
  }
  return c;
}

SchreierResult schreier_rank(const CosetAction& action) {
  check_action(action);
  auto names = action.names.empty() ? default_generator_names(action.perms.size()) : action.names;
  std::size_t n = action.degree, r = action.perms.size();
  std::vector<std::optional<Word>> path(n);
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(r, false));
  path[0] = Word{};
  std::deque<std::size_t> queue{0};
  SchreierResult out;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < r; ++x) {
      std::size_t j = action.perms[x][i];
      if (path[j]) continue;
      path[j] = concat(*path[i], Word{{names[x], false}});
      tree[i][x] = true;
      out.tree_edges.push_back({i, x});
      queue.push_back(j);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!path[i]) fail(ErrorCode::NotTransitive, "coset " + std::to_string(i + 1) + " is not reachable from coset 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < r; ++x) {
      if (tree[i][x]) continue;
      Word w = concat(concat(*path[i], Word{{names[x], false}}), inverse(*path[action.perms[x][i]]));
      out.generators.push_back(free_reduce(w));
    }
  out.rank = out.generators.size();
  return out;
}

}  // namespace ltree
