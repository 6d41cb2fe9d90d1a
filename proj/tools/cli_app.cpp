#include "cli_app.hpp"

#include <map>
#include <stdexcept>

#include "ltree/dot.hpp"
#include "ltree/error.hpp"
#include "ltree/graph_of_groups.hpp"
#include "ltree/isometry.hpp"
#include "ltree/lambda_tree.hpp"
#include "ltree/length_projective.hpp"
#include "ltree/sl2_tree.hpp"

namespace ltree::cli {

namespace {

// Malformed input that is not a domain error; reported with exit code 1.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw SchemaError("expected a string or an integer, got " + j.dump());
}

// ---------------------------------------------------------------------------
// Λ, trees, points, isometries

LambdaGroup parse_group(const Json& j) {
  int rank = j.value("rank", 1);
  if (rank < 1) throw SchemaError("group rank must be positive");
  bool dyadic = j.value("dyadic", false);
  return dyadic ? LambdaGroup::dyadics(rank) : LambdaGroup::integers(rank);
}

Json group_json(const LambdaGroup& g) { return {{"rank", g.rank_k}, {"dyadic", g.dyadic_allowed}}; }

LambdaElement parse_lambda(const Json& j, const LambdaGroup& g) {
  std::vector<Rational> coords;
  if (j.is_array())
    for (const auto& c : j) coords.push_back(Rational::parse(text_of(c)));
  else
    coords.push_back(Rational::parse(text_of(j)));
  if (static_cast<int>(coords.size()) != g.rank_k)
    throw SchemaError("expected " + std::to_string(g.rank_k) + " coordinates in " + j.dump());
  return LambdaElement(g, std::move(coords));
}

Json lambda_json(const LambdaElement& x) {
  Json out = Json::array();
  for (const auto& c : x.coords()) out.push_back(c.str());
  return out;
}

MetricGraph parse_graph(const Json& j) {
  MetricGraph g{parse_group(need(j, "group")), {}, {}};
  for (const auto& v : need(j, "vertices")) g.vertices.push_back(v.get<std::string>());
  for (const auto& e : need(j, "edges"))
    g.edges.push_back({e.value("name", ""), need(e, "a").get<std::string>(), need(e, "b").get<std::string>(),
                       parse_lambda(need(e, "len"), g.group)});
  return g;
}

std::shared_ptr<const LambdaTree> parse_tree(const Json& j) {
  return std::make_shared<const LambdaTree>(parse_graph(j));
}

Json tree_json(const LambdaTree& t) {
  Json edges = Json::array();
  for (const auto& e : t.edges())
    edges.push_back({{"name", e.name}, {"a", t.vertex_name(e.a)}, {"b", t.vertex_name(e.b)}, {"len", lambda_json(e.length)}});
  return {{"group", group_json(t.group())}, {"vertices", t.vertex_names()}, {"edges", edges}};
}

TreePoint parse_point(const LambdaTree& t, const Json& j) {
  if (j.is_string()) {
    auto v = t.find_vertex(j.get<std::string>());
    if (!v) fail(ErrorCode::InvalidPoint, "no vertex named '" + j.get<std::string>() + "'");
    return TreePoint::at_vertex(*v);
  }
  std::string name = need(j, "edge").get<std::string>();
  auto e = t.find_edge(name);
  if (!e) fail(ErrorCode::InvalidPoint, "no edge named '" + name + "'");
  return t.point_on_edge(*e, parse_lambda(need(j, "offset"), t.group()));
}

Json point_json(const LambdaTree& t, const TreePoint& p) {
  if (p.is_vertex()) return t.vertex_name(p.vertex());
  return {{"edge", t.edge(p.edge()).name}, {"offset", lambda_json(p.offset())}};
}

TreeIsometry parse_isometry(std::shared_ptr<const LambdaTree> t, const Json& j) {
  std::vector<std::optional<TreePoint>> images(t->vertex_count());
  for (const auto& [name, target] : need(j, "map").items()) {
    auto v = t->find_vertex(name);
    if (!v) fail(ErrorCode::InvalidPoint, "no vertex named '" + name + "'");
    images[*v] = parse_point(*t, target);
  }
  return TreeIsometry(std::move(t), std::move(images));
}

// ---------------------------------------------------------------------------
// Fields and matrices

ValuedField parse_field(const Json& j) {
  std::string kind = need(j, "field").get<std::string>();
  if (kind == "Q") return ValuedField::p_adic(need(j, "p").get<long>());
  if (kind == "Q(t)") {
    std::string at = text_of(need(j, "at"));
    if (at == "inf") return ValuedField::at_infinity();
    mpq_class c;
    if (c.set_str(at, 10) != 0) throw SchemaError("bad point '" + at + "'");
    c.canonicalize();
    return ValuedField::at_point(c);
  }
  throw SchemaError("unknown field '" + kind + "'");
}

Mat2 parse_matrix(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw SchemaError("a matrix is an array of four entries");
  return Mat2::parse({text_of(j[0]), text_of(j[1]), text_of(j[2]), text_of(j[3])});
}

Json matrix_json(const Mat2& m) {
  auto s = m.strs();
  return Json::array({s[0], s[1], s[2], s[3]});
}

LatticeVertex parse_vertex(const ValuedField& f, const Json& payload) {
  if (!payload.contains("vertex")) return base_vertex(f);
  return canonical_vertex(f, parse_matrix(payload.at("vertex")));
}

Json vertex_json(const LatticeVertex& x) { return {{"basis", matrix_json(x.basis())}, {"n", x.n}}; }

// ---------------------------------------------------------------------------
// Presentations and graphs of groups

std::vector<std::string> string_list(const Json& j) {
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(x.get<std::string>());
  return out;
}

Presentation parse_presentation(const Json& j) {
  Presentation p{string_list(need(j, "gens")), {}};
  for (const auto& r : j.value("rels", Json::array())) p.rels.push_back(parse_word(r.get<std::string>()));
  return p;
}

Json words_json(const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(word_str(w));
  return out;
}

Json presentation_json(const Presentation& p) { return {{"gens", p.gens}, {"rels", words_json(p.rels)}}; }

std::map<std::string, Word> parse_attachment(const Json& j) {
  std::map<std::string, Word> out;
  for (const auto& [k, w] : j.items()) out[k] = parse_word(w.get<std::string>());
  return out;
}

Json attachment_json(const std::map<std::string, Word>& m) {
  Json out = Json::object();
  for (const auto& [k, w] : m) out[k] = word_str(w);
  return out;
}

GraphOfGroups parse_gog(const Json& j) {
  GraphOfGroups g;
  for (const auto& v : need(j, "vertices"))
    g.vertices.push_back({need(v, "name").get<std::string>(), parse_presentation(need(v, "group"))});
  for (const auto& e : need(j, "edges")) {
    GogEdge edge{need(e, "name").get<std::string>(), need(e, "tail").get<std::string>(),
                 need(e, "head").get<std::string>(), parse_presentation(e.value("group", Json{{"gens", Json::array()}})),
                 parse_attachment(e.value("to_tail", Json::object())),
                 parse_attachment(e.value("to_head", Json::object())), e.value("stable_letter", "")};
    g.edges.push_back(std::move(edge));
  }
  return g;
}

Json report_json(const GogReport& r) {
  Json att = Json::array();
  for (const auto& a : r.attachments) att.push_back({{"edge", a.edge}, {"side", a.side}, {"injectivity", a.injectivity}});
  return {{"valid", r.valid}, {"problems", r.problems}, {"attachments", att}};
}

// ---------------------------------------------------------------------------
// Classes and actions

std::vector<std::string> keys_of(const Json& j) {
  std::vector<std::string> out;
  for (const auto& [k, v] : j.items()) out.push_back(k);
  return out;
}

std::vector<ConjClass> parse_classes(const Json& j, const std::vector<std::string>& gens) {
  std::vector<ConjClass> out;
  for (const auto& w : j) out.push_back(canonical_class(w.get<std::string>(), gens));
  return out;
}

Json classes_json(const std::vector<ConjClass>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(c.str());
  return out;
}

MatrixAction parse_matrix_action(const Json& payload, std::optional<ValuedField> default_field = std::nullopt) {
  ValuedField f = payload.contains("field") || !default_field ? parse_field(need(payload, "field")) : *default_field;
  const Json& ms = need(payload, "matrices");
  MatrixAction a{f, keys_of(ms), {}};
  for (const auto& [k, m] : ms.items()) a.matrices.push_back(parse_matrix(m));
  return a;
}

Json projective_json(const ProjectivePoint& p) {
  if (p.exact) {
    Json out = Json::array();
    for (const auto& r : *p.exact) out.push_back(r.str());
    return out;
  }
  return p.coords;
}

// ---------------------------------------------------------------------------
// Commands

struct Context {
  const Json& payload;
  const Options& options;
  std::optional<std::string> dot;
};

Json tree_distance(Context& c) {
  auto t = parse_tree(need(c.payload, "tree"));
  TreePoint p = parse_point(*t, need(c.payload, "from")), q = parse_point(*t, need(c.payload, "to"));
  Json route = Json::array();
  for (const auto& x : t->route(p, q)) route.push_back(point_json(*t, x));
  Json out{{"distance", lambda_json(t->distance(p, q))}, {"route", route}};
  if (c.payload.contains("via"))
    out["median"] = point_json(*t, t->median(p, q, parse_point(*t, c.payload.at("via"))));
  c.dot = tree_dot(*t);
  return out;
}

Json classify_isometry(Context& c) {
  auto t = parse_tree(need(c.payload, "tree"));
  TreeIsometry phi = parse_isometry(t, need(c.payload, "isometry"));
  if (c.payload.value("dyadic", false)) {
    auto changed = std::make_shared<const LambdaTree>(base_change(*t, t->group().with_half()));
    phi = base_change(phi, changed);
    t = changed;
  }
  IsometryClass k = classify(phi);
  Json out{{"kind", isometry_kind_name(k.kind)}, {"length", lambda_json(k.length)}};
  switch (k.kind) {
    case IsometryKind::elliptic: out["fixed_set"] = k.fixed_set.describe(*t); break;
    case IsometryKind::inversion: out["flipped_length"] = lambda_json(k.flipped->length); break;
    case IsometryKind::hyperbolic: out["axis"] = k.axis.describe(*t); break;
  }
  c.dot = tree_dot(*t);
  return out;
}

Json check_axioms_cmd(Context& c) {
  MetricGraph g = parse_graph(need(c.payload, "graph"));
  std::size_t samples = c.payload.value("samples", 200);
  AxiomReport r = check_axioms(g, samples, c.options.seed.value_or(0));
  return {{"ok", r.ok}, {"axiom", r.axiom}, {"witness", r.witness}, {"arcs", r.arcs}, {"samples_checked", r.samples_checked}};
}

Json base_change_cmd(Context& c) {
  auto t = parse_tree(need(c.payload, "tree"));
  LambdaTree changed = base_change(*t, parse_group(need(c.payload, "group")));
  c.dot = tree_dot(changed);
  return {{"tree", tree_json(changed)}};
}

Json quotient_cmd(Context& c) {
  auto t = parse_tree(need(c.payload, "tree"));
  QuotientTree q = convex_quotient_tree(*t, ConvexSubgroup{need(c.payload, "depth").get<int>()});
  Json vmap = Json::object();
  for (std::size_t v = 0; v < t->vertex_count(); ++v) vmap[t->vertex_name(v)] = q.tree.vertex_name(q.vertex_map[v]);
  c.dot = tree_dot(q.tree);
  return {{"tree", tree_json(q.tree)}, {"vertex_map", vmap}};
}

Json sl2_act(Context& c) {
  ValuedField f = parse_field(need(c.payload, "field"));
  Mat2 g = parse_matrix(need(c.payload, "matrix"));
  LatticeVertex x = parse_vertex(f, c.payload);
  LatticeVertex y = act(g, x);
  return {{"from", vertex_json(x)}, {"to", vertex_json(y)}, {"distance", lattice_distance_int(x, y)}};
}

Json sl2_ball(Context& c) {
  ValuedField f = parse_field(need(c.payload, "field"));
  int radius = need(c.payload, "radius").get<int>();
  if (radius < 0) throw SchemaError("radius must be nonnegative");
  LatticeBall ball = lattice_ball(parse_vertex(f, c.payload), radius);
  Json vs = Json::array();
  for (std::size_t i = 0; i < ball.vertices.size(); ++i)
    vs.push_back({{"basis", matrix_json(ball.vertices[i].basis())}, {"depth", ball.depth[i]}});
  c.dot = lattice_ball_dot(ball);
  return {{"vertex_count", ball.vertices.size()}, {"edge_count", ball.edges.size()}, {"vertices", vs}};
}

Json sl2_length(Context& c) {
  ValuedField f = parse_field(need(c.payload, "field"));
  Mat2 g = parse_matrix(need(c.payload, "matrix"));
  require_sl2(f, g);
  auto ord = f.order(g.trace());
  Json out{{"translation_length", lambda_json(sl2_translation_length(f, g))},
           {"trace", g.trace().str()},
           {"trace_valuation", ord ? Json(*ord) : Json(nullptr)}};
  if (c.payload.contains("ball_radius")) {
    LatticeBall ball = lattice_ball(base_vertex(f), c.payload.at("ball_radius").get<int>());
    Displacement d = min_displacement(g, ball);
    auto fixed = fixed_vertices(g, ball);
    out["min_displacement"] = d.distance;
    out["fixed_vertex"] = fixed.empty() ? Json(nullptr) : matrix_json(ball.vertices[fixed.front()].basis());
  }
  return out;
}

TreeChoice tree_choice(const Context& c) {
  TreeChoice choice;
  if (c.payload.contains("tree_edges")) choice.edges = string_list(c.payload.at("tree_edges"));
  else if (c.options.seed) choice.seed = c.options.seed;
  return choice;
}

Json fundamental_group(Context& c) {
  GraphOfGroups g = parse_gog(c.payload);
  Json out = presentation_json(fundamental_group_presentation(g, tree_choice(c)));
  if (c.payload.value("validate", false)) {
    out["tree_edges"] = spanning_tree(g, tree_choice(c));
    out["validation"] = report_json(validate_graph_of_groups(g));
  }
  return out;
}

Json decompose_edge(Context& c) {
  GraphOfGroups g = parse_gog(c.payload);
  EdgeDecomposition d = decompose_along_edge(g, need(c.payload, "edge").get<std::string>());
  Json sides = Json::array();
  for (const auto& s : d.sides) sides.push_back(presentation_json(s));
  Json out{{"kind", d.separating ? "amalgam" : "hnn"}, {"sides", sides}, {"edge_group", presentation_json(d.edge_group)},
           {"to_tail", attachment_json(d.to_tail)}, {"to_head", attachment_json(d.to_head)}};
  if (!d.separating) out["stable_letter"] = d.stable_letter;
  out["tail_proper"] = d.tail_proper;
  out["head_proper"] = d.head_proper;
  return out;
}

Json schreier_rank_cmd(Context& c) {
  CosetAction a;
  for (const auto& p : need(c.payload, "perms")) {
    std::vector<std::size_t> perm;
    for (const auto& x : p) {
      auto i = x.get<long>();
      if (i < 1) throw SchemaError("cosets are numbered from 1");
      perm.push_back(static_cast<std::size_t>(i - 1));
    }
    a.perms.push_back(std::move(perm));
  }
  if (a.perms.empty()) throw SchemaError("at least one permutation is needed");
  a.degree = a.perms.front().size();
  if (c.payload.contains("names")) a.names = string_list(c.payload.at("names"));
  SchreierResult r = schreier_rank(a);
  c.dot = schreier_dot(a);
  return {{"index", a.degree}, {"free_rank", a.perms.size()}, {"rank", r.rank}, {"generators", words_json(r.generators)}};
}

Json length_function_cmd(Context& c) {
  const Json& action = need(c.payload, "action");
  ClassFunction f;
  if (action.contains("cayley")) {
    const Json& cay = action.at("cayley");
    CayleyBall ball = cayley_ball(string_list(need(cay, "gens")), need(cay, "radius").get<int>());
    f = length_function(ball.action, parse_classes(need(c.payload, "classes"), ball.action.gens));
  } else if (action.contains("isometries")) {
    auto t = parse_tree(need(action, "tree"));
    TreeAction ta;
    for (const auto& [k, m] : action.at("isometries").items()) {
      ta.gens.push_back(k);
      ta.isometries.push_back(parse_isometry(t, m));
    }
    f = length_function(ta, parse_classes(need(c.payload, "classes"), ta.gens));
  } else {
    MatrixAction ma = parse_matrix_action(action);
    f = length_function(ma, parse_classes(need(c.payload, "classes"), ma.gens));
  }
  Json values = Json::array();
  for (const auto& v : f.values) values.push_back(lambda_json(v));
  Json out{{"classes", classes_json(f.classes)}, {"lengths", values}};
  try {
    out["projective"] = projective_json(projectivize(f));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TrivialAction) throw;
    out["projective"] = nullptr;
  }
  return out;
}

Json theta_cmd(Context& c) {
  const Json& ms = need(c.payload, "matrices");
  RealAction a{keys_of(ms), {}};
  for (const auto& [k, m] : ms.items()) {
    if (!m.is_array() || m.size() != 4) throw SchemaError("a matrix is an array of four entries");
    a.matrices.push_back({m[0].get<double>(), m[1].get<double>(), m[2].get<double>(), m[3].get<double>()});
  }
  ProjectivePoint p = theta(a, parse_classes(need(c.payload, "classes"), a.gens));
  return {{"classes", classes_json(p.classes)}, {"coords", p.coords}};
}

Json mu_cmd(Context& c) {
  MatrixAction a = parse_matrix_action(c.payload);
  MuResult m = mu(a, parse_classes(need(c.payload, "classes"), a.gens));
  Json raw = Json::array();
  for (const auto& v : m.raw.values) raw.push_back(lambda_json(v));
  return {{"classes", classes_json(m.point.classes)}, {"raw", raw}, {"coords", projective_json(m.point)}};
}

Json converge_check_cmd(Context& c) {
  MatrixAction a = parse_matrix_action(c.payload, ValuedField::at_infinity());
  auto classes = parse_classes(need(c.payload, "classes"), a.gens);
  std::vector<mpq_class> params;
  for (const auto& p : need(c.payload, "params")) {
    mpq_class q;
    if (q.set_str(text_of(p), 10) != 0) throw SchemaError("bad parameter " + p.dump());
    q.canonicalize();
    params.push_back(q);
  }
  ProjectivePoint limit;
  if (c.payload.contains("limit")) {
    limit.classes = classes;
    for (const auto& x : c.payload.at("limit")) limit.coords.push_back(x.get<double>());
  } else {
    limit = mu(a, classes).point;
  }
  double tol = c.options.tolerance.value_or(c.payload.value("tolerance", 1e-6));
  ConvergenceReport r = converge_check(a, params, classes, limit, tol);
  Json k = Json::array(), d = Json::array();
  for (const auto& p : r.params) k.push_back(p.get_str());
  for (const auto& x : r.distance) d.push_back(x ? Json(*x) : Json(nullptr));
  return {{"k", k}, {"distance", d}, {"converged", r.converged}, {"monotone", r.monotone}, {"tolerance", r.tolerance},
          {"limit", limit.coords}};
}

using Handler = Json (*)(Context&);

struct Command {
  Handler run;
  bool numeric, sampling;
};

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table{
      {"tree-distance", {tree_distance, false, false}},
      {"classify-isometry", {classify_isometry, false, false}},
      {"check-axioms", {check_axioms_cmd, false, true}},
      {"base-change", {base_change_cmd, false, false}},
      {"quotient", {quotient_cmd, false, false}},
      {"sl2-act", {sl2_act, false, false}},
      {"sl2-ball", {sl2_ball, false, false}},
      {"sl2-length", {sl2_length, false, false}},
      {"fundamental-group", {fundamental_group, false, true}},
      {"decompose-edge", {decompose_edge, false, false}},
      {"schreier-rank", {schreier_rank_cmd, false, false}},
      {"length-function", {length_function_cmd, false, false}},
      {"theta", {theta_cmd, true, false}},
      {"mu", {mu_cmd, false, false}},
      {"converge-check", {converge_check_cmd, true, false}},
  };
  return table;
}

Outcome failure(int code, const std::string& name, const std::string& message) {
  return {code, Json{{"error", name}, {"message", message}}, std::nullopt};
}

}  // namespace

Outcome run_task(const std::string& text, const Options& options) {
  try {
    Json task = Json::parse(text);
    std::string name = need(task, "command").get<std::string>();
    auto it = commands().find(name);
    if (it == commands().end()) throw SchemaError("unknown command '" + name + "'");
    if (options.tolerance && !it->second.numeric) throw SchemaError("--tolerance applies to numeric commands only");
    if (options.seed && !it->second.sampling) throw SchemaError("--seed applies to sampling commands only");
    Json payload = task.value("payload", Json::object());
    Context ctx{payload, options, std::nullopt};
    Json result = it->second.run(ctx);
    return {0, std::move(result), std::move(ctx.dot)};
  } catch (const Error& e) {
    int code = e.code() == ErrorCode::ParseError ? 1 : 2;
    return failure(code, std::string(error_name(e.code())), e.what());
  } catch (const Json::exception& e) {
    return failure(1, "ParseError", e.what());
  } catch (const SchemaError& e) {
    return failure(1, "ParseError", e.what());
  }
}

}  // namespace ltree::cli
