#include "ltree/length_projective.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include "ltree/error.hpp"

namespace ltree {

namespace {

std::size_t gen_index(const std::vector<std::string>& gens, const std::string& g) {
  auto it = std::find(gens.begin(), gens.end(), g);
  if (it == gens.end()) fail(ErrorCode::SymbolError, "unknown generator '" + g + "'");
  return it - gens.begin();
}

std::vector<std::size_t> letter_codes(const Word& w, const std::vector<std::string>& gens) {
  std::vector<std::size_t> out;
  for (const auto& l : w) out.push_back(2 * gen_index(gens, l.gen) + (l.inverse ? 1 : 0));
  return out;
}

}  // namespace

ConjClass canonical_class(const Word& w, const std::vector<std::string>& gens) {
  Word c = cyclic_reduce(free_reduce(w));
  auto codes = letter_codes(c, gens);
  std::size_t n = codes.size(), best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t x = codes[(r + i) % n], y = codes[(best + i) % n];
      if (x != y) {
        if (x < y) best = r;
        break;
      }
    }
  }
  std::rotate(c.begin(), c.begin() + best, c.end());
  return {c};
}

ConjClass canonical_class(std::string_view w, const std::vector<std::string>& gens) {
  return canonical_class(parse_word(w), gens);
}

std::vector<ConjClass> classes_up_to(const std::vector<std::string>& gens, std::size_t max_length,
                                     bool include_trivial) {
  std::vector<ConjClass> out;
  if (include_trivial) out.push_back({});
  std::size_t letters = 2 * gens.size();
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> code(len, 0);
    for (;;) {
      bool reduced = true;
      for (std::size_t i = 0; i < len && reduced; ++i) {
        std::size_t next = code[(i + 1) % len];
        if (len > 1 && (code[i] ^ 1) == next) reduced = false;
      }
      if (reduced) {
        Word w;
        for (std::size_t c : code) w.push_back({gens[c / 2], c % 2 == 1});
        auto cls = canonical_class(w, gens);
        if (seen.insert(letter_codes(cls.word, gens)).second) out.push_back(cls);
      }
      std::size_t i = len;
      while (i > 0 && ++code[i - 1] == letters) code[--i] = 0;
      if (i == 0) break;
    }
    std::sort(out.end() - seen.size(), out.end(), [&](const ConjClass& a, const ConjClass& b) {
      return letter_codes(a.word, gens) < letter_codes(b.word, gens);
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

TreeIsometry evaluate(const TreeAction& action, const Word& w) {
  if (action.isometries.empty()) fail(ErrorCode::DomainError, "tree action has no generators");
  if (action.isometries.size() != action.gens.size())
    fail(ErrorCode::DomainError, "generator names do not match the isometries");
  TreeIsometry out = TreeIsometry::identity(action.isometries[0].tree_ptr());
  for (const auto& l : w) {
    const TreeIsometry& x = action.isometries[gen_index(action.gens, l.gen)];
    if (x.tree_ptr() != out.tree_ptr() && !(x.tree() == out.tree()))
      fail(ErrorCode::TreeMismatch, "generators act on different trees");
    out = compose(out, l.inverse ? inverse(x) : x);
  }
  return out;
}

Mat2 evaluate(const MatrixAction& action, const Word& w) {
  if (action.matrices.size() != action.gens.size())
    fail(ErrorCode::DomainError, "generator names do not match the matrices");
  Mat2 out;
  for (const auto& l : w) {
    const Mat2& x = action.matrices[gen_index(action.gens, l.gen)];
    out = out * (l.inverse ? x.inverse() : x);
  }
  return out;
}

namespace {

RealMatrix mul(const RealMatrix& x, const RealMatrix& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

RealMatrix real_inverse(const RealMatrix& x) {
  double det = x[0] * x[3] - x[1] * x[2];
  if (det == 0) fail(ErrorCode::SingularLattice, "singular real matrix");
  return {x[3] / det, -x[1] / det, -x[2] / det, x[0] / det};
}

}  // namespace

RealMatrix evaluate(const RealAction& action, const Word& w) {
  if (action.matrices.size() != action.gens.size())
    fail(ErrorCode::DomainError, "generator names do not match the matrices");
  RealMatrix out{1, 0, 0, 1};
  for (const auto& l : w) {
    const RealMatrix& x = action.matrices[gen_index(action.gens, l.gen)];
    out = mul(out, l.inverse ? real_inverse(x) : x);
  }
  return out;
}

ClassFunction length_function(const TreeAction& action, const std::vector<ConjClass>& classes) {
  ClassFunction f{classes, {}};
  const LambdaGroup& group = action.isometries.at(0).tree().group();
  for (const auto& c : classes) {
    if (c.word.empty()) {
      f.values.push_back(LambdaElement::zero(group));
      continue;
    }
    f.values.push_back(classify(evaluate(action, c.word)).length);
  }
  return f;
}

ClassFunction length_function(const MatrixAction& action, const std::vector<ConjClass>& classes) {
  for (const auto& m : action.matrices) require_sl2(action.field, m);
  ClassFunction f{classes, {}};
  for (const auto& c : classes) f.values.push_back(sl2_translation_length(action.field, evaluate(action, c.word)));
  return f;
}

// ---------------------------------------------------------------------------
// Projective points

ProjectivePoint projectivize(const ClassFunction& f) {
  if (f.values.size() != f.classes.size()) fail(ErrorCode::ClassListMismatch, "values do not match the classes");
  std::optional<LambdaElement> top;
  for (const auto& v : f.values) {
    if (v.sign() < 0) fail(ErrorCode::DomainError, "length functions are nonnegative");
    if (!top || *top < v) top = v;
  }
  if (!top || top->sign() == 0) fail(ErrorCode::TrivialAction, "the length function vanishes identically");
  ProjectivePoint p{f.classes, {}, std::vector<Rational>{}};
  for (const auto& v : f.values) {
    Rational r = ratio(v, *top).value;
    p.exact->push_back(r);
    p.coords.push_back(r.to_double());
  }
  return p;
}

ProjectivePoint theta_from_logs(const std::vector<ConjClass>& classes, const std::vector<double>& logs) {
  if (logs.size() != classes.size()) fail(ErrorCode::ClassListMismatch, "values do not match the classes");
  std::vector<double> raw;
  for (double x : logs) raw.push_back(std::max(0.0, x));
  double top = raw.empty() ? 0 : *std::max_element(raw.begin(), raw.end());
  if (!(top > 0)) fail(ErrorCode::BoundedCharacter, "no listed class has trace of absolute value above 1");
  ProjectivePoint p{classes, {}, std::nullopt};
  for (double x : raw) p.coords.push_back(x / top);
  return p;
}

ProjectivePoint theta(const RealAction& action, const std::vector<ConjClass>& classes) {
  std::vector<double> logs;
  for (const auto& c : classes) {
    RealMatrix m = evaluate(action, c.word);
    logs.push_back(std::log(std::abs(m[0] + m[3])));
  }
  return theta_from_logs(classes, logs);
}

MuResult mu(const MatrixAction& action, const std::vector<ConjClass>& classes) {
  for (const auto& m : action.matrices) require_sl2(action.field, m);
  MuResult out;
  out.raw.classes = classes;
  bool supported = false;
  for (const auto& c : classes) {
    auto ord = action.field.order(evaluate(action, c.word).trace());
    long value = ord && *ord < 0 ? -*ord : 0;
    supported = supported || value > 0;
    out.raw.values.push_back(LambdaElement::integer(value));
  }
  if (!supported) fail(ErrorCode::NotSupportedAtInfinity, "no listed class has a trace of negative valuation");
  out.point = projectivize(out.raw);
  return out;
}

double projective_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.classes != q.classes || p.coords.size() != q.coords.size())
    fail(ErrorCode::ClassListMismatch, "projective points are indexed by different classes");
  auto normalized = [](const std::vector<double>& v) {
    double top = v.empty() ? 0 : *std::max_element(v.begin(), v.end());
    std::vector<double> out(v);
    if (top > 0)
      for (double& x : out) x /= top;
    return out;
  };
  auto a = normalized(p.coords), b = normalized(q.coords);
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

namespace {

mpq_class eval_poly(const Poly& p, const mpq_class& t) {
  mpq_class acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * t + *it;
  return acc;
}

double log_abs(const mpz_class& z) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::abs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

ConvergenceReport converge_check(const MatrixAction& family, const std::vector<mpq_class>& params,
                                 const std::vector<ConjClass>& classes, const ProjectivePoint& limit,
                                 double tolerance) {
  std::vector<FieldElement> traces;
  for (const auto& c : classes) traces.push_back(evaluate(family, c.word).trace());

  ConvergenceReport report;
  report.params = params;
  report.tolerance = tolerance;
  for (const auto& s : params) {
    std::vector<double> logs;
    for (const auto& tr : traces) {
      mpq_class den = eval_poly(tr.den(), s);
      if (den == 0) fail(ErrorCode::DomainError, "trace has a pole at t = " + s.get_str());
      mpq_class value = eval_poly(tr.num(), s) / den;
      logs.push_back(value == 0 ? -HUGE_VAL : log_abs(value.get_num()) - log_abs(value.get_den()));
    }
    try {
      auto th = theta_from_logs(classes, logs);
      report.distance.push_back(projective_distance(th, limit));
      report.thetas.push_back(std::move(th));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundedCharacter) throw;
      report.distance.push_back(std::nullopt);
      report.thetas.push_back({classes, {}, std::nullopt});
    }
  }
  const auto& d = report.distance;
  report.converged = !d.empty() && d.back() && *d.back() <= tolerance;
  report.monotone = true;
  for (std::size_t i = 2; i < d.size(); ++i)
    if (!d[i] || !d[i - 1] || *d[i] > *d[i - 1]) report.monotone = false;
  return report;
}

// ---------------------------------------------------------------------------
// Cayley trees

CayleyBall cayley_ball(const std::vector<std::string>& gens, int radius) {
  if (gens.empty()) fail(ErrorCode::DomainError, "free group needs at least one generator");
  if (radius < 1) fail(ErrorCode::DomainError, "Cayley ball radius must be positive");
  CayleyBall ball;
  std::map<std::string, std::size_t> index;
  std::vector<std::string> names{"1"};
  std::vector<TreeEdge> edges;
  ball.elements.push_back({});
  index[""] = 0;
  for (std::size_t i = 0; i < ball.elements.size(); ++i) {
    const Word w = ball.elements[i];
    if (static_cast<int>(w.size()) == radius) continue;
    for (const auto& g : gens)
      for (bool inv : {false, true}) {
        Letter l{g, inv};
        if (!w.empty() && w.back() == l.inverted()) continue;
        Word child = w;
        child.push_back(l);
        std::size_t j = ball.elements.size();
        index[word_str(child)] = j;
        names.push_back(word_str(child));
        ball.elements.push_back(child);
        edges.push_back({"e" + std::to_string(j), i, j, LambdaElement::integer(1)});
      }
  }
  ball.tree = std::make_shared<const LambdaTree>(LambdaGroup::integers(1), names, edges);
  ball.action.gens = gens;
  for (const auto& g : gens) {
    std::vector<std::optional<TreePoint>> images(ball.elements.size());
    for (std::size_t i = 0; i < ball.elements.size(); ++i) {
      Word img = free_reduce(concat(Word{{g, false}}, ball.elements[i]));
      auto it = index.find(word_str(img));
      if (it != index.end()) images[i] = TreePoint::at_vertex(it->second);
    }
    ball.action.isometries.emplace_back(ball.tree, std::move(images));
  }
  return ball;
}

}  // namespace ltree
