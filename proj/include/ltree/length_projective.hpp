#pragma once

// Conjugacy classes of free groups, hyperbolic length functions of tree and
// matrix actions, and their images in projective space: the θ map for real
// representations and the μ map for valuations.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ltree/isometry.hpp"
#include "ltree/sl2_tree.hpp"
#include "ltree/words.hpp"

namespace ltree {

/// Least rotation of a cyclically reduced word. Letters are ordered by
/// generator position, a generator before its inverse.
struct ConjClass {
  Word word;

  std::string str() const { return word_str(word); }
  std::size_t length() const { return word.size(); }
  friend bool operator==(const ConjClass&, const ConjClass&) = default;
};

/// SymbolError for symbols outside `gens`.
ConjClass canonical_class(const Word& w, const std::vector<std::string>& gens);
ConjClass canonical_class(std::string_view w, const std::vector<std::string>& gens);

/// Every conjugacy class of cyclic length 1..max_length (plus the trivial
/// class when include_trivial), in order of length then word.
std::vector<ConjClass> classes_up_to(const std::vector<std::string>& gens, std::size_t max_length,
                                     bool include_trivial = false);

struct ClassFunction {
  std::vector<ConjClass> classes;
  std::vector<LambdaElement> values;
};

struct ProjectivePoint {
  std::vector<ConjClass> classes;
  std::vector<double> coords;                // max coordinate is 1
  std::optional<std::vector<Rational>> exact;  // when computed from exact lengths
};

struct TreeAction {
  std::vector<std::string> gens;
  std::vector<TreeIsometry> isometries;
};

struct MatrixAction {
  ValuedField field;
  std::vector<std::string> gens;
  std::vector<Mat2> matrices;
};

using RealMatrix = std::array<double, 4>;  // row-major

struct RealAction {
  std::vector<std::string> gens;
  std::vector<RealMatrix> matrices;
};

TreeIsometry evaluate(const TreeAction& action, const Word& w);
Mat2 evaluate(const MatrixAction& action, const Word& w);
RealMatrix evaluate(const RealAction& action, const Word& w);

/// Translation lengths of the evaluated class representatives.
/// OrbitEscapesTree when a composite needs points outside the finite tree.
ClassFunction length_function(const TreeAction& action, const std::vector<ConjClass>& classes);
/// DeterminantNotOne for generators outside SL2.
ClassFunction length_function(const MatrixAction& action, const std::vector<ConjClass>& classes);

/// Coordinates ratio(value, max value). TrivialAction when all values vanish.
ProjectivePoint projectivize(const ClassFunction& f);

/// [max(0, log|tr|)] normalized by its maximum; BoundedCharacter when
/// every coordinate vanishes.
ProjectivePoint theta(const RealAction& action, const std::vector<ConjClass>& classes);
/// Same normalization applied to precomputed log|tr| values.
ProjectivePoint theta_from_logs(const std::vector<ConjClass>& classes, const std::vector<double>& log_abs_traces);

struct MuResult {
  ClassFunction raw;  // max(0, -v(tr))
  ProjectivePoint point;
};

/// NotSupportedAtInfinity when no trace has negative valuation.
MuResult mu(const MatrixAction& action, const std::vector<ConjClass>& classes);

/// Sup-norm distance after max-normalization; ClassListMismatch when the
/// class lists differ.
double projective_distance(const ProjectivePoint& p, const ProjectivePoint& q);

struct ConvergenceReport {
  std::vector<mpq_class> params;
  std::vector<std::optional<double>> distance;  // nullopt where θ is bounded
  std::vector<ProjectivePoint> thetas;           // coords empty where θ is bounded
  bool converged = false;                        // final distance within tolerance
  bool monotone = false;                         // strictly decreasing from the second parameter on
  double tolerance = 0;
};

/// Substitutes each parameter for t in a family over ℚ(t), evaluates the
/// traces exactly and compares θ with `limit`.
ConvergenceReport converge_check(const MatrixAction& family, const std::vector<mpq_class>& params,
                                 const std::vector<ConjClass>& classes, const ProjectivePoint& limit,
                                 double tolerance);

/// The ball of radius `radius` about 1 in the Cayley tree of the free group
/// on `gens`, with each generator acting by left multiplication.
struct CayleyBall {
  std::shared_ptr<const LambdaTree> tree;
  std::vector<Word> elements;  // vertex i is elements[i]
  TreeAction action;
};

CayleyBall cayley_ball(const std::vector<std::string>& gens, int radius);

}  // namespace ltree
