#pragma once

// Isometries of finite Λ-trees given by vertex images, their fixed sets and
// the elliptic / inversion / hyperbolic classification.
//
// An isometry may be partial: vertices without an image lie outside its
// domain. This is how translations of a finite piece of an infinite tree
// are represented; everything that needs an undefined image throws
// OrbitEscapesTree.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ltree/lambda_tree.hpp"

namespace ltree {

/// Closed interval of offsets on one edge. Endpoints live in Λ[1/2] and may
/// fall between representable points.
struct EdgeInterval {
  std::size_t edge;
  LambdaElement lo, hi;
};

/// A subtree of a finite tree: its vertices plus, for each edge it meets,
/// the interval of offsets it covers. Vertices touched by an interval are
/// listed in `vertices` too.
struct PointSet {
  std::vector<std::size_t> vertices;
  std::vector<EdgeInterval> intervals;

  bool empty() const { return vertices.empty() && intervals.empty(); }
  bool contains(const LambdaTree& t, const TreePoint& p) const;
  /// Vertices and the representable interval endpoints (or a witness when
  /// an open end has no extreme representable point).
  std::vector<TreePoint> extreme_points(const LambdaTree& t) const;
  /// Any point of the set; requires !empty().
  TreePoint some_point(const LambdaTree& t) const;
  LambdaElement distance_to(const LambdaTree& t, const TreePoint& p) const;
  std::string describe(const LambdaTree& t) const;
};

PointSet intersect(const PointSet& a, const PointSet& b);

class TreeIsometry {
 public:
  /// Validates that edge lengths are preserved and no edge pair folds at a
  /// shared vertex (NotAnIsometry).
  TreeIsometry(std::shared_ptr<const LambdaTree> tree, std::vector<std::optional<TreePoint>> images);

  static TreeIsometry identity(std::shared_ptr<const LambdaTree> tree);

  const LambdaTree& tree() const { return *tree_; }
  const std::shared_ptr<const LambdaTree>& tree_ptr() const { return tree_; }
  const std::vector<std::optional<TreePoint>>& images() const { return images_; }
  bool defined_at(std::size_t v) const { return images_.at(v).has_value(); }
  bool defined_at(const TreePoint& p) const;
  bool total() const;

  /// OrbitEscapesTree when p is outside the domain.
  TreePoint apply(const TreePoint& p) const;
  std::optional<TreePoint> try_apply(const TreePoint& p) const;

  friend bool operator==(const TreeIsometry& a, const TreeIsometry& b);

 private:
  struct Unchecked {};
  TreeIsometry(std::shared_ptr<const LambdaTree> tree, std::vector<std::optional<TreePoint>> images, Unchecked)
      : tree_(std::move(tree)), images_(std::move(images)) {}
  void validate() const;

  friend TreeIsometry compose(const TreeIsometry&, const TreeIsometry&);
  friend TreeIsometry inverse(const TreeIsometry&);
  friend TreeIsometry base_change(const TreeIsometry&, std::shared_ptr<const LambdaTree>);

  std::shared_ptr<const LambdaTree> tree_;
  std::vector<std::optional<TreePoint>> images_;
};

/// φ∘ψ (apply ψ first) on the vertices where both steps are defined.
TreeIsometry compose(const TreeIsometry& phi, const TreeIsometry& psi);
TreeIsometry inverse(const TreeIsometry& phi);
/// The same vertex map on a base-changed copy of the tree.
TreeIsometry base_change(const TreeIsometry& phi, std::shared_ptr<const LambdaTree> changed);

/// d(p, φp).
LambdaElement displacement(const TreeIsometry& phi, const TreePoint& p);

/// Points of the domain moved by at most `bound`; solved exactly edge by
/// edge. Points whose image is undefined are never included.
PointSet displacement_sublevel(const TreeIsometry& phi, const LambdaElement& bound);
PointSet fixed_set(const TreeIsometry& phi);

enum class IsometryKind { elliptic, inversion, hyperbolic };
std::string_view isometry_kind_name(IsometryKind k);

struct IsometryClass {
  IsometryKind kind;
  LambdaElement length;            // 0 unless hyperbolic
  PointSet fixed_set;              // elliptic
  std::optional<Segment> flipped;  // inversion
  PointSet axis;                   // hyperbolic

  /// Fixed set or axis.
  const PointSet& characteristic_set() const { return kind == IsometryKind::hyperbolic ? axis : fixed_set; }
};

IsometryClass classify(const TreeIsometry& phi);

struct Bridge {
  TreePoint from, to;  // from on F_φ, to on F_ψ
  LambdaElement length;
};

struct CommonFixedPoint {
  std::optional<TreePoint> point;
  std::optional<Bridge> bridge;                // set when the fixed sets are disjoint
  std::optional<IsometryClass> composite;      // classification of φ∘ψ in that case
  std::vector<IsometryKind> kinds;             // kinds of φ and ψ
};

/// A point fixed by both when the fixed sets meet; otherwise the bridge
/// between the fixed sets and the classification of φ∘ψ.
CommonFixedPoint common_fixed_point(const TreeIsometry& phi, const TreeIsometry& psi);
/// Point fixed by every member of the family, if their fixed sets meet.
std::optional<TreePoint> common_fixed_point(const std::vector<TreeIsometry>& family);

}  // namespace ltree
