#pragma once

// Finite Λ-trees: combinatorial trees whose edges carry positive lengths in
// a LambdaGroup. Points are vertices or positions strictly inside an edge.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ltree/lambda.hpp"

namespace ltree {

struct EdgeSpec {
  std::string name;  // "" means "e<index>"
  std::string a, b;
  LambdaElement length;
};

/// Arbitrary graph with edge lengths; the input to check_axioms and the
/// raw form of a LambdaTree.
struct MetricGraph {
  LambdaGroup group;
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
};

struct TreeEdge {
  std::string name;
  std::size_t a, b;
  LambdaElement length;
};

struct Incidence {
  std::size_t vertex;  // the other endpoint
  std::size_t edge;
};

/// A vertex, or an offset strictly inside an edge measured from the edge's
/// first endpoint. Obtain normalized points from LambdaTree.
class TreePoint {
 public:
  static TreePoint at_vertex(std::size_t v) { return TreePoint(v, std::nullopt); }

  bool is_vertex() const { return !offset_; }
  std::size_t vertex() const { return index_; }
  std::size_t edge() const { return index_; }
  const LambdaElement& offset() const { return *offset_; }

  friend bool operator==(const TreePoint& a, const TreePoint& b);

 private:
  friend class LambdaTree;
  TreePoint(std::size_t i, std::optional<LambdaElement> off) : index_(i), offset_(std::move(off)) {}
  std::size_t index_;
  std::optional<LambdaElement> offset_;
};

struct Segment {
  TreePoint from, to;
  std::vector<std::size_t> vertex_path;  // vertices strictly between the endpoints
  LambdaElement length;

  bool nondegenerate() const { return length.is_positive(); }
};

enum class PointKind { isolated, dead_end, regular, branch };

struct PointClass {
  PointKind kind;
  std::size_t directions;
};

std::string_view point_kind_name(PointKind k);

class LambdaTree {
 public:
  /// Validates connectivity, acyclicity and positive lengths (InvalidTree).
  explicit LambdaTree(const MetricGraph& graph);
  LambdaTree(LambdaGroup group, std::vector<std::string> vertices, std::vector<TreeEdge> edges);

  const LambdaGroup& group() const { return group_; }
  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& vertex_name(std::size_t v) const { return names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const TreeEdge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  const std::vector<Incidence>& incident(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::optional<std::size_t> find_edge(const std::string& name) const;
  std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const;
  MetricGraph to_graph() const;

  /// Point at `offset` from the edge's first endpoint; offsets 0 and the
  /// full length normalize to vertices. InvalidPoint outside [0, length] or
  /// when the offset is not an element of the group.
  TreePoint point_on_edge(std::size_t e, const LambdaElement& offset) const;
  /// Point at distance s from endpoint `from` along edge e.
  TreePoint point_on_edge_from(std::size_t e, std::size_t from, const LambdaElement& s) const;
  void check_point(const TreePoint& p) const;
  bool contains(const TreePoint& p) const;
  std::string point_str(const TreePoint& p) const;

  LambdaElement vertex_distance(std::size_t u, std::size_t v) const;
  /// Vertices from u to v inclusive.
  std::vector<std::size_t> vertex_path(std::size_t u, std::size_t v) const;

  LambdaElement distance(const TreePoint& p, const TreePoint& q) const;
  /// p, the vertices strictly between, q. Consecutive stations share an edge.
  std::vector<TreePoint> route(const TreePoint& p, const TreePoint& q) const;
  Segment segment(const TreePoint& p, const TreePoint& q) const;
  /// The point of [p, q] at distance s from p.
  TreePoint point_along(const TreePoint& p, const TreePoint& q, const LambdaElement& s) const;
  TreePoint median(const TreePoint& p, const TreePoint& q, const TreePoint& r) const;
  bool on_segment(const TreePoint& x, const TreePoint& p, const TreePoint& q) const;
  PointClass classify_point(const TreePoint& p) const;

  /// Edge joining two consecutive route stations.
  std::size_t leg_edge(const TreePoint& s, const TreePoint& t) const;
  /// Offset of a point lying on the closure of edge e.
  LambdaElement position_on(std::size_t e, const TreePoint& p) const;

  /// A random vertex or interior point.
  TreePoint sample_point(std::mt19937_64& rng) const;

  friend bool operator==(const LambdaTree& a, const LambdaTree& b);

 private:
  void build();
  std::size_t exit_vertex(const TreePoint& p, const TreePoint& toward) const;

  LambdaGroup group_;
  std::vector<std::string> names_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<Incidence>> adj_;
  // Rooted at vertex 0.
  std::vector<std::size_t> parent_;
  std::vector<int> level_;
  std::vector<LambdaElement> depth_;
};

/// Same combinatorial tree with lengths pushed through the order embedding
/// of the tree's group into `target` (EmbeddingError if none exists).
LambdaTree base_change(const LambdaTree& tree, const LambdaGroup& target);
TreePoint base_change_point(const LambdaTree& changed, const TreePoint& p);

struct QuotientTree {
  LambdaTree tree;
  ConvexSubgroup subgroup;
  std::vector<std::size_t> vertex_map;               // source vertex -> quotient vertex
  std::vector<std::optional<std::size_t>> edge_map;  // source edge -> surviving edge
  std::vector<LambdaTree> fibers;                    // per quotient vertex, over the source group

  TreePoint map_point(const LambdaTree& source, const TreePoint& p) const;
};

/// Contracts every edge whose length lies in the convex subgroup.
QuotientTree convex_quotient_tree(const LambdaTree& tree, const ConvexSubgroup& s);

struct AxiomReport {
  bool ok = true;
  std::string axiom;    // "", "metric", "a", "b" or "c"
  std::string witness;  // human-readable counterexample
  std::vector<std::vector<std::string>> arcs;  // cycle witness: two arcs, alternating vertex and edge names
  std::size_t samples_checked = 0;
};

/// Structural check (positivity, connectivity, acyclicity) followed by
/// sampled verification of the segment axioms on point triples.
AxiomReport check_axioms(const MetricGraph& graph, std::size_t sample_size, std::uint64_t seed = 0);

}  // namespace ltree
