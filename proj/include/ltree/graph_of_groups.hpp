#pragma once

// Graphs of groups given by finite presentations, presentations of their
// fundamental groups, edge splittings, and Schreier graphs of coset actions.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ltree/words.hpp"

namespace ltree {

struct GogVertex {
  std::string name;
  Presentation group;
};

struct GogEdge {
  std::string name, tail, head;
  Presentation group;
  std::map<std::string, Word> to_tail, to_head;  // edge generator -> word in the endpoint group
  std::string stable_letter;                     // optional name used when the edge is off the tree
};

struct GraphOfGroups {
  std::vector<GogVertex> vertices;
  std::vector<GogEdge> edges;
};

/// Spanning tree selection. By default: breadth-first from the
/// lexicographically least vertex, scanning edges in declaration order.
struct TreeChoice {
  std::optional<std::uint64_t> seed;             // random spanning tree
  std::optional<std::vector<std::string>> edges;  // explicit tree edges
};

Presentation fundamental_group_presentation(const GraphOfGroups& g, const TreeChoice& choice = {});
/// Names of the spanning tree edges the presentation would use.
std::vector<std::string> spanning_tree(const GraphOfGroups& g, const TreeChoice& choice = {});

struct EdgeDecomposition {
  bool separating = false;
  std::vector<Presentation> sides;  // two sides for an amalgam, the base for an HNN extension
  Presentation edge_group;
  std::map<std::string, Word> to_tail, to_head;
  std::string stable_letter;  // HNN only
  // Syntactic check: an embedding is proper unless every generator of its
  // target is the image of some edge generator.
  bool tail_proper = true, head_proper = true;
};

/// InvalidEdge if no edge has that name.
EdgeDecomposition decompose_along_edge(const GraphOfGroups& g, const std::string& edge);

struct AttachmentCheck {
  std::string edge, side;  // side is "tail" or "head"
  std::string injectivity;  // "verified", "assumed" or "fails"
};

struct GogReport {
  bool valid = true;
  std::vector<std::string> problems;
  std::vector<AttachmentCheck> attachments;
};

GogReport validate_graph_of_groups(const GraphOfGroups& g);

/// Right action of a free group of rank r on cosets {0..n-1}:
/// perms[x][i] is the coset i·x.
struct CosetAction {
  std::size_t degree = 0;
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::string> names;  // generator names, default a, b, c, ...
};

struct SchreierResult {
  std::size_t rank;
  std::vector<Word> generators;
  std::vector<std::vector<std::size_t>> tree_edges;  // (coset, generator) pairs in the spanning tree
};

/// NotTransitive if some coset is unreachable from coset 0.
SchreierResult schreier_rank(const CosetAction& action);
/// Coset reached from `start` by following w.
std::size_t act_on_coset(const CosetAction& action, std::size_t start, const Word& w);
std::vector<std::string> default_generator_names(std::size_t r);

}  // namespace ltree
