#pragma once

// Graphviz renderings of trees, lattice balls and Schreier graphs.

#include <string>

#include "ltree/graph_of_groups.hpp"
#include "ltree/lambda_tree.hpp"
#include "ltree/sl2_tree.hpp"

namespace ltree {

/// Undirected graph; edge labels are the lengths.
std::string tree_dot(const LambdaTree& tree);
std::string lattice_ball_dot(const LatticeBall& ball);
/// One arc i -> i·x per coset and generator, 1-based labels.
std::string schreier_dot(const CosetAction& action);

/// Compact length label: "3/2" in rank one, "(1,-2)" otherwise.
std::string length_label(const LambdaElement& x);

}  // namespace ltree
