#include "ltree/dot.hpp"

#include <sstream>

namespace ltree {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string length_label(const LambdaElement& x) {
  return x.coords().size() == 1 ? x[0].str() : x.str();
}

std::string tree_dot(const LambdaTree& tree) {
  std::ostringstream out;
  out << "graph tree {\n";
  for (const auto& name : tree.vertex_names()) out << "  " << quoted(name) << ";\n";
  for (const auto& e : tree.edges())
    out << "  " << quoted(tree.vertex_name(e.a)) << " -- " << quoted(tree.vertex_name(e.b))
        << " [label=" << quoted(length_label(e.length)) << "];\n";
  out << "}\n";
  return out.str();
}

std::string lattice_ball_dot(const LatticeBall& ball) {
  std::ostringstream out;
  out << "graph lattice_ball {\n";
  for (std::size_t i = 0; i < ball.vertices.size(); ++i)
    out << "  n" << i << " [label=" << quoted(ball.vertices[i].key()) << "];\n";
  for (auto [u, v] : ball.edges) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string schreier_dot(const CosetAction& action) {
  auto names = action.names.empty() ? default_generator_names(action.perms.size()) : action.names;
  std::ostringstream out;
  out << "digraph schreier {\n";
  for (std::size_t i = 0; i < action.degree; ++i) out << "  " << i + 1 << ";\n";
  for (std::size_t x = 0; x < action.perms.size(); ++x)
    for (std::size_t i = 0; i < action.degree; ++i)
      out << "  " << i + 1 << " -> " << action.perms[x][i] + 1 << " [label=" << quoted(names[x]) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace ltree
