#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli_app.hpp"

namespace {

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Λ-trees, SL2 lattice trees, graphs of groups and length functions"};
  std::string task_path, out_path, dot_path;
  ltree::cli::Options options;
  app.add_option("--task", task_path, "JSON task file")->required();
  app.add_option("--out", out_path, "result file (default: standard output)");
  app.add_option("--dot", dot_path, "write a Graphviz rendering here");
  app.add_option("--tolerance", options.tolerance, "convergence tolerance (numeric commands)");
  app.add_option("--seed", options.seed, "random seed (sampling commands)");
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(task_path);
  if (!in) {
    std::cerr << "cannot read " << task_path << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  ltree::cli::Outcome outcome = ltree::cli::run_task(buf.str(), options);
  std::string text = outcome.result.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else if (!write_file(out_path, text)) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  if (!dot_path.empty()) {
    if (!outcome.dot) std::cerr << "no graph to render for this command\n";
    else if (!write_file(dot_path, *outcome.dot)) {
      std::cerr << "cannot write " << dot_path << "\n";
      return 1;
    }
  }
  if (outcome.exit_code != 0) std::cerr << outcome.result["error"].get<std::string>() << ": "
                                        << outcome.result["message"].get<std::string>() << "\n";
  return outcome.exit_code;
}
