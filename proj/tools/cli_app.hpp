#pragma once

// JSON task runner behind the ltree command-line tool.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace ltree::cli {

using Json = nlohmann::ordered_json;

struct Options {
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
};

struct Outcome {
  int exit_code = 0;  // 0 ok, 1 unreadable task, 2 domain error
  Json result;
  std::optional<std::string> dot;
};

/// Runs a task document {"command": ..., "payload": {...}}.
Outcome run_task(const std::string& text, const Options& options = {});

}  // namespace ltree::cli
