#pragma once

#include <cstdint>
#include <string>

#include "radon/json_io.hpp"

namespace radon::cli {

struct RunOptions {
  bool require_applies = false;
  std::size_t enumeration_cap = 200000;
  uint64_t seed = 0;
  bool include_large = false;
};

struct RunResult {
  Json document;
  int exit_code = 0;
};

// Dispatches a parsed request {command, root_system, arguments} to the
// library and returns the report document.  Exit code 1 flags verdict-level
// failures (a failing verify run, or a non-Applies verdict under
// require_applies); input and domain errors propagate as radon::Error, which
// the binary maps to exit code 2.
RunResult run_request(const Json& request, const RunOptions& options);

// Human-readable rendering of a report document.
std::string render_text(const std::string& command, const Json& document);

}  // namespace radon::cli
