#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nasheq/solver.hpp"

namespace nasheq {

struct RunConfig {
  std::string input_path;
  SolveMethod method = SolveMethod::Orbit;
  std::string output_format = "json";  // "json" or "text"
  int digits = 6;                      // decimal places in rendered values
  bool emit_radicals = true;
  bool emit_stats = false;
  // Explicit variable order (names); empty uses the game's default.
  std::vector<std::string> variable_order;
  int size_limit = 12;
};

// Runs the full pipeline on a game file and renders the result to `out`.
// The rendered output is byte-deterministic for a fixed config and input;
// diagnostics and wall-clock times go to `err` only.
// Exit codes: 0 success; 2 two-player games with the conjugation method;
// 3 systems outside the generic case; 4 size limit; 1 any other error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace nasheq
