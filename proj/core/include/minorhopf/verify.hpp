#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minorhopf {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  /// One of: all, golden, primitives, properties.
  std::string suite = "all";
  /// Cap for the exhaustive sweeps (the full gate uses 5).
  int max_size = 5;
  /// Seed for the sampled checks; fixed default keeps runs reproducible.
  std::uint64_t seed = 20260810;
};

/// Runs the verification suite and returns one result per criterion.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace minorhopf
