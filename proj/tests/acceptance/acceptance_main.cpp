// Acceptance gate: runs every criterion of the verification suite at full
// size and prints one pass/fail line per criterion.

#include <cstdio>

#include "minorhopf/verify.hpp"

int main() {
  minorhopf::VerifyOptions options;
  options.suite = "all";
  options.max_size = 5;

  const auto results = minorhopf::run_verification(options);
  for (const auto& r : results)
    std::printf("[%s] %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds, r.detail.empty() ? "" : ": ",
                r.detail.c_str());
  return minorhopf::all_passed(results) ? 0 : 1;
}
