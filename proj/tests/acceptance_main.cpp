// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. The same suite backs the `verify` CLI subcommand.
#include <cstdio>

#include "dilute1d/acceptance.hpp"

int main() {
  const auto results = dilute1d::acceptance::run_all(0);
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] %2d %s: %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
