// Acceptance battery: one pass/fail line per criterion, nonzero exit when
// anything fails or runs over its time budget.

#include <cstdio>

#include "sbim/verify.hpp"

int main() {
  sbim::AcceptanceOptions opt;
  opt.threads = sbim::threads_from_env();
  const auto results = sbim::run_acceptance(opt);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%2d] %s  %-55s (%6.2fs < %.0fs)  %s\n", r.number, r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds, r.limit_seconds, r.detail.c_str());
    failures += !r.pass;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
