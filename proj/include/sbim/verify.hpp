#pragma once

#include <string>
#include <vector>

namespace sbim {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail; // counts on success, the witness on failure
};

struct AcceptanceOptions {
  std::string group = "all"; // all | a2 | b2 | a3
  unsigned seed = 20260810;  // for the sampled extended-basis triples
  int extended_triples = 1000;
  int threads = 1; // oracle sweeps only
};

// The full verification battery; each entry checks one exact claim at its
// pinned tolerance (everything here is integer/Laurent equality) and a
// wall-clock budget.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

int threads_from_env(); // SBIM_THREADS, default 1

} // namespace sbim
