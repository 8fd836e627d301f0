#pragma once

#include <functional>
#include <string>
#include <vector>

namespace octet {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  bool quick = false;
  int jobs = 2;
  uint64_t seed = 2026;
  std::function<void(const std::string&)> log;  // progress lines (optional)
};

// Runs the thirteen acceptance criteria in order and returns their results.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

}  // namespace octet
