#pragma once

// The acceptance checks, shared by the acceptance test binary and
// `glmy verify paper-suite`.

#include <cstdint>
#include <string>
#include <vector>

namespace glmy {

struct SuiteOptions {
  std::uint64_t seed = 20240917;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

constexpr int kCriterionCount = 12;

/// Runs criterion `id` (1-based). Exceptions become failures.
CriterionResult run_criterion(int id, const SuiteOptions& options = {});
std::vector<CriterionResult> run_suite(const SuiteOptions& options = {});

}  // namespace glmy
