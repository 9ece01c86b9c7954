#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chainorder {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
  double limit_seconds;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Runs one acceptance criterion (1..11). Throws std::invalid_argument for other ids.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

/// "[PASS] 3 S2 pattern exclusion (0.12 s / 2 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace chainorder
