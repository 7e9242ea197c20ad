#ifndef COLLIGATE_ACCEPTANCE_HPP
#define COLLIGATE_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace colligate::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// The full release gate. Every threshold is pinned in the implementation;
// the battery is deterministic for a fixed seed.
std::vector<CriterionResult> run_all(std::uint64_t seed = 2024);

// Pass/fail table as printed by the CLI `suite` subcommand.
std::string format_table(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace colligate::acceptance

#endif  // COLLIGATE_ACCEPTANCE_HPP
