#pragma once

#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace ribbonforge::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct Options {
  std::filesystem::path data_dir;
  /// Criteria to run; empty runs all ten.
  std::set<int> only;
};

inline constexpr int kCriterionCount = 10;

/// Runs the criteria in order. A criterion passes only if its check holds
/// and it finished within its time budget. `on_result` is called as each
/// one completes.
std::vector<CriterionResult> run(const Options& options,
                                 const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3 title: detail (0.01s / 1s)"
std::string format_line(const CriterionResult& result);

}  // namespace ribbonforge::acceptance
