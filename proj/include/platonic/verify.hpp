#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace platonic {

enum class CheckStatus { Pass, PassWithNote, Fail };

struct CheckResult {
  int id = 0;
  std::string title;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::string> mismatches;  // "what: expected X, computed Y"
  std::vector<std::string> notes;
  double seconds = 0.0;
  double time_limit = 0.0;
};

/// Reproduces the published group-order, face-count and meeting-number
/// tables and runs the invariant suites. One result per check, in order.
std::vector<CheckResult> run_verification();

/// One line per check plus the mismatch diff for failures.
void print_verification(std::ostream& os, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace platonic
