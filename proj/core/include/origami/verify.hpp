#pragma once

#include <string>
#include <vector>

namespace origami {

enum class VerifyLevel { Quick, Full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Quick;
  // Corrupts one character table cell before validation. The trace check has
  // to catch the corruption and name the cell; exercises the harness itself.
  bool inject_fault = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string message;  // first counterexample when failed, empty otherwise
  double millis = 0.0;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);
bool all_passed(const std::vector<CheckResult>& results);

// One line per check plus a summary tail line.
std::string verification_report(const std::vector<CheckResult>& results);

}  // namespace origami
