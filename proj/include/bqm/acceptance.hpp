#pragma once

#include <string>
#include <vector>

#include "bqm/report.hpp"

namespace bqm {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  /// What was compared, or the first mismatch.
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
};

/// The thirteen reproduction criteria with their time limits.
const std::vector<Criterion>& acceptance_criteria();

/// Runs one criterion. A criterion passes only when every check holds and
/// it finishes within its limit.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_acceptance();

/// "PASS  1 GF(3) expectation table (0.002 s, limit 1 s)"
std::string format_result(const CriterionResult& r);

report::Document acceptance_report(const std::vector<CriterionResult>& results);

}  // namespace bqm
