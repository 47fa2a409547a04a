#pragma once

// Acceptance table run by `epspectra verify` and the acceptance test binary.

#include <ostream>
#include <string>
#include <vector>

namespace epspectra {

struct AcceptanceOptions {
  /// Multiplies every comparison tolerance. 0 turns each floating check into
  /// an exact-equality check, which must fail (harness self-test).
  double tolerance_scale = 1.0;
  /// Criterion ids to run; empty runs all twelve.
  std::vector<int> only;
  /// Fail a criterion that exceeds its runtime budget.
  bool enforce_budgets = true;
  int threads = 1;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Deterministic summary of the measured quantities.
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

inline constexpr int acceptance_criterion_count = 12;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// One "PASS"/"FAIL" line per criterion plus a summary line. Timings are
/// omitted unless requested, so reports are byte-identical across runs.
void write_acceptance_report(std::ostream& os, const std::vector<CriterionResult>& results, bool show_timings = false);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace epspectra
