// The toolkit's release gate: every analytic identity the library promises
// is evaluated here at its pinned tolerance. Used by the `verify` command
// of the CLI and by the acceptance test binary.

#pragma once

#include <string>
#include <vector>

namespace phasekit::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  double worst = 0.0;      // worst measured residual across the criterion's checks
  double tolerance = 0.0;  // the pinned bound it is compared against
  bool pass = false;
  std::string detail;      // deterministic one-line summary / first failure
};

struct Options {
  // Negative-control hook: adds a phase error to the ε corner entry inside
  // the phase-eigenbasis criterion, which must then fail.
  double epsilon_corner_perturbation = 0.0;
};

std::vector<CriterionResult> run_all(const Options& options = {});

bool all_pass(const std::vector<CriterionResult>& results);

/// "[PASS] criterion 3: ..." line, identical across runs.
std::string format_line(const CriterionResult& r);

}  // namespace phasekit::acceptance
