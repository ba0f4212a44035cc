#pragma once

// Self-checks that compare independent routes to the same quantity: exact
// commutators on power functions, closed forms against Gegenbauer series,
// spectral multipliers against kernel quadrature, and so on. Each suite
// reports the largest defect per check together with the threshold it is
// held to.

#include <string>
#include <vector>

namespace conformal_heat {

struct CheckResult {
  std::string name;
  double defect = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
  double max_defect() const;
};

// special, sl2, degeneration, theta, spectral, unitarity, scaling,
// semigroup, projection
const std::vector<std::string>& suite_names();

// Throws DomainError for an unknown suite name.
SuiteReport run_suite(const std::string& name);

std::vector<SuiteReport> run_all_suites();

} // namespace conformal_heat
