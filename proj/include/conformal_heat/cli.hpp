#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "conformal_heat/field_io.hpp"
#include "conformal_heat/spectral_calculus.hpp"

namespace conformal_heat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFailure = 1;
inline constexpr int kExitInvalidRegime = 2;
inline constexpr int kExitIoError = 3;

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr const char* kToleranceEnvVar = "CONFORMAL_HEAT_TOL";

struct RunConfig {
  std::string subcommand;
  std::optional<int> dim;
  std::optional<GridSpec> grid;
  std::optional<Complex> z;
  std::optional<G0Exponent> exponent;
  std::optional<double> t;
  double tol = kDefaultTolerance;
  bool closed_form = false;
  bool quadrature = false;
  std::vector<std::string> suites;
  std::optional<std::string> format;
  std::optional<std::string> in;
  std::optional<std::string> out;
  std::vector<std::string> points;
};

// Default tolerance, honouring CONFORMAL_HEAT_TOL when it parses as a
// positive number.
double default_tolerance();

// Entry point of the command-line tool. args excludes the program name.
// "-" as --in reads from `in`; without --out results go to `out`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace conformal_heat
