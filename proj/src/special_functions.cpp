#include "conformal_heat/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "conformal_heat/errors.hpp"

namespace conformal_heat {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_to_interval(double t, const char* who) {
  if (!(std::abs(t) <= 1.0 + kDomainSlack)) {
    throw DomainError(std::string(who) + ": argument " + std::to_string(t) +
                      " outside [-1, 1]");
  }
  return std::clamp(t, -1.0, 1.0);
}

void require_degree(int m, const char* who) {
  if (m < 0) {
    throw DomainError(std::string(who) + ": negative degree");
  }
}

bool is_half_negative(double nu) { return nu == -0.5; }

void validate_theta(const ThetaArgs& args) {
  if (!(args.tau.imag() > 0.0)) {
    throw DivergenceError("theta: series diverges unless Im tau > 0");
  }
  if (!(args.tol > 0.0)) {
    throw DomainError("theta: tolerance must be positive");
  }
}

// v shifted by an integer so that Re v lies in [-1/2, 1/2]; both theta and its
// v-derivative have period one.
Complex reduce_period(Complex v) {
  return {v.real() - std::nearbyint(v.real()), v.imag()};
}

} // namespace

double gegenbauer_c(int m, double nu, double t) {
  require_degree(m, "gegenbauer_c");
  t = clamp_to_interval(t, "gegenbauer_c");
  if (m == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double curr = 2.0 * nu * t;
  for (int k = 2; k <= m; ++k) {
    const double next =
        (2.0 * t * (k + nu - 1.0) * curr - (k + 2.0 * nu - 2.0) * prev) / k;
    prev = curr;
    curr = next;
  }
  return curr;
}

double chebyshev_t(int m, double t) {
  require_degree(m, "chebyshev_t");
  t = clamp_to_interval(t, "chebyshev_t");
  if (m == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double curr = t;
  for (int k = 2; k <= m; ++k) {
    const double next = 2.0 * t * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double chebyshev_u(int m, double t) {
  require_degree(m, "chebyshev_u");
  t = clamp_to_interval(t, "chebyshev_u");
  if (m == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double curr = 2.0 * t;
  for (int k = 2; k <= m; ++k) {
    const double next = 2.0 * t * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double gegenbauer_tilde(int m, double nu, double t) {
  require_degree(m, "gegenbauer_tilde");
  if (nu < -0.5) {
    throw DomainError("gegenbauer_tilde: nu must be >= -1/2");
  }
  t = clamp_to_interval(t, "gegenbauer_tilde");
  if (nu == 0.0) {
    return m == 0 ? 1.0 : 2.0 * chebyshev_t(m, t);
  }
  if (is_half_negative(nu) && std::abs(t) == 1.0) {
    if (m == 0) {
      return 1.0;
    }
    return m == 1 ? t : 0.0;
  }
  return (m + nu) / nu * gegenbauer_c(m, nu, t);
}

double gegenbauer_tilde_sup(int m, double nu) {
  require_degree(m, "gegenbauer_tilde_sup");
  if (nu == 0.0) {
    return m == 0 ? 1.0 : 2.0;
  }
  if (is_half_negative(nu)) {
    return m <= 1 ? 1.0 : 0.0;
  }
  if (nu < 0.0) {
    throw DomainError("gegenbauer_tilde_sup: nu in (-1/2, 0) is not supported");
  }
  const double log_c1 =
      std::lgamma(m + 2.0 * nu) - std::lgamma(m + 1.0) - std::lgamma(2.0 * nu);
  return (m + nu) / nu * std::exp(log_c1);
}

int theta_truncation(const ThetaArgs& args) {
  validate_theta(args);
  const double decay = kPi * args.tau.imag();
  const double growth = 2.0 * kPi * std::abs(args.v.imag());
  const double log_target = std::log(args.tol / 4.0);
  for (int M = 4;; ++M) {
    const double log_bound =
        -decay * M * M + std::log1p(2.0 * kPi * M) + growth * M;
    if (log_bound < log_target) {
      return M;
    }
    if (M == std::numeric_limits<int>::max() / 2) {
      throw DivergenceError("theta: truncation degree overflow");
    }
  }
}

Complex theta(const ThetaArgs& args) {
  const int M = theta_truncation(args);
  const Complex v = reduce_period(args.v);
  const Complex i_pi_tau = Complex(0.0, kPi) * args.tau;
  Complex tail{0.0, 0.0};
  // Smallest terms first.
  for (int m = M; m >= 1; --m) {
    const double mm = static_cast<double>(m);
    tail += std::exp(i_pi_tau * (mm * mm)) * std::cos(2.0 * kPi * mm * v);
  }
  return 1.0 + 2.0 * tail;
}

Complex theta_dv(const ThetaArgs& args) {
  const int M = theta_truncation(args);
  const Complex v = reduce_period(args.v);
  const Complex i_pi_tau = Complex(0.0, kPi) * args.tau;
  Complex sum{0.0, 0.0};
  for (int m = M; m >= 1; --m) {
    const double mm = static_cast<double>(m);
    sum += mm * std::exp(i_pi_tau * (mm * mm)) * std::sin(2.0 * kPi * mm * v);
  }
  return -4.0 * kPi * sum;
}

} // namespace conformal_heat
