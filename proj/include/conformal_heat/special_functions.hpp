#pragma once

// Gegenbauer and Chebyshev polynomials by three-term recurrence, and the
// theta function
//
//   theta(v, tau) = sum_{m in Z} exp(i pi tau m^2 + 2 i pi m v)
//                 = 1 + 2 sum_{m >= 1} exp(i pi tau m^2) cos(2 pi m v),
//
// together with its derivative in v. These are the scalar building blocks of
// every kernel in the library.

#include <complex>

namespace conformal_heat {

using Complex = std::complex<double>;

// Points with |t| <= 1 + kDomainSlack are accepted as lying in [-1, 1].
inline constexpr double kDomainSlack = 1e-12;

// C_m^nu(t), defined by (1 - 2 t xi + xi^2)^{-nu} = sum_m C_m^nu(t) xi^m.
// Throws DomainError for |t| > 1 + kDomainSlack.
double gegenbauer_c(int m, double nu, double t);

// Normalized Gegenbauer polynomial ((m + nu) / nu) C_m^nu(t).
//
// nu = 0 is the limit 1 (m = 0) or 2 T_m(t) (m >= 1). nu = -1/2 is the
// one-dimensional case: at t = +-1 (the two points of S^0) the values are
// 1, t, 0 for m = 0, 1, >= 2. Requires nu >= -1/2.
double gegenbauer_tilde(int m, double nu, double t);

// sup_{t in [-1,1]} |gegenbauer_tilde(m, nu, t)|, i.e.
// ((m + nu)/nu) Gamma(m + 2 nu) / (m! Gamma(2 nu)) for nu > 0, and 1 or 2
// for nu = 0. For nu = -1/2 the supremum is over S^0 = {+-1} only.
// Other nu in (-1/2, 0) throw DomainError.
double gegenbauer_tilde_sup(int m, double nu);

// Chebyshev polynomials of the first and second kind,
// T_m(cos x) = cos(m x), U_m(cos x) = sin((m + 1) x) / sin(x).
double chebyshev_t(int m, double t);
double chebyshev_u(int m, double t);

struct ThetaArgs {
  Complex v;
  Complex tau;
  double tol = 1e-15;
};

// Number of terms M kept on each side of the theta series: the first M >= 4
// with |exp(i pi tau M^2)| (1 + 2 pi M) exp(2 pi M |Im v|) < tol / 4.
int theta_truncation(const ThetaArgs& args);

// Throws DivergenceError when Im tau <= 0 and DomainError for tol <= 0.
Complex theta(const ThetaArgs& args);

// d theta / dv = sum_m 2 i pi m exp(i pi tau m^2 + 2 i pi m v).
Complex theta_dv(const ThetaArgs& args);

} // namespace conformal_heat
