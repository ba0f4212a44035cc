#pragma once

// Integral kernels of exp(z |x|^2 Laplacian) on L^2(R^N, |x|^{-2} dx).
//
// Radial part, for each spherical-harmonic degree m and nu = (N-2)/2:
//
//   K_m(r, r'; z) = (4 pi z)^{-1/2} exp(-z (m + nu)^2)
//                   exp(-(log r - log r')^2 / (4z)) (r r')^{-nu}
//
// Full kernel, t = <w, w'>:
//
//   K(r w, r' w'; z) = Gamma(N/2) / (2 pi^{N/2}) sum_m C~_m^nu(t) K_m(r, r'; z)
//
// Closed forms exist for N = 1, 2, 4 (the last two through theta). All of
// these require Re z > 0; at Re z = 0 the operator is unitary but only the
// spectral route in spectral_calculus.hpp applies.

#include <complex>

#include "conformal_heat/log_radial.hpp"
#include "conformal_heat/spherical.hpp"

namespace conformal_heat {

using Complex = std::complex<double>;

// z together with its principal square root (Re sqrt(z) >= 0, positive on
// the positive axis).
class ComplexTime {
public:
  ComplexTime(Complex z);  // NOLINT(google-explicit-constructor)
  ComplexTime(double z) : ComplexTime(Complex(z, 0.0)) {}  // NOLINT

  const Complex& z() const { return z_; }
  const Complex& sqrt_z() const { return sqrt_z_; }

  ComplexTime conj() const { return {std::conj(z_)}; }

private:
  Complex z_;
  Complex sqrt_z_;
};

// Throws InvalidRegimeError unless Re z > 0.
void require_kernel_regime(const ComplexTime& z);

struct KernelQuery {
  int dim;
  ComplexTime z;
  double r;
  double r_prime;
  double t;  // <w, w'>; for N = 1 the sign product, +-1
  double tol = 1e-12;
};

Complex radial_kernel(int degree, int dim, double r, double r_prime, const ComplexTime& z);

// Smallest M with sum_{m > M} sup|C~_m^nu| exp(-Re z (m + nu)^2) < tol.
// tol = +inf gives 0.
int truncation_degree(int dim, const ComplexTime& z, double tol);

struct SeriesEvaluation {
  Complex value;
  int truncation;      // last degree kept
  double error_bound;  // certified bound on |value - K|
};

SeriesEvaluation full_kernel_series_detailed(const KernelQuery& q);
Complex full_kernel_series(const KernelQuery& q);

// N = 1; zero when x and x' have opposite signs.
Complex closed_form_1d(double x, double x_prime, const ComplexTime& z);

// N = 2 with t = <w, w'>, angle taken as arccos t in [0, pi].
Complex closed_form_2d(double r, double r_prime, double t, const ComplexTime& z);

// N = 2 with the signed angle phi - phi'.
Complex closed_form_2d_angle(double r, double r_prime, double angle, const ComplexTime& z);

// N = 4. For |t| > 1 - 1e-6 the removable singularity is avoided by summing
// the Gegenbauer series to series_tol instead.
Complex closed_form_4d(double r, double r_prime, double t, const ComplexTime& z,
                       double series_tol = 1e-15);

// Closed form when requested and available (N in {1, 2, 4}), else the series.
Complex evaluate_kernel(const KernelQuery& q, bool prefer_closed_form);

// Kernel of exp(z (|x|^2 Laplacian - 1)) = e^{-z} exp(z |x|^2 Laplacian).
Complex renormalized_laguerre_kernel(const KernelQuery& q, bool prefer_closed_form = false);

// int K_m(r, r'; z) f(r') r'^{N-3} dr' by the rectangle rule in s = log r'.
RadialSamples apply_radial_kernel_quadrature(const RadialSamples& f, int degree,
                                             const ComplexTime& z);

// Degree-m slot of a factored field: p (x) f -> p (x) (K_m f).
FactoredField apply_kernel_quadrature(const FactoredField& field, const ComplexTime& z);

// Full-grid quadrature of the N = 2 kernel over S^1 x R.
GridField2D apply_kernel_quadrature(const GridField2D& field, const ComplexTime& z);

// Full quadrature of the N = 1 kernel over R \ {0}.
SignedLineField apply_kernel_quadrature(const SignedLineField& field, const ComplexTime& z);

} // namespace conformal_heat
