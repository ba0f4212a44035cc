#pragma once

// Functional calculus of the commutative algebra spanned by
//
//   D = 2 sum_j x_j d/dx_j + N - 2,   i,   i |x|^2 Laplacian
//
// on L^2(R^N, |x|^{-2} dx). After splitting into spherical-harmonic degrees
// and passing to the log-radial frequency sigma, the operator
//
//   exp((z1 / i) D + z2 + z3 |x|^2 Laplacian)
//
// acts on the degree-m slot as multiplication by
//
//   exp(2 z1 sigma + z2 - z3 (sigma^2 + (m + (N-2)/2)^2)).

#include <complex>

#include "conformal_heat/log_radial.hpp"
#include "conformal_heat/spherical.hpp"

namespace conformal_heat {

using Complex = std::complex<double>;

struct G0Exponent {
  Complex z1{0.0, 0.0};  // coefficient of D / i
  Complex z2{0.0, 0.0};  // scalar
  Complex z3{0.0, 0.0};  // coefficient of |x|^2 Laplacian

  G0Exponent operator+(const G0Exponent& o) const { return {z1 + o.z1, z2 + o.z2, z3 + o.z3}; }
  G0Exponent operator-() const { return {-z1, -z2, -z3}; }

  // (0, 0, z)
  static G0Exponent heat(Complex z) { return {{0.0, 0.0}, {0.0, 0.0}, z}; }
  // (i t, 0, 0), the dilation group.
  static G0Exponent scaling(double t) { return {{0.0, t}, {0.0, 0.0}, {0.0, 0.0}}; }
};

enum class Boundedness { BoundedUnitary, Bounded, Unbounded };

const char* to_string(Boundedness b);

// Unitary iff Re z1 = Re z2 = Re z3 = 0; bounded iff Re z1 = 0 and
// Re z3 >= 0 (z2 then only scales the norm by |e^{z2}|).
Boundedness is_bounded(const G0Exponent& exponent);

Complex multiplier(const G0Exponent& exponent, int degree, double sigma, int dim);

// Conjugation by the log-radial Fourier transform. Throws UnboundedRegimeError
// for unbounded exponents.
FactoredField apply_exp_g0(const G0Exponent& exponent, const FactoredField& field);

// Degree by degree through the angular decomposition.
GridField2D apply_exp_g0(const G0Exponent& exponent, const GridField2D& field);
SignedLineField apply_exp_g0(const G0Exponent& exponent, const SignedLineField& field);

// exp(z |x|^2 Laplacian - z): the a -> 0 renormalized Laguerre semigroup.
FactoredField apply_renormalized_laguerre(Complex z, const FactoredField& field);

// Number of grid steps k with 2t = k ds; throws MisalignedShiftError when 2t
// is not an integer multiple of ds (relative slack 1e-9).
long long aligned_shift(double t, const LogRadialGrid& grid);

// F -> e^{(N-2)t} F(e^{2t} x) as an index shift on the periodic log grid.
RadialSamples apply_scaling_direct(double t, const RadialSamples& radial);
FactoredField apply_scaling_direct(double t, const FactoredField& field);
GridField2D apply_scaling_direct(double t, const GridField2D& field);
SignedLineField apply_scaling_direct(double t, const SignedLineField& field);

} // namespace conformal_heat
