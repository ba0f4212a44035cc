#pragma once

// Spherical-harmonic bookkeeping on S^{N-1} with the unnormalized surface
// measure (total mass 2 pi^{N/2} / Gamma(N/2)).
//
// A factored field p (x) f is the function r w -> p(w) f(r) with p a
// spherical harmonic of degree m. For N = 2 the harmonic is an explicit
// Fourier mode e^{i k phi} (degree |k|); for N = 1 it is 1 or sgn; for N >= 3
// it is an abstract unit-norm element of the degree-m space.

#include <complex>
#include <cstddef>
#include <vector>

#include "conformal_heat/log_radial.hpp"

namespace conformal_heat {

struct SphericalPart {
  enum class Kind { FourierMode, Parity, Abstract };

  Kind kind = Kind::Abstract;
  // Signed mode k for FourierMode, 0 (even) or 1 (odd) for Parity.
  int index = 0;

  // L^2(S^{N-1}) norm of the harmonic.
  double norm() const;

  friend bool operator==(const SphericalPart&, const SphericalPart&) = default;
};

class FactoredField {
public:
  // Degree-m slot with an abstract unit harmonic. For N <= 2 prefer the
  // explicit constructors below.
  FactoredField(int degree, RadialSamples radial);

  // N = 2, p(phi) = e^{i k phi}.
  static FactoredField fourier_mode(int mode, RadialSamples radial);

  // N = 1, p = 1 (parity 0) or sgn (parity 1).
  static FactoredField parity(int parity, RadialSamples radial);

  int dim() const { return radial_.grid.dim(); }
  int degree() const { return degree_; }
  const SphericalPart& spherical_part() const { return part_; }
  const RadialSamples& radial() const { return radial_; }
  RadialSamples& radial() { return radial_; }

  // Same harmonic, new radial profile.
  FactoredField with_radial(RadialSamples radial) const;

  // Norm in L^2(R^N, |x|^{-2} dx).
  double norm() const;

private:
  FactoredField(int degree, SphericalPart part, RadialSamples radial);

  int degree_;
  SphericalPart part_;
  RadialSamples radial_;
};

// Samples F(phi_a, r_j) on equispaced angles phi_a = 2 pi a / n_phi.
class GridField2D {
public:
  // Throws DomainError unless n_phi is a power of two >= 8 and grid.dim() == 2.
  GridField2D(std::size_t n_phi, LogRadialGrid grid);
  GridField2D(std::size_t n_phi, LogRadialGrid grid, std::vector<Complex> values);

  std::size_t n_phi() const { return n_phi_; }
  const LogRadialGrid& grid() const { return grid_; }
  double angle(std::size_t a) const;

  Complex& at(std::size_t a, std::size_t j) { return values_[a * grid_.size() + j]; }
  const Complex& at(std::size_t a, std::size_t j) const {
    return values_[a * grid_.size() + j];
  }
  const std::vector<Complex>& values() const { return values_; }

  // Norm in L^2(R^2, |x|^{-2} dx) = L^2(S^1 x R, dphi ds).
  double norm() const;

private:
  std::size_t n_phi_;
  LogRadialGrid grid_;
  std::vector<Complex> values_;
};

// N = 1 samples F(+r_j) and F(-r_j).
struct SignedLineField {
  RadialSamples positive;
  RadialSamples negative;

  explicit SignedLineField(LogRadialGrid grid);
  SignedLineField(RadialSamples pos, RadialSamples neg);

  double norm() const;
};

// 2 pi^{N/2} / Gamma(N/2)
double sphere_area(int dim);

// Zonal kernel of the orthogonal projection onto degree-m harmonics:
// Gamma(N/2) / (2 pi^{N/2}) * C~_m^{(N-2)/2}(t).
double projection_kernel(int degree, int dim, double t);

// One component per angular mode e^{i k phi}, k = -n_phi/2 .. n_phi/2 - 1,
// in increasing k.
std::vector<FactoredField> decompose_2d(const GridField2D& field);

GridField2D recompose_2d(const std::vector<FactoredField>& components, std::size_t n_phi);

// Quadrature of the degree-m projection kernel over S^1 applied to every
// radius of the field.
GridField2D project_by_quadrature(int degree, const GridField2D& field);

struct ParityParts {
  Complex even;  // P_0 p(+-1)
  Complex odd;   // P_1 p(+-1) = +- odd
};

// Projection of a function on S^0 = {+1, -1} onto degrees 0 and 1.
ParityParts project_pm(Complex at_plus, Complex at_minus);

// Components m = 0 (parity 0) and m = 1 (parity 1).
std::vector<FactoredField> decompose_1d(const SignedLineField& field);

SignedLineField recompose_1d(const std::vector<FactoredField>& components);

} // namespace conformal_heat
