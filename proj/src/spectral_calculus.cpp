#include "conformal_heat/spectral_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "conformal_heat/errors.hpp"

namespace conformal_heat {

namespace {

void require_bounded(const G0Exponent& exponent) {
  if (is_bounded(exponent) == Boundedness::Unbounded) {
    throw UnboundedRegimeError(
        "exp(z1/i D + z2 + z3 |x|^2 Laplacian) is unbounded unless Re z1 = 0 "
        "and Re z3 >= 0");
  }
}

bool is_identity(const G0Exponent& e) { return e.z1 == 0.0 && e.z3 == 0.0; }

} // namespace

const char* to_string(Boundedness b) {
  switch (b) {
    case Boundedness::BoundedUnitary:
      return "bounded-unitary";
    case Boundedness::Bounded:
      return "bounded";
    case Boundedness::Unbounded:
      break;
  }
  return "unbounded";
}

Boundedness is_bounded(const G0Exponent& exponent) {
  if (exponent.z1.real() != 0.0 || exponent.z3.real() < 0.0) {
    return Boundedness::Unbounded;
  }
  if (exponent.z2.real() == 0.0 && exponent.z3.real() == 0.0) {
    return Boundedness::BoundedUnitary;
  }
  return Boundedness::Bounded;
}

Complex multiplier(const G0Exponent& exponent, int degree, double sigma, int dim) {
  const double shift = degree + 0.5 * (dim - 2);
  return std::exp(2.0 * exponent.z1 * sigma + exponent.z2 -
                  exponent.z3 * (sigma * sigma + shift * shift));
}

FactoredField apply_exp_g0(const G0Exponent& exponent, const FactoredField& field) {
  require_bounded(exponent);
  const Complex scalar = std::exp(exponent.z2);
  if (is_identity(exponent)) {
    RadialSamples out = field.radial();
    for (auto& v : out.values) {
      v *= scalar;
    }
    return field.with_radial(std::move(out));
  }

  // z2 stays outside the discretization as an exact scalar.
  const G0Exponent spectral{exponent.z1, {0.0, 0.0}, exponent.z3};
  auto spectrum = fourier_forward(u_forward(field.radial()));
  const auto& grid = spectrum.grid;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    spectrum.values[k] *= multiplier(spectral, field.degree(), grid.sigma(k), field.dim());
  }
  RadialSamples out = u_inverse(fourier_inverse(spectrum));
  for (auto& v : out.values) {
    v *= scalar;
  }
  return field.with_radial(std::move(out));
}

GridField2D apply_exp_g0(const G0Exponent& exponent, const GridField2D& field) {
  require_bounded(exponent);
  auto components = decompose_2d(field);
  for (auto& c : components) {
    c = apply_exp_g0(exponent, c);
  }
  return recompose_2d(components, field.n_phi());
}

SignedLineField apply_exp_g0(const G0Exponent& exponent, const SignedLineField& field) {
  require_bounded(exponent);
  auto components = decompose_1d(field);
  for (auto& c : components) {
    c = apply_exp_g0(exponent, c);
  }
  return recompose_1d(components);
}

FactoredField apply_renormalized_laguerre(Complex z, const FactoredField& field) {
  return apply_exp_g0({{0.0, 0.0}, -z, z}, field);
}

long long aligned_shift(double t, const LogRadialGrid& grid) {
  const double steps = 2.0 * t / grid.ds();
  const double rounded = std::nearbyint(steps);
  if (!std::isfinite(steps) || std::abs(steps - rounded) > 1e-9 * std::max(1.0, std::abs(steps))) {
    throw MisalignedShiftError("scaling: 2t = " + std::to_string(2.0 * t) +
                               " is not a multiple of the grid spacing " +
                               std::to_string(grid.ds()));
  }
  return static_cast<long long>(rounded);
}

// The shift acts on g = U_N f, periodically; on f this is
// f(r_j) -> e^{(N-2)t} f(r_{j+k}) away from the wrap.
RadialSamples apply_scaling_direct(double t, const RadialSamples& radial) {
  const auto& grid = radial.grid;
  const long long k = aligned_shift(t, grid);
  if (k == 0) {
    return radial;
  }
  const auto n = static_cast<long long>(grid.size());
  const LogSamples g = u_forward(radial);
  LogSamples shifted(grid);
  for (long long j = 0; j < n; ++j) {
    const long long source = (((j + k) % n) + n) % n;
    shifted.values[static_cast<std::size_t>(j)] = g.values[static_cast<std::size_t>(source)];
  }
  return u_inverse(shifted);
}

FactoredField apply_scaling_direct(double t, const FactoredField& field) {
  return field.with_radial(apply_scaling_direct(t, field.radial()));
}

GridField2D apply_scaling_direct(double t, const GridField2D& field) {
  const auto& grid = field.grid();
  const std::size_t n = grid.size();
  std::vector<Complex> values;
  values.reserve(field.n_phi() * n);
  for (std::size_t a = 0; a < field.n_phi(); ++a) {
    RadialSamples row(grid);
    for (std::size_t j = 0; j < n; ++j) {
      row.values[j] = field.at(a, j);
    }
    const auto scaled = apply_scaling_direct(t, row);
    values.insert(values.end(), scaled.values.begin(), scaled.values.end());
  }
  return {field.n_phi(), grid, std::move(values)};
}

SignedLineField apply_scaling_direct(double t, const SignedLineField& field) {
  return {apply_scaling_direct(t, field.positive), apply_scaling_direct(t, field.negative)};
}

} // namespace conformal_heat
