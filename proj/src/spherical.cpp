#include "conformal_heat/spherical.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <utility>

#include "conformal_heat/errors.hpp"
#include "conformal_heat/special_functions.hpp"
#include "fft.hpp"

namespace conformal_heat {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t wrap_mode(long long mode, std::size_t n) {
  const auto nn = static_cast<long long>(n);
  return static_cast<std::size_t>(((mode % nn) + nn) % nn);
}

} // namespace

double SphericalPart::norm() const {
  switch (kind) {
    case Kind::FourierMode:
      return std::sqrt(2.0 * kPi);
    case Kind::Parity:
      return std::sqrt(2.0);
    case Kind::Abstract:
      break;
  }
  return 1.0;
}

FactoredField::FactoredField(int degree, SphericalPart part, RadialSamples radial)
    : degree_(degree), part_(part), radial_(std::move(radial)) {
  if (degree_ < 0) {
    throw DomainError("FactoredField: negative degree");
  }
  if (dim() == 1 && degree_ > 1) {
    throw DomainError("FactoredField: S^0 carries harmonics of degree 0 and 1 only");
  }
}

FactoredField::FactoredField(int degree, RadialSamples radial)
    : FactoredField(degree, SphericalPart{}, std::move(radial)) {}

FactoredField FactoredField::fourier_mode(int mode, RadialSamples radial) {
  if (radial.grid.dim() != 2) {
    throw DomainError("FactoredField::fourier_mode: requires dimension 2");
  }
  return {std::abs(mode), SphericalPart{SphericalPart::Kind::FourierMode, mode},
          std::move(radial)};
}

FactoredField FactoredField::parity(int parity, RadialSamples radial) {
  if (radial.grid.dim() != 1) {
    throw DomainError("FactoredField::parity: requires dimension 1");
  }
  if (parity != 0 && parity != 1) {
    throw DomainError("FactoredField::parity: parity must be 0 or 1");
  }
  return {parity, SphericalPart{SphericalPart::Kind::Parity, parity}, std::move(radial)};
}

FactoredField FactoredField::with_radial(RadialSamples radial) const {
  if (!(radial.grid == radial_.grid)) {
    throw DomainError("FactoredField::with_radial: grid mismatch");
  }
  return {degree_, part_, std::move(radial)};
}

double FactoredField::norm() const { return part_.norm() * weighted_norm(radial_); }

GridField2D::GridField2D(std::size_t n_phi, LogRadialGrid grid)
    : GridField2D(n_phi, grid, std::vector<Complex>(n_phi * grid.size())) {}

GridField2D::GridField2D(std::size_t n_phi, LogRadialGrid grid, std::vector<Complex> values)
    : n_phi_(n_phi), grid_(grid), values_(std::move(values)) {
  if (n_phi_ < 8 || !std::has_single_bit(n_phi_)) {
    throw DomainError("GridField2D: angle count must be a power of two >= 8");
  }
  if (grid_.dim() != 2) {
    throw DomainError("GridField2D: radial grid must have dimension 2");
  }
  if (values_.size() != n_phi_ * grid_.size()) {
    throw DomainError("GridField2D: expected " + std::to_string(n_phi_ * grid_.size()) +
                      " values, got " + std::to_string(values_.size()));
  }
}

double GridField2D::angle(std::size_t a) const {
  return 2.0 * kPi * static_cast<double>(a) / static_cast<double>(n_phi_);
}

double GridField2D::norm() const {
  double sum = 0.0;
  for (const auto& v : values_) {
    sum += std::norm(v);
  }
  return std::sqrt(sum * grid_.ds() * 2.0 * kPi / static_cast<double>(n_phi_));
}

SignedLineField::SignedLineField(LogRadialGrid grid) : positive(grid), negative(grid) {
  if (grid.dim() != 1) {
    throw DomainError("SignedLineField: radial grid must have dimension 1");
  }
}

SignedLineField::SignedLineField(RadialSamples pos, RadialSamples neg)
    : positive(std::move(pos)), negative(std::move(neg)) {
  if (positive.grid.dim() != 1 || !(positive.grid == negative.grid)) {
    throw DomainError("SignedLineField: need matching dimension-1 grids");
  }
}

double SignedLineField::norm() const {
  return std::hypot(weighted_norm(positive), weighted_norm(negative));
}

double sphere_area(int dim) {
  if (dim < 1) {
    throw DomainError("sphere_area: dimension must be >= 1");
  }
  const double half = 0.5 * dim;
  return 2.0 * std::pow(kPi, half) / std::tgamma(half);
}

double projection_kernel(int degree, int dim, double t) {
  return gegenbauer_tilde(degree, 0.5 * (dim - 2), t) / sphere_area(dim);
}

std::vector<FactoredField> decompose_2d(const GridField2D& field) {
  const std::size_t n_phi = field.n_phi();
  const auto& grid = field.grid();
  const std::size_t n = grid.size();

  // coefficients[k][j], k in DFT order.
  std::vector<std::vector<Complex>> coefficients(n_phi, std::vector<Complex>(n));
  std::vector<Complex> buffer(n_phi);
  const double inv = 1.0 / static_cast<double>(n_phi);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t a = 0; a < n_phi; ++a) {
      buffer[a] = field.at(a, j);
    }
    detail::dft_in_place(buffer, -1);
    for (std::size_t k = 0; k < n_phi; ++k) {
      coefficients[k][j] = buffer[k] * inv;
    }
  }

  std::vector<FactoredField> out;
  out.reserve(n_phi);
  const auto half = static_cast<long long>(n_phi / 2);
  for (long long mode = -half; mode < half; ++mode) {
    auto& column = coefficients[wrap_mode(mode, n_phi)];
    out.push_back(FactoredField::fourier_mode(static_cast<int>(mode),
                                              RadialSamples(grid, std::move(column))));
  }
  return out;
}

GridField2D recompose_2d(const std::vector<FactoredField>& components, std::size_t n_phi) {
  if (components.empty()) {
    throw DomainError("recompose_2d: no components");
  }
  const auto& grid = components.front().radial().grid;
  const std::size_t n = grid.size();
  std::vector<std::vector<Complex>> coefficients(n_phi, std::vector<Complex>(n));
  for (const auto& c : components) {
    if (c.spherical_part().kind != SphericalPart::Kind::FourierMode) {
      throw DomainError("recompose_2d: components must be Fourier modes");
    }
    if (!(c.radial().grid == grid)) {
      throw DomainError("recompose_2d: grid mismatch");
    }
    auto& column = coefficients[wrap_mode(c.spherical_part().index, n_phi)];
    for (std::size_t j = 0; j < n; ++j) {
      column[j] += c.radial().values[j];
    }
  }

  GridField2D out(n_phi, grid);
  std::vector<Complex> buffer(n_phi);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n_phi; ++k) {
      buffer[k] = coefficients[k][j];
    }
    detail::dft_in_place(buffer, +1);
    for (std::size_t a = 0; a < n_phi; ++a) {
      out.at(a, j) = buffer[a];
    }
  }
  return out;
}

GridField2D project_by_quadrature(int degree, const GridField2D& field) {
  const std::size_t n_phi = field.n_phi();
  const std::size_t n = field.grid().size();
  const double weight = 2.0 * kPi / static_cast<double>(n_phi);

  // The kernel depends on phi_a - phi_b only.
  std::vector<double> kernel(n_phi);
  for (std::size_t d = 0; d < n_phi; ++d) {
    kernel[d] = weight * projection_kernel(degree, 2, std::cos(field.angle(d)));
  }

  GridField2D out(n_phi, field.grid());
  for (std::size_t a = 0; a < n_phi; ++a) {
    for (std::size_t b = 0; b < n_phi; ++b) {
      const double k = kernel[(a + n_phi - b) % n_phi];
      for (std::size_t j = 0; j < n; ++j) {
        out.at(a, j) += k * field.at(b, j);
      }
    }
  }
  return out;
}

ParityParts project_pm(Complex at_plus, Complex at_minus) {
  return {0.5 * (at_plus + at_minus), 0.5 * (at_plus - at_minus)};
}

std::vector<FactoredField> decompose_1d(const SignedLineField& field) {
  const auto& grid = field.positive.grid;
  RadialSamples even(grid);
  RadialSamples odd(grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const auto parts = project_pm(field.positive.values[j], field.negative.values[j]);
    even.values[j] = parts.even;
    odd.values[j] = parts.odd;
  }
  std::vector<FactoredField> out;
  out.push_back(FactoredField::parity(0, std::move(even)));
  out.push_back(FactoredField::parity(1, std::move(odd)));
  return out;
}

SignedLineField recompose_1d(const std::vector<FactoredField>& components) {
  if (components.empty()) {
    throw DomainError("recompose_1d: no components");
  }
  SignedLineField out(components.front().radial().grid);
  for (const auto& c : components) {
    if (c.spherical_part().kind != SphericalPart::Kind::Parity) {
      throw DomainError("recompose_1d: components must carry parity harmonics");
    }
    if (!(c.radial().grid == out.positive.grid)) {
      throw DomainError("recompose_1d: grid mismatch");
    }
    const double sign_at_minus = c.spherical_part().index == 0 ? 1.0 : -1.0;
    for (std::size_t j = 0; j < out.positive.values.size(); ++j) {
      out.positive.values[j] += c.radial().values[j];
      out.negative.values[j] += sign_at_minus * c.radial().values[j];
    }
  }
  return out;
}

} // namespace conformal_heat
