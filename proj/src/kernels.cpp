#include "conformal_heat/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "conformal_heat/errors.hpp"
#include "conformal_heat/special_functions.hpp"

namespace conformal_heat {

namespace {

constexpr double kPi = std::numbers::pi;

// Rectangle-rule heat kernels are cut where they fall below this fraction of
// their peak.
constexpr double kToeplitzCutoff = 1e-20;

// Beyond this, |t| is treated as the diagonal in the N = 4 closed form.
constexpr double kDiagonalGap = 1e-6;

double half_weight(int dim) { return 0.5 * (dim - 2); }

void require_radii(double r, double r_prime) {
  if (!(r > 0.0) || !(r_prime > 0.0)) {
    throw DomainError("kernel: radii must be positive");
  }
}

// (4 pi z)^{-1/2} exp(-(log r - log r')^2 / (4z)), principal root.
Complex log_gaussian(double r, double r_prime, const ComplexTime& z) {
  const double ds = std::log(r) - std::log(r_prime);
  return std::exp(-(ds * ds) / (4.0 * z.z())) / (2.0 * std::sqrt(kPi) * z.sqrt_z());
}

Complex angular_theta_tau(const ComplexTime& z) { return Complex(0.0, 1.0 / kPi) * z.z(); }

double checked_t(double t) {
  if (!(std::abs(t) <= 1.0 + kDomainSlack)) {
    throw DomainError("kernel: <w, w'> must lie in [-1, 1]");
  }
  return std::clamp(t, -1.0, 1.0);
}

// sum_j R(i - j) w_j ds with R(d) = (4 pi z)^{-1/2} exp(-(d ds)^2 / (4z)).
std::vector<Complex> heat_convolve(const LogRadialGrid& grid, const std::vector<Complex>& w,
                                   const ComplexTime& z) {
  const std::size_t n = grid.size();
  const double ds = grid.ds();
  const Complex peak = 1.0 / (2.0 * std::sqrt(kPi) * z.sqrt_z());

  std::vector<Complex> profile;
  profile.reserve(n);
  for (std::size_t d = 0; d < n; ++d) {
    const double delta = static_cast<double>(d) * ds;
    const Complex value = peak * std::exp(-(delta * delta) / (4.0 * z.z()));
    if (d > 0 && std::abs(value) < kToeplitzCutoff * std::abs(peak)) {
      break;
    }
    profile.push_back(value * ds);
  }
  const std::size_t band = profile.size();

  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i + 1 >= band ? i + 1 - band : 0;
    const std::size_t hi = std::min(n - 1, i + band - 1);
    Complex acc{0.0, 0.0};
    for (std::size_t j = lo; j <= hi; ++j) {
      acc += profile[i >= j ? i - j : j - i] * w[j];
    }
    out[i] = acc;
  }
  return out;
}

} // namespace

ComplexTime::ComplexTime(Complex z) : z_(z), sqrt_z_(std::sqrt(z)) {}

void require_kernel_regime(const ComplexTime& z) {
  if (!(z.z().real() > 0.0)) {
    throw InvalidRegimeError(
        "exp(z |x|^2 Laplacian) has an integral kernel only for Re z > 0; the "
        "operator is bounded for Re z >= 0 (unitary at Re z = 0), where it is "
        "available through the spectral route");
  }
}

Complex radial_kernel(int degree, int dim, double r, double r_prime, const ComplexTime& z) {
  require_kernel_regime(z);
  require_radii(r, r_prime);
  if (degree < 0) {
    throw DomainError("radial_kernel: negative degree");
  }
  const double nu = half_weight(dim);
  const double shift = degree + nu;
  return log_gaussian(r, r_prime, z) * std::exp(-z.z() * (shift * shift)) *
         std::pow(r * r_prime, -nu);
}

int truncation_degree(int dim, const ComplexTime& z, double tol) {
  require_kernel_regime(z);
  if (std::isinf(tol) && tol > 0.0) {
    return 0;
  }
  if (!(tol > 0.0)) {
    throw DomainError("truncation_degree: tolerance must be positive");
  }
  const double nu = half_weight(dim);
  const double rate = z.z().real();
  const double log_tol = std::log(tol);
  auto log_term = [&](int m) {
    const double sup = gegenbauer_tilde_sup(m, nu);
    if (sup == 0.0) {
      return -std::numeric_limits<double>::infinity();
    }
    return std::log(sup) - rate * (m + nu) * (m + nu);
  };

  // Collect terms until they are far below tol and decaying at least
  // geometrically with ratio 1/2; the rest of the tail is then bounded by the
  // last term.
  constexpr int kMaxDegree = 10'000'000;
  std::vector<double> terms;
  double current = log_term(0);
  for (int m = 0;; ++m) {
    if (m >= kMaxDegree) {
      throw InvalidRegimeError("truncation_degree: Re z too small for series evaluation");
    }
    const double next = log_term(m + 1);
    terms.push_back(std::exp(current));
    const bool tiny = current < log_tol - 40.0;
    // Both logs are -inf once the series has terminated (N = 1).
    const bool decaying = !(next - current >= -std::numbers::ln2);
    if (tiny && decaying) {
      terms.push_back(std::exp(next));  // remainder bound, never kept
      break;
    }
    current = next;
  }

  // tail[M] = sum of terms with index > M, plus the remainder bound.
  double tail = 0.0;
  const int last = static_cast<int>(terms.size()) - 1;
  int best = last;
  for (int M = last - 1; M >= 0; --M) {
    tail += terms[static_cast<std::size_t>(M) + 1];
    if (tail < tol) {
      best = M;
    } else {
      break;
    }
  }
  return best;
}

SeriesEvaluation full_kernel_series_detailed(const KernelQuery& q) {
  require_kernel_regime(q.z);
  require_radii(q.r, q.r_prime);
  const double t = checked_t(q.t);
  if (q.dim == 1 && std::abs(t) != 1.0) {
    throw DomainError("full_kernel_series: for N = 1, t must be +1 or -1");
  }
  const double nu = half_weight(q.dim);
  const int M = truncation_degree(q.dim, q.z, q.tol);

  const Complex prefactor = log_gaussian(q.r, q.r_prime, q.z) *
                            std::pow(q.r * q.r_prime, -nu) / sphere_area(q.dim);
  Complex sum{0.0, 0.0};
  for (int m = M; m >= 0; --m) {
    const double shift = m + nu;
    sum += std::exp(-q.z.z() * (shift * shift)) * gegenbauer_tilde(m, nu, t);
  }
  const double bound = std::isinf(q.tol) ? q.tol : std::abs(prefactor) * q.tol;
  return {prefactor * sum, M, bound};
}

Complex full_kernel_series(const KernelQuery& q) { return full_kernel_series_detailed(q).value; }

Complex closed_form_1d(double x, double x_prime, const ComplexTime& z) {
  require_kernel_regime(z);
  if (x == 0.0 || x_prime == 0.0) {
    throw DomainError("closed_form_1d: arguments must be nonzero");
  }
  if ((x > 0.0) != (x_prime > 0.0)) {
    return {0.0, 0.0};
  }
  const double ax = std::abs(x);
  const double axp = std::abs(x_prime);
  return std::exp(-z.z() / 4.0) * log_gaussian(ax, axp, z) * std::sqrt(ax * axp);
}

Complex closed_form_2d_angle(double r, double r_prime, double angle, const ComplexTime& z) {
  require_kernel_regime(z);
  require_radii(r, r_prime);
  const Complex th = theta({angle / (2.0 * kPi), angular_theta_tau(z), 1e-17});
  return log_gaussian(r, r_prime, z) * th / (2.0 * kPi);
}

Complex closed_form_2d(double r, double r_prime, double t, const ComplexTime& z) {
  return closed_form_2d_angle(r, r_prime, std::acos(checked_t(t)), z);
}

Complex closed_form_4d(double r, double r_prime, double t, const ComplexTime& z,
                       double series_tol) {
  require_kernel_regime(z);
  require_radii(r, r_prime);
  t = checked_t(t);
  if (std::abs(t) > 1.0 - kDiagonalGap) {
    return full_kernel_series({4, z, r, r_prime, t, series_tol});
  }
  const double angle = std::acos(t);
  const Complex dv = theta_dv({angle / (2.0 * kPi), angular_theta_tau(z), 1e-17});
  const double inv_sin = 1.0 / std::sqrt(1.0 - t * t);
  return -log_gaussian(r, r_prime, z) / (r * r_prime) * inv_sin * dv /
         (8.0 * kPi * kPi * kPi);
}

Complex evaluate_kernel(const KernelQuery& q, bool prefer_closed_form) {
  if (prefer_closed_form) {
    switch (q.dim) {
      case 1: {
        const double t = checked_t(q.t);
        if (std::abs(t) != 1.0) {
          throw DomainError("kernel: for N = 1, t must be +1 or -1");
        }
        require_radii(q.r, q.r_prime);
        return closed_form_1d(q.r, t * q.r_prime, q.z);
      }
      case 2:
        return closed_form_2d(q.r, q.r_prime, q.t, q.z);
      case 4:
        return closed_form_4d(q.r, q.r_prime, q.t, q.z, q.tol);
      default:
        break;
    }
  }
  return full_kernel_series(q);
}

Complex renormalized_laguerre_kernel(const KernelQuery& q, bool prefer_closed_form) {
  return std::exp(-q.z.z()) * evaluate_kernel(q, prefer_closed_form);
}

// K_m(r_i, r_j) f_j r_j^{N-2} ds
//   = e^{-z (m+nu)^2} r_i^{-nu} R(s_i - s_j) r_j^{nu} f_j ds.
RadialSamples apply_radial_kernel_quadrature(const RadialSamples& f, int degree,
                                             const ComplexTime& z) {
  require_kernel_regime(z);
  if (degree < 0) {
    throw DomainError("apply_radial_kernel_quadrature: negative degree");
  }
  const auto& grid = f.grid;
  const double nu = grid.weight_exponent();
  const std::size_t n = grid.size();

  std::vector<Complex> weighted(n);
  for (std::size_t j = 0; j < n; ++j) {
    weighted[j] = std::exp(nu * grid.s(j)) * f.values[j];
  }
  const auto convolved = heat_convolve(grid, weighted, z);

  const double shift = degree + nu;
  const Complex decay = std::exp(-z.z() * (shift * shift));
  RadialSamples out(grid);
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = decay * std::exp(-nu * grid.s(i)) * convolved[i];
  }
  return out;
}

FactoredField apply_kernel_quadrature(const FactoredField& field, const ComplexTime& z) {
  return field.with_radial(apply_radial_kernel_quadrature(field.radial(), field.degree(), z));
}

GridField2D apply_kernel_quadrature(const GridField2D& field, const ComplexTime& z) {
  require_kernel_regime(z);
  const std::size_t n_phi = field.n_phi();
  const auto& grid = field.grid();
  const std::size_t n = grid.size();

  // Angular factor (2 pi)^{-1} theta((phi - phi') / (2 pi), i z / pi), times
  // the angular quadrature weight.
  const double weight = 2.0 * kPi / static_cast<double>(n_phi);
  std::vector<Complex> angular(n_phi);
  for (std::size_t d = 0; d < n_phi; ++d) {
    const double angle = field.angle(d);
    angular[d] =
        weight * theta({angle / (2.0 * kPi), angular_theta_tau(z), 1e-17}) / (2.0 * kPi);
  }

  GridField2D mixed(n_phi, grid);
  for (std::size_t a = 0; a < n_phi; ++a) {
    for (std::size_t b = 0; b < n_phi; ++b) {
      const Complex k = angular[(a + n_phi - b) % n_phi];
      for (std::size_t j = 0; j < n; ++j) {
        mixed.at(a, j) += k * field.at(b, j);
      }
    }
  }

  GridField2D out(n_phi, grid);
  std::vector<Complex> row(n);
  for (std::size_t a = 0; a < n_phi; ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = mixed.at(a, j);
    }
    const auto convolved = heat_convolve(grid, row, z);
    for (std::size_t j = 0; j < n; ++j) {
      out.at(a, j) = convolved[j];
    }
  }
  return out;
}

// Opposite signs do not interact; on each half line the kernel is
// e^{-z/4} (4 pi z)^{-1/2} exp(-(s - s')^2 / (4z)) (r r')^{1/2}.
SignedLineField apply_kernel_quadrature(const SignedLineField& field, const ComplexTime& z) {
  require_kernel_regime(z);
  const auto& grid = field.positive.grid;
  const std::size_t n = grid.size();
  const Complex decay = std::exp(-z.z() / 4.0);

  auto half_line = [&](const RadialSamples& f) {
    // |x'|^{-2} dx' = r'^{-1} ds' on each half line.
    std::vector<Complex> weighted(n);
    for (std::size_t j = 0; j < n; ++j) {
      weighted[j] = std::exp(-0.5 * grid.s(j)) * f.values[j];
    }
    const auto convolved = heat_convolve(grid, weighted, z);
    RadialSamples out(grid);
    for (std::size_t i = 0; i < n; ++i) {
      out.values[i] = decay * std::exp(0.5 * grid.s(i)) * convolved[i];
    }
    return out;
  };
  return {half_line(field.positive), half_line(field.negative)};
}

} // namespace conformal_heat
