// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if
// any criterion fails. Each measurement is rebuilt here from the public API
// rather than read back from the verification suites.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "conformal_heat/kernels.hpp"
#include "conformal_heat/oracle.hpp"
#include "conformal_heat/special_functions.hpp"
#include "conformal_heat/spectral_calculus.hpp"
#include "conformal_heat/spherical.hpp"

using namespace conformal_heat;

namespace {

constexpr double kPi = std::numbers::pi;

struct Measurement {
  double defect;
  double tolerance;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds; 0 for none
  std::function<std::vector<Measurement>()> measure;
};

double relative_error(const RadialSamples& got, const RadialSamples& want) {
  RadialSamples diff(want.grid);
  for (std::size_t j = 0; j < diff.values.size(); ++j) {
    diff.values[j] = got.values[j] - want.values[j];
  }
  return weighted_norm(diff) / weighted_norm(want);
}

std::vector<Measurement> sl2_triple() {
  const auto basis = standard_basis();
  double worst = 0.0;
  for (const double a : {0.5, 1.0, 2.0, 3.0}) {
    for (int dim = 1; dim <= 4; ++dim) {
      for (int m = 0; m <= 3; ++m) {
        const auto H = LadderOperatorSpec::radial(LadderKind::H, a, m, dim);
        const auto P = LadderOperatorSpec::radial(LadderKind::EPlus, a, m, dim);
        const auto M = LadderOperatorSpec::radial(LadderKind::EMinus, a, m, dim);
        worst = std::max({worst, commutator_defect(H, P, single(P, 2.0), basis),
                          commutator_defect(H, M, single(M, -2.0), basis),
                          commutator_defect(P, M, single(H), basis)});
      }
    }
  }
  return {{worst, 1e-12, "max coefficient defect"}};
}

std::vector<Measurement> degeneration() {
  const auto basis = standard_basis();
  const double as[] = {1e-1, 1e-2, 1e-3};
  const std::pair<LadderKind, LadderKind> pairs[] = {{LadderKind::H, LadderKind::EPlus},
                                                     {LadderKind::H, LadderKind::EMinus},
                                                     {LadderKind::EPlus, LadderKind::EMinus}};
  double ratio_gap = 0.0;
  double commuting = 0.0;
  for (int dim = 1; dim <= 4; ++dim) {
    for (int m = 0; m <= 3; ++m) {
      for (const auto& pair : pairs) {
        const auto trace = degeneration_trace(as, pair, m, dim, basis);
        for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
          ratio_gap = std::max(ratio_gap, std::abs(trace[i] / trace[i + 1] - 10.0));
        }
      }
      const auto H = LadderOperatorSpec::degenerate(LadderKind::H, m, dim);
      const auto P = LadderOperatorSpec::degenerate(LadderKind::EPlus, m, dim);
      const auto M = LadderOperatorSpec::degenerate(LadderKind::EMinus, m, dim);
      commuting = std::max({commuting, commutator_defect(H, P, {}, basis),
                            commutator_defect(H, M, {}, basis), commutator_defect(P, M, {}, basis)});
    }
  }
  return {{ratio_gap, 0.5, "max |ratio - 10|"}, {commuting, 1e-12, "g0 commutators"}};
}

std::vector<Measurement> spectral_vs_kernel() {
  double worst = 0.0;
  for (int dim = 2; dim <= 4; ++dim) {
    const auto grid = LogRadialGrid::standard(dim);
    const auto profile =
        u_inverse(sample_log(grid, [](double s) { return Complex(std::exp(-0.5 * s * s)); }));
    for (int m = 0; m <= 4; ++m) {
      for (const Complex z : {Complex(0.5), Complex(0.3, 0.4)}) {
        const auto spectral = apply_exp_g0(G0Exponent::heat(z), FactoredField(m, profile));
        const auto quad = apply_radial_kernel_quadrature(profile, m, z);
        worst = std::max(worst, relative_error(spectral.radial(), quad));
      }
    }
  }
  return {{worst, 1e-8, "relative L2"}};
}

std::vector<Measurement> closed_vs_series() {
  const double rs[] = {0.5, 1.0, 2.0};
  const double rps[] = {0.7, 1.0, 3.0};
  const double ts[] = {-0.6, 0.2, 0.85};
  const Complex zs[] = {Complex(0.3), Complex(0.5, 0.3), Complex(1.2, -0.5)};
  double one = 0.0;
  double two = 0.0;
  double four = 0.0;
  for (const double r : rs) {
    for (const double rp : rps) {
      for (const Complex zc : zs) {
        const ComplexTime z(zc);
        const double ds = std::log(r / rp);
        const double gauss = std::abs(std::exp(-(ds * ds) / (4.0 * zc)) / std::sqrt(4.0 * kPi * zc));
        const double nu1 = std::sqrt(r * rp);
        for (const double sign : {1.0, -1.0}) {
          const Complex series = full_kernel_series({1, z, r, rp, sign, 1e-16});
          const Complex closed = closed_form_1d(r, sign * rp, z);
          one = std::max(one, std::abs(series - closed) / (gauss * nu1 / 2.0));
        }
        for (const double t : ts) {
          const Complex s2 = full_kernel_series({2, z, r, rp, t, 1e-15});
          two = std::max(two, std::abs(s2 - closed_form_2d(r, rp, t, z)) / (gauss / (2.0 * kPi)));
          const Complex s4 = full_kernel_series({4, z, r, rp, t, 1e-15});
          four = std::max(four, std::abs(s4 - closed_form_4d(r, rp, t, z)) /
                                    (gauss / (r * rp) / (2.0 * kPi * kPi)));
        }
      }
    }
  }
  return {{one, 1e-14, "N = 1"}, {two, 1e-9, "N = 2"}, {four, 1e-8, "N = 4"}};
}

std::vector<Measurement> unitarity() {
  std::mt19937_64 rng(977);
  std::normal_distribution<double> normal;
  const G0Exponent exps[] = {G0Exponent::heat({0.0, 0.7}), G0Exponent::heat({0.0, -1.3}),
                             G0Exponent::scaling(0.4)};
  double worst = 0.0;
  for (int dim = 1; dim <= 4; ++dim) {
    const auto grid = LogRadialGrid::standard(dim);
    for (int m = 0; m <= (dim == 1 ? 1 : 3); ++m) {
      FrequencySamples spectrum(grid);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        if (std::abs(grid.sigma(k)) <= 10.0) {
          spectrum.values[k] = {normal(rng), normal(rng)};
        }
      }
      const FactoredField field(m, u_inverse(fourier_inverse(spectrum)));
      for (const auto& e : exps) {
        const double before = field.norm();
        worst = std::max(worst, std::abs(apply_exp_g0(e, field).norm() - before) / before);
      }
    }
  }
  return {{worst, 1e-12, "relative norm change"}};
}

std::vector<Measurement> scaling() {
  auto bump = [](double s) {
    const double u = s / 4.0;
    return std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) * std::cos(2.0 * s) : 0.0;
  };
  double worst = 0.0;
  for (int dim = 1; dim <= 4; ++dim) {
    const auto grid = LogRadialGrid::standard(dim);
    const double nu = grid.weight_exponent();
    auto F = [&](double r) { return Complex(std::pow(r, -nu) * bump(std::log(r))); };
    const auto f = sample_radial(grid, F);
    for (const int steps : {64, -160, 7}) {
      const double t = 0.5 * steps * grid.ds();
      const auto spectral = apply_exp_g0(G0Exponent::scaling(t), FactoredField(1, f));
      const auto direct = sample_radial(grid, [&](double r) {
        return std::exp((dim - 2.0) * t) * F(std::exp(2.0 * t) * r);
      });
      worst = std::max(worst, relative_error(spectral.radial(), direct));
    }
  }
  return {{worst, 1e-10, "relative L2"}};
}

std::vector<Measurement> semigroup() {
  const int pairs[][2] = {{1, 0}, {2, 0}, {2, 3}, {3, 1}, {4, 2}};
  const Complex z1(0.3);
  const Complex z2(0.5);
  double worst = 0.0;
  for (const auto& [dim, m] : pairs) {
    const auto grid = LogRadialGrid::standard(dim);
    for (const auto& [r, rp] : {std::pair{1.0, 1.0}, std::pair{0.4, 1.9}, std::pair{2.5, 0.8}}) {
      Complex sum{0.0, 0.0};
      for (std::size_t j = 0; j < grid.size(); ++j) {
        const double rho = grid.r(j);
        sum += radial_kernel(m, dim, r, rho, z1) * radial_kernel(m, dim, rho, rp, z2) *
               std::pow(rho, dim - 2.0) * grid.ds();
      }
      const Complex direct = radial_kernel(m, dim, r, rp, z1 + z2);
      worst = std::max(worst, std::abs(sum - direct) / std::abs(direct));
    }
  }
  return {{worst, 1e-6, "relative error"}};
}

std::vector<Measurement> theta_checks() {
  const double at_i = std::abs(theta({0.0, {0.0, 1.0}}) - 1.086434811213308);
  double fd = 0.0;
  const double h = 1e-5;
  for (const Complex tau : {Complex(0.0, 1.0), Complex(0.0, 0.5), Complex(0.3, 0.7)}) {
    for (const double v : {0.1, 0.2, 0.37}) {
      const Complex exact = theta_dv({v, tau});
      const Complex diff = (theta({v + h, tau}) - theta({v - h, tau})) / (2.0 * h);
      fd = std::max(fd, std::abs(diff - exact) / std::abs(exact));
    }
  }
  return {{at_i, 1e-12, "theta(0, i)"}, {fd, 1e-6, "d theta / dv relative"}};
}

std::vector<Measurement> projection() {
  const LogRadialGrid grid(2, -2.0, 2.0, 8);
  const std::size_t n_phi = 256;
  double idempotence = 0.0;
  double orthogonality = 0.0;
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  GridField2D band(n_phi, grid);
  for (int k = -20; k <= 20; ++k) {
    const Complex c(normal(rng), normal(rng));
    for (std::size_t a = 0; a < n_phi; ++a) {
      for (std::size_t j = 0; j < grid.size(); ++j) {
        band.at(a, j) += c * std::exp(Complex(0.0, k * band.angle(a))) / (1.0 + j);
      }
    }
  }
  for (int m = 0; m <= 20; ++m) {
    const auto once = project_by_quadrature(m, band);
    const auto twice = project_by_quadrature(m, once);
    for (std::size_t i = 0; i < once.values().size(); ++i) {
      idempotence = std::max(idempotence, std::abs(twice.values()[i] - once.values()[i]));
    }
    for (int k = -20; k <= 20; ++k) {
      if (std::abs(k) == m) {
        continue;
      }
      GridField2D mode(n_phi, grid);
      for (std::size_t a = 0; a < n_phi; ++a) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
          mode.at(a, j) = std::exp(Complex(0.0, k * mode.angle(a)));
        }
      }
      const auto projected = project_by_quadrature(m, mode);
      for (const auto& v : projected.values()) {
        orthogonality = std::max(orthogonality, std::abs(v));
      }
    }
  }
  return {{idempotence, 1e-10, "idempotence"}, {orthogonality, 1e-10, "orthogonality"}};
}

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "sl2 triple relations", 1.0, sl2_triple},
      {2, "degeneration linear in a, g0 commutative", 1.0, degeneration},
      {3, "spectral multiplier equals radial kernel quadrature", 10.0, spectral_vs_kernel},
      {4, "closed forms equal truncated series", 5.0, closed_vs_series},
      {5, "unitary exponents preserve the weighted norm", 2.0, unitarity},
      {6, "spectral dilation equals direct dilation", 2.0, scaling},
      {7, "radial kernel semigroup law", 5.0, semigroup},
      {8, "theta reference value and derivative", 0.0, theta_checks},
      {9, "projection idempotence and orthogonality on S^1", 2.0, projection},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Measurement> results;
    std::string error;
    try {
      results = c.measure();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = error.empty() && (c.time_limit == 0.0 || seconds < c.time_limit);
    std::string detail;
    for (const auto& m : results) {
      ok = ok && std::isfinite(m.defect) && m.defect < m.tolerance;
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s%s=%.3e (<%.0e)", detail.empty() ? "" : ", ",
                    m.detail.c_str(), m.defect, m.tolerance);
      detail += buf;
    }
    if (!error.empty()) {
      detail = "error: " + error;
    }
    char timing[64];
    if (c.time_limit > 0.0) {
      std::snprintf(timing, sizeof timing, "%.3fs (<%.0fs)", seconds, c.time_limit);
    } else {
      std::snprintf(timing, sizeof timing, "%.3fs", seconds);
    }
    std::printf("%s criterion %d: %s; %s; %s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                detail.c_str(), timing);
    failures += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
