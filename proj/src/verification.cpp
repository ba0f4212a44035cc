#include "conformal_heat/verification.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "conformal_heat/errors.hpp"
#include "conformal_heat/kernels.hpp"
#include "conformal_heat/log_radial.hpp"
#include "conformal_heat/oracle.hpp"
#include "conformal_heat/special_functions.hpp"
#include "conformal_heat/spectral_calculus.hpp"
#include "conformal_heat/spherical.hpp"

namespace conformal_heat {

namespace {

constexpr double kPi = std::numbers::pi;

// theta(0, i), summed directly in extended precision (mpmath, 30 digits).
constexpr double kThetaAtZeroI = 1.086434811213308;

class SuiteBuilder {
public:
  void check(std::string name, double defect, double tolerance) {
    const bool ok = std::isfinite(defect) && defect < tolerance;
    checks_.push_back({std::move(name), defect, tolerance, ok});
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

private:
  std::vector<CheckResult> checks_;
};

double relative_error(const RadialSamples& got, const RadialSamples& want) {
  RadialSamples diff(want.grid);
  for (std::size_t j = 0; j < diff.values.size(); ++j) {
    diff.values[j] = got.values[j] - want.values[j];
  }
  return weighted_norm(diff) / weighted_norm(want);
}

RadialSamples gaussian_profile(const LogRadialGrid& grid) {
  return u_inverse(sample_log(grid, [](double s) { return Complex(std::exp(-0.5 * s * s)); }));
}

// Random coefficients on |sigma| <= band, zero beyond.
RadialSamples band_limited_profile(const LogRadialGrid& grid, std::mt19937_64& rng,
                                   double band) {
  std::normal_distribution<double> normal;
  FrequencySamples spectrum(grid);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (std::abs(grid.sigma(k)) <= band) {
      spectrum.values[k] = {normal(rng), normal(rng)};
    }
  }
  return u_inverse(fourier_inverse(spectrum));
}

// C^infinity bump supported in |s| < width.
double bump(double s, double width) {
  const double u = s / width;
  if (std::abs(u) >= 1.0) {
    return 0.0;
  }
  return std::exp(-1.0 / (1.0 - u * u)) * std::cos(3.0 * s);
}

void special_suite(SuiteBuilder& out) {
  double generating = 0.0;
  for (const double nu : {0.5, 1.0, 1.5}) {
    for (const double t : {-0.9, 0.0, 0.7}) {
      const double xi = 0.3;
      double sum = 0.0;
      double power = 1.0;
      for (int m = 0; m <= 40; ++m) {
        sum += gegenbauer_c(m, nu, t) * power;
        power *= xi;
      }
      const double exact = std::pow(1.0 - 2.0 * t * xi + xi * xi, -nu);
      generating = std::max(generating, std::abs(sum - exact));
    }
  }
  out.check("gegenbauer generating function", generating, 1e-10);

  double sup_defect = 0.0;
  for (const double nu : {0.5, 1.0, 1.5, 2.0}) {
    for (int m = 0; m <= 12; ++m) {
      double grid_max = 0.0;
      for (int i = 0; i <= 1000; ++i) {
        const double t = -1.0 + 2.0 * i / 1000.0;
        grid_max = std::max(grid_max, std::abs(gegenbauer_tilde(m, nu, t)));
      }
      const double at_one = gegenbauer_tilde(m, nu, 1.0);
      const double bound = gegenbauer_tilde_sup(m, nu);
      sup_defect = std::max({sup_defect, std::abs(grid_max - at_one) / at_one,
                             std::abs(bound - at_one) / at_one});
    }
  }
  out.check("gegenbauer sup attained at t = 1", sup_defect, 1e-9);

  double chebyshev = 0.0;
  for (int i = 1; i < 200; ++i) {
    const double angle = kPi * i / 200.0;
    for (int m = 0; m <= 30; ++m) {
      const double c = std::cos(angle);
      chebyshev = std::max({chebyshev, std::abs(chebyshev_t(m, c) - std::cos(m * angle)),
                            std::abs(chebyshev_u(m, c) -
                                     std::sin((m + 1) * angle) / std::sin(angle))});
    }
  }
  out.check("chebyshev trigonometric identities", chebyshev, 1e-11);
}

void sl2_suite(SuiteBuilder& out) {
  using K = LadderKind;
  const auto basis = standard_basis();
  std::array<double, 9> defects{};
  for (const double a : {0.5, 1.0, 2.0, 3.0}) {
    for (int dim = 1; dim <= 4; ++dim) {
      for (int m = 0; m <= 3; ++m) {
        const auto h = LadderOperatorSpec::radial(K::H, a, m, dim);
        const auto ep = LadderOperatorSpec::radial(K::EPlus, a, m, dim);
        const auto em = LadderOperatorSpec::radial(K::EMinus, a, m, dim);
        auto& d = defects;
        d[0] = std::max(d[0], commutator_defect(h, ep, single(ep, 2.0), basis));
        d[1] = std::max(d[1], commutator_defect(h, em, single(em, -2.0), basis));
        d[2] = std::max(d[2], commutator_defect(ep, em, single(h), basis));

        const auto ah = single(h, a);
        const auto aep = single(ep, a);
        const auto aem = single(em, a);
        d[3] = std::max(d[3], commutator_defect(ah, aep, single(ep, 2.0 * a * a), basis));
        d[4] = std::max(d[4], commutator_defect(ah, aem, single(em, -2.0 * a * a), basis));
        d[5] = std::max(d[5], commutator_defect(aep, aem, single(h, a * a), basis));

        const auto h0 = LadderOperatorSpec::degenerate(K::H, m, dim);
        const auto ep0 = LadderOperatorSpec::degenerate(K::EPlus, m, dim);
        const auto em0 = LadderOperatorSpec::degenerate(K::EMinus, m, dim);
        d[6] = std::max(d[6], commutator_defect(h0, ep0, {}, basis));
        d[7] = std::max(d[7], commutator_defect(h0, em0, {}, basis));
        d[8] = std::max(d[8], commutator_defect(ep0, em0, {}, basis));
      }
    }
  }
  const char* names[] = {"[H, E+] = 2 E+",
                         "[H, E-] = -2 E-",
                         "[E+, E-] = H",
                         "[aH, aE+] = 2a aE+",
                         "[aH, aE-] = -2a aE-",
                         "[aE+, aE-] = a aH",
                         "[2theta+N-2, i] = 0",
                         "[2theta+N-2, i(theta-m)(theta+m+N-2)] = 0",
                         "[i, i(theta-m)(theta+m+N-2)] = 0"};
  for (std::size_t i = 0; i < defects.size(); ++i) {
    out.check(names[i], defects[i], 1e-12);
  }
}

void degeneration_suite(SuiteBuilder& out) {
  using K = LadderKind;
  const auto basis = standard_basis();
  const std::array<double, 3> as{1e-1, 1e-2, 1e-3};
  const std::pair<K, K> pairs[] = {{K::H, K::EPlus}, {K::H, K::EMinus}, {K::EPlus, K::EMinus}};
  const char* names[] = {"[aH, aE+] linear in a", "[aH, aE-] linear in a",
                         "[aE+, aE-] linear in a"};
  for (std::size_t p = 0; p < 3; ++p) {
    double worst = 0.0;
    for (int dim = 1; dim <= 4; ++dim) {
      for (int m = 0; m <= 3; ++m) {
        const auto d = degeneration_trace(as, pairs[p], m, dim, basis);
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
          worst = std::max(worst, std::abs(d[i] / d[i + 1] - 10.0));
        }
      }
    }
    out.check(names[p], worst, 0.5);
  }

  double commutators = 0.0;
  double contraction = 0.0;
  for (int dim = 1; dim <= 4; ++dim) {
    for (int m = 0; m <= 3; ++m) {
      const auto h0 = LadderOperatorSpec::degenerate(K::H, m, dim);
      const auto ep0 = LadderOperatorSpec::degenerate(K::EPlus, m, dim);
      const auto em0 = LadderOperatorSpec::degenerate(K::EMinus, m, dim);
      commutators = std::max({commutators, commutator_defect(h0, ep0, {}, basis),
                              commutator_defect(h0, em0, {}, basis),
                              commutator_defect(ep0, em0, {}, basis)});
      for (const auto kind : {K::H, K::EPlus, K::EMinus}) {
        contraction = std::max(contraction, contraction_defect(kind, m, dim, 1e-6, basis));
      }
    }
  }
  out.check("degenerate generators commute", commutators, 1e-12);
  out.check("a -> 0 limit of rescaled generators", contraction, 1e-10);
}

void theta_suite(SuiteBuilder& out) {
  const Complex tau_i{0.0, 1.0};
  out.check("theta(0, i) reference value",
            std::abs(theta({0.0, tau_i, 1e-16}) - kThetaAtZeroI), 1e-12);

  double fd = 0.0;
  const double h = 1e-5;
  for (const Complex v : {Complex(0.2), Complex(0.37), Complex(0.1, 0.05)}) {
    for (const Complex tau : {Complex(0.0, 0.5), Complex(0.0, 1.0), Complex(0.3, 0.8)}) {
      const Complex d = theta_dv({v, tau, 1e-16});
      const Complex approx =
          (theta({v + h, tau, 1e-16}) - theta({v - h, tau, 1e-16})) / (2.0 * h);
      fd = std::max(fd, std::abs(d - approx) / std::abs(d));
    }
  }
  out.check("d theta / dv against finite differences", fd, 1e-6);

  const double rs[] = {0.5, 1.0, 2.0};
  const double rps[] = {0.8, 1.5, 3.0};
  const double ts[] = {-0.8, 0.1, 0.9};
  const Complex zs[] = {Complex(0.25), Complex(0.4, 0.2), Complex(1.1, -0.6)};

  double one = 0.0;
  double two = 0.0;
  double four = 0.0;
  for (const double r : rs) {
    for (const double rp : rps) {
      for (const Complex zc : zs) {
        const ComplexTime z(zc);
        for (const double sign : {1.0, -1.0}) {
          const Complex series = full_kernel_series({1, z, r, rp, sign, 1e-16});
          const Complex closed = closed_form_1d(r, sign * rp, z);
          const double scale = std::abs(closed_form_1d(r, rp, z));
          one = std::max(one, std::abs(series - closed) / scale);
        }
        for (const double t : ts) {
          const double ds = std::log(r / rp);
          const double gauss = std::abs(std::exp(-(ds * ds) / (4.0 * zc)) /
                                        (2.0 * std::sqrt(kPi) * z.sqrt_z()));
          const Complex s2 = full_kernel_series({2, z, r, rp, t, 1e-15});
          two = std::max(two, std::abs(s2 - closed_form_2d(r, rp, t, z)) /
                                  (gauss / sphere_area(2)));
          const Complex s4 = full_kernel_series({4, z, r, rp, t, 1e-15});
          four = std::max(four, std::abs(s4 - closed_form_4d(r, rp, t, z)) /
                                    (gauss / (r * rp) / sphere_area(4)));
        }
      }
    }
  }
  out.check("N = 1 closed form vs series", one, 1e-14);
  out.check("N = 2 closed form vs series", two, 1e-9);
  out.check("N = 4 closed form vs series", four, 1e-8);
}

void spectral_suite(SuiteBuilder& out) {
  for (int dim = 2; dim <= 4; ++dim) {
    const auto grid = LogRadialGrid::standard(dim);
    const auto profile = gaussian_profile(grid);
    double worst = 0.0;
    for (int m = 0; m <= 4; ++m) {
      for (const Complex z : {Complex(0.5), Complex(0.3, 0.4)}) {
        const FactoredField field(m, profile);
        const auto spectral = apply_exp_g0(G0Exponent::heat(z), field);
        const auto quadrature = apply_radial_kernel_quadrature(profile, m, z);
        worst = std::max(worst, relative_error(spectral.radial(), quadrature));
      }
    }
    out.check("spectral vs kernel quadrature, N = " + std::to_string(dim), worst, 1e-8);
  }
}

void unitarity_suite(SuiteBuilder& out) {
  std::mt19937_64 rng(20240611);
  const G0Exponent exponents[] = {
      G0Exponent::heat({0.0, 0.7}),
      G0Exponent::heat({0.0, -1.3}),
      G0Exponent::scaling(0.4),
      {{0.0, 0.4}, {0.0, 0.25}, {0.0, 0.7}},
  };
  double worst = 0.0;
  for (int dim = 1; dim <= 4; ++dim) {
    const auto grid = LogRadialGrid::standard(dim);
    for (int m = 0; m <= (dim == 1 ? 1 : 3); ++m) {
      const FactoredField field(m, band_limited_profile(grid, rng, 12.0));
      const double before = field.norm();
      for (const auto& e : exponents) {
        worst = std::max(worst, std::abs(apply_exp_g0(e, field).norm() - before) / before);
      }
    }
  }
  out.check("norm preserved by unitary exponents", worst, 1e-12);
}

void scaling_suite(SuiteBuilder& out) {
  double spectral_vs_formula = 0.0;
  double direct_vs_formula = 0.0;
  for (int dim = 1; dim <= 4; ++dim) {
    const auto grid = LogRadialGrid::standard(dim);
    const double nu = grid.weight_exponent();
    auto f = [&](double r) { return Complex(std::pow(r, -nu) * bump(std::log(r), 6.0)); };
    const FactoredField field(dim == 1 ? 1 : 2, sample_radial(grid, f));
    for (const int steps : {64, -160, 7}) {
      const double t = 0.5 * steps * grid.ds();
      const auto expected = sample_radial(grid, [&](double r) {
        return std::exp((dim - 2.0) * t) * f(std::exp(2.0 * t) * r);
      });
      const auto spectral = apply_exp_g0(G0Exponent::scaling(t), field);
      const auto direct = apply_scaling_direct(t, field);
      spectral_vs_formula =
          std::max(spectral_vs_formula, relative_error(spectral.radial(), expected));
      direct_vs_formula = std::max(direct_vs_formula, relative_error(direct.radial(), expected));
    }
  }
  out.check("spectral dilation vs e^{(N-2)t} F(e^{2t} x)", spectral_vs_formula, 1e-10);
  out.check("direct dilation vs e^{(N-2)t} F(e^{2t} x)", direct_vs_formula, 1e-10);
}

void semigroup_suite(SuiteBuilder& out) {
  const std::pair<int, int> pairs[] = {{1, 0}, {2, 0}, {2, 3}, {3, 1}, {4, 2}};
  const ComplexTime z1(0.3);
  const ComplexTime z2(0.5);
  const ComplexTime z12(0.8);
  double worst = 0.0;
  for (const auto& [dim, m] : pairs) {
    const auto grid = LogRadialGrid::standard(dim);
    for (const double s : {-1.0, 0.0, 0.5}) {
      for (const double sp : {-0.7, 0.0, 1.2}) {
        const double r = std::exp(s);
        const double rp = std::exp(sp);
        Complex sum{0.0, 0.0};
        for (std::size_t j = 0; j < grid.size(); ++j) {
          const double rho = grid.r(j);
          sum += radial_kernel(m, dim, r, rho, z1) * radial_kernel(m, dim, rho, rp, z2) *
                 std::pow(rho, dim - 2.0);
        }
        sum *= grid.ds();
        const Complex exact = radial_kernel(m, dim, r, rp, z12);
        worst = std::max(worst, std::abs(sum - exact) / std::abs(exact));
      }
    }
  }
  out.check("K_m(z1) K_m(z2) = K_m(z1 + z2)", worst, 1e-6);
}

void projection_suite(SuiteBuilder& out) {
  constexpr std::size_t n_phi = 256;
  constexpr int max_degree = 20;
  const LogRadialGrid grid(2, -1.0, 1.0, 8);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;

  GridField2D random_field(n_phi, grid);
  for (int k = -max_degree; k <= max_degree; ++k) {
    const Complex c(normal(rng), normal(rng));
    for (std::size_t a = 0; a < n_phi; ++a) {
      for (std::size_t j = 0; j < grid.size(); ++j) {
        random_field.at(a, j) += c * std::polar(1.0, k * random_field.angle(a)) *
                                 std::exp(-grid.s(j) * grid.s(j));
      }
    }
  }

  double idempotence = 0.0;
  double orthogonality = 0.0;
  double reproduction = 0.0;
  for (int m = 0; m <= max_degree; ++m) {
    const auto once = project_by_quadrature(m, random_field);
    const auto twice = project_by_quadrature(m, once);
    for (std::size_t i = 0; i < once.values().size(); ++i) {
      idempotence = std::max(idempotence, std::abs(twice.values()[i] - once.values()[i]));
    }
    for (int k = -max_degree; k <= max_degree; ++k) {
      GridField2D mode(n_phi, grid);
      for (std::size_t a = 0; a < n_phi; ++a) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
          mode.at(a, j) = std::polar(1.0, k * mode.angle(a));
        }
      }
      const auto projected = project_by_quadrature(m, mode);
      for (std::size_t i = 0; i < mode.values().size(); ++i) {
        if (std::abs(k) == m) {
          reproduction =
              std::max(reproduction, std::abs(projected.values()[i] - mode.values()[i]));
        } else {
          orthogonality = std::max(orthogonality, std::abs(projected.values()[i]));
        }
      }
    }
  }
  out.check("P_m P_m = P_m on S^1", idempotence, 1e-10);
  out.check("P_m e^{i k phi} = 0 for |k| != m", orthogonality, 1e-10);
  out.check("P_m e^{i k phi} = e^{i k phi} for |k| = m", reproduction, 1e-10);
}

using SuiteFn = std::function<void(SuiteBuilder&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"special", special_suite},       {"sl2", sl2_suite},
      {"degeneration", degeneration_suite}, {"theta", theta_suite},
      {"spectral", spectral_suite},     {"unitarity", unitarity_suite},
      {"scaling", scaling_suite},       {"semigroup", semigroup_suite},
      {"projection", projection_suite},
  };
  return suites;
}

} // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

double SuiteReport::max_defect() const {
  double out = 0.0;
  for (const auto& c : checks) {
    out = std::max(out, c.defect);
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "special", "sl2",       "degeneration", "theta",     "spectral",
      "unitarity", "scaling", "semigroup",    "projection"};
  return names;
}

SuiteReport run_suite(const std::string& name) {
  const auto& suites = registry();
  const auto it = suites.find(name);
  if (it == suites.end()) {
    throw DomainError("unknown suite '" + name + "'");
  }
  SuiteBuilder builder;
  const auto start = std::chrono::steady_clock::now();
  it->second(builder);
  const auto stop = std::chrono::steady_clock::now();
  return {name, builder.take(), std::chrono::duration<double>(stop - start).count()};
}

std::vector<SuiteReport> run_all_suites() {
  std::vector<SuiteReport> out;
  for (const auto& name : suite_names()) {
    out.push_back(run_suite(name));
  }
  return out;
}

} // namespace conformal_heat
