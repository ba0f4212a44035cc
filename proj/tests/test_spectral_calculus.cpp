#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "conformal_heat/errors.hpp"
#include "conformal_heat/kernels.hpp"
#include "conformal_heat/spectral_calculus.hpp"

using namespace conformal_heat;

namespace {

constexpr double kPi = std::numbers::pi;

RadialSamples gaussian_in_s(const LogRadialGrid& grid, double centre = 0.0, double width = 1.0) {
  const double nu = grid.weight_exponent();
  return sample_radial(grid, [&](double r) {
    const double s = (std::log(r) - centre) / width;
    return std::pow(r, -nu) * Complex(std::exp(-0.5 * s * s), 0.2 * s * std::exp(-0.5 * s * s));
  });
}

double relative_error(const RadialSamples& a, const RadialSamples& b) {
  RadialSamples diff(a.grid);
  for (std::size_t j = 0; j < a.values.size(); ++j) {
    diff.values[j] = a.values[j] - b.values[j];
  }
  return weighted_norm(diff) / weighted_norm(b);
}

RadialSamples random_profile(const LogRadialGrid& grid, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const double nu = grid.weight_exponent();
  double c[8];
  for (double& x : c) {
    x = normal(rng);
  }
  return sample_radial(grid, [&](double r) {
    const double s = std::log(r);
    return std::pow(r, -nu) * std::exp(-0.5 * (s - c[0]) * (s - c[0])) *
           Complex(c[1] + c[2] * std::cos(c[3] * s), c[4] + c[5] * std::sin(c[6] * s));
  });
}

} // namespace

TEST_CASE("multiplier examples") {
  CHECK(multiplier(G0Exponent::heat(0.7), 0, 0.0, 2) == Complex(1.0, 0.0));
  CHECK(std::abs(multiplier(G0Exponent::heat(0.7), 1, 0.0, 2) - std::exp(-0.7)) < 1e-16);
  for (const double sigma : {-3.0, 0.0, 1.25}) {
    const Complex w = multiplier(G0Exponent::scaling(0.4), 2, sigma, 3);
    CHECK(std::abs(w - std::exp(Complex(0.0, 0.8 * sigma))) < 1e-15);
    CHECK(std::abs(std::abs(w) - 1.0) < 1e-15);
  }
}

TEST_CASE("boundedness classification") {
  CHECK(is_bounded(G0Exponent::scaling(0.3)) == Boundedness::BoundedUnitary);
  CHECK(is_bounded(G0Exponent::heat(1.0)) == Boundedness::Bounded);
  CHECK(is_bounded({{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}) == Boundedness::Unbounded);
  CHECK(is_bounded(G0Exponent::heat({-0.1, 2.0})) == Boundedness::Unbounded);
  CHECK(is_bounded({{0.0, 0.0}, {2.0, 0.0}, {0.0, 0.0}}) == Boundedness::Bounded);
  CHECK(is_bounded({{0.0, 1.0}, {0.0, 3.0}, {0.0, -1.0}}) == Boundedness::BoundedUnitary);

  const FactoredField field(1, gaussian_in_s(LogRadialGrid::standard(3)));
  CHECK_THROWS_AS(apply_exp_g0({{0.5, 0.0}, {0.0, 0.0}, {0.0, 0.0}}, field),
                  UnboundedRegimeError);
  CHECK_THROWS_AS(apply_exp_g0(G0Exponent::heat(-1.0), field), InvalidRegimeError);
}

TEST_CASE("identity and scalar exponents") {
  const FactoredField field(2, gaussian_in_s(LogRadialGrid::standard(4)));
  const auto same = apply_exp_g0({}, field);
  CHECK(relative_error(same.radial(), field.radial()) < 1e-13);
  CHECK(same.degree() == 2);

  const auto times_i = apply_exp_g0({{0.0, 0.0}, {0.0, kPi / 2.0}, {0.0, 0.0}}, field);
  for (std::size_t j = 0; j < field.radial().values.size(); ++j) {
    CHECK(std::abs(times_i.radial().values[j] - Complex(0.0, 1.0) * field.radial().values[j]) <
          1e-15);
  }
}

TEST_CASE("heat exponent matches kernel quadrature") {
  for (int dim = 2; dim <= 4; ++dim) {
    const auto grid = LogRadialGrid::standard(dim);
    const auto profile = gaussian_in_s(grid, 0.3, 1.2);
    for (int m = 0; m <= 4; ++m) {
      for (const Complex z : {Complex(0.5), Complex(0.3, 0.4)}) {
        const auto spectral = apply_exp_g0(G0Exponent::heat(z), FactoredField(m, profile));
        const auto quad = apply_radial_kernel_quadrature(profile, m, z);
        CHECK(relative_error(spectral.radial(), quad) < 1e-8);
      }
    }
  }
}

TEST_CASE("grid and signed-line fields agree with their components") {
  const LogRadialGrid grid(2, -16.0, 16.0, 1024);
  const auto radial = gaussian_in_s(grid);
  GridField2D field(16, grid);
  for (std::size_t a = 0; a < 16; ++a) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      field.at(a, j) = std::exp(Complex(0.0, -3.0 * field.angle(a))) * radial.values[j];
    }
  }
  const G0Exponent e{{0.0, 0.2}, {0.0, 0.0}, {0.3, 0.1}};
  const auto out = apply_exp_g0(e, field);
  const auto expected = apply_exp_g0(e, FactoredField::fourier_mode(-3, radial));
  double worst = 0.0;
  for (std::size_t a = 0; a < 16; ++a) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      worst = std::max(worst, std::abs(out.at(a, j) - std::exp(Complex(0.0, -3.0 * field.angle(a))) *
                                                          expected.radial().values[j]));
    }
  }
  CHECK(worst < 1e-13);

  const auto line_grid = grid.with_dim(1);
  SignedLineField line(gaussian_in_s(line_grid), gaussian_in_s(line_grid, 1.0));
  const auto evolved = apply_exp_g0(e, line);
  const auto parts = decompose_1d(line);
  const auto even = apply_exp_g0(e, parts[0]);
  const auto odd = apply_exp_g0(e, parts[1]);
  for (std::size_t j = 0; j < line_grid.size(); ++j) {
    CHECK(std::abs(evolved.positive.values[j] - (even.radial().values[j] + odd.radial().values[j])) <
          1e-13);
    CHECK(std::abs(evolved.negative.values[j] - (even.radial().values[j] - odd.radial().values[j])) <
          1e-13);
  }
}

TEST_CASE("group law for bounded exponents") {
  const G0Exponent a{{0.0, 0.3}, {0.1, 0.2}, {0.2, 0.5}};
  const G0Exponent b{{0.0, -0.1}, {-0.3, 0.0}, {0.15, -0.4}};
  for (int dim = 1; dim <= 4; ++dim) {
    const FactoredField field(1, gaussian_in_s(LogRadialGrid::standard(dim)));
    const auto composed = apply_exp_g0(a, apply_exp_g0(b, field));
    const auto direct = apply_exp_g0(a + b, field);
    CHECK(relative_error(composed.radial(), direct.radial()) < 1e-10);
  }
}

TEST_CASE("unitary exponents preserve the weighted norm") {
  std::mt19937_64 rng(42);
  const G0Exponent exps[] = {G0Exponent::heat({0.0, 0.7}), G0Exponent::heat({0.0, -1.3}),
                             G0Exponent::scaling(0.4)};
  for (int dim = 1; dim <= 4; ++dim) {
    const auto grid = LogRadialGrid::standard(dim);
    for (int m = 0; m <= 1; ++m) {
      const FactoredField field(m, random_profile(grid, rng));
      for (const auto& e : exps) {
        const auto out = apply_exp_g0(e, field);
        CHECK(std::abs(out.norm() - field.norm()) < 1e-12 * field.norm());
        const auto back = apply_exp_g0(-e, out);
        CHECK(relative_error(back.radial(), field.radial()) < 1e-10);
      }
    }
  }
}

TEST_CASE("direct scaling") {
  const auto grid = LogRadialGrid::standard(3);
  const auto f = gaussian_in_s(grid);
  CHECK(relative_error(apply_scaling_direct(0.0, f), f) == 0.0);

  const double t = 40 * grid.ds();
  const auto there = apply_scaling_direct(t, f);
  CHECK(std::abs(weighted_norm(there) - weighted_norm(f)) < 1e-12 * weighted_norm(f));
  CHECK(relative_error(apply_scaling_direct(-t, there), f) < 1e-15);

  // e^{(N - 2) t} F(e^{2t} x)
  for (std::size_t j = 200; j < grid.size() - 200; j += 37) {
    const double r = grid.r(j);
    const double nu = grid.weight_exponent();
    const double s = std::log(r) + 2.0 * t;
    const Complex expected =
        std::exp((3.0 - 2.0) * t) * std::exp(-nu * s) *
        Complex(std::exp(-0.5 * s * s), 0.2 * s * std::exp(-0.5 * s * s));
    CHECK(std::abs(there.values[j] - expected) < 1e-12 * std::abs(expected) + 1e-300);
  }

  const auto spectral = apply_exp_g0(G0Exponent::scaling(t), FactoredField(1, f));
  CHECK(relative_error(spectral.radial(), there) < 1e-10);

  CHECK(aligned_shift(t, grid) == 80);
  CHECK_THROWS_AS(aligned_shift(0.3 * grid.ds(), grid), MisalignedShiftError);
}

TEST_CASE("heat generator is (theta - m)(theta + m + N - 2)") {
  const int dim = 3;
  const int m = 1;
  const auto grid = LogRadialGrid::standard(dim);
  auto profile = [](double r) {
    const double s = std::log(r);
    return Complex(std::exp(-0.5 * s * s));
  };
  const FactoredField field(m, sample_radial(grid, profile));

  // (theta - m)(theta + m + N - 2) f by centred differences in log r.
  const double h = 1e-3;
  auto theta_of = [&](auto f) {
    return [=](double r) { return (f(r * std::exp(h)) - f(r * std::exp(-h))) / (2.0 * h); };
  };
  auto target_fn = [&](double r) {
    const auto t1 = theta_of(profile);
    const auto t2 = theta_of(t1);
    return t2(r) + (dim - 2.0) * t1(r) - double(m * (m + dim - 2)) * profile(r);
  };
  const auto target = sample_radial(grid, target_fn);

  auto quotient = [&](double step) {
    const auto evolved = apply_exp_g0(G0Exponent::heat(step), field);
    RadialSamples q(grid);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      q.values[j] = (evolved.radial().values[j] - field.radial().values[j]) / step;
    }
    return q;
  };
  const auto d2 = quotient(1e-2);
  const auto d3 = quotient(1e-3);
  const auto d4 = quotient(1e-4);
  auto richardson = [&](const RadialSamples& coarse, const RadialSamples& fine) {
    RadialSamples out(grid);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      out.values[j] = (10.0 * fine.values[j] - coarse.values[j]) / 9.0;
    }
    return out;
  };
  const double e23 = relative_error(richardson(d2, d3), target);
  const double e34 = relative_error(richardson(d3, d4), target);
  CHECK(e34 < 1e-4);
  CHECK(e34 <= e23);
  CHECK(relative_error(d4, target) < relative_error(d2, target));
}

TEST_CASE("renormalized laguerre semigroup") {
  const FactoredField field(2, gaussian_in_s(LogRadialGrid::standard(3)));
  const Complex z(0.4, 0.3);
  const auto lag = apply_renormalized_laguerre(z, field);
  const auto heat = apply_exp_g0(G0Exponent::heat(z), field);
  for (std::size_t j = 0; j < heat.radial().values.size(); ++j) {
    CHECK(std::abs(lag.radial().values[j] - std::exp(-z) * heat.radial().values[j]) < 1e-14);
  }
}
