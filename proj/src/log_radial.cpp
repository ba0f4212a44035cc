#include "conformal_heat/log_radial.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "conformal_heat/errors.hpp"
#include "fft.hpp"

namespace conformal_heat {

namespace {

constexpr double kPi = std::numbers::pi;

void check_length(const LogRadialGrid& grid, std::size_t size, const char* who) {
  if (size != grid.size()) {
    throw DomainError(std::string(who) + ": " + std::to_string(size) +
                      " samples for a grid of " + std::to_string(grid.size()));
  }
}

} // namespace

LogRadialGrid::LogRadialGrid(int dim, double s_min, double s_max, std::size_t n)
    : dim_(dim), s_min_(s_min), s_max_(s_max), n_(n) {
  if (dim < 1) {
    throw DomainError("LogRadialGrid: dimension must be >= 1");
  }
  if (!(s_min < s_max) || !std::isfinite(s_min) || !std::isfinite(s_max)) {
    throw DomainError("LogRadialGrid: need finite s_min < s_max");
  }
  if (n < 8 || !std::has_single_bit(n)) {
    throw DomainError("LogRadialGrid: point count must be a power of two >= 8");
  }
}

LogRadialGrid LogRadialGrid::standard(int dim) { return {dim, -16.0, 16.0, 2048}; }

double LogRadialGrid::dsigma() const {
  return 2.0 * kPi / (static_cast<double>(n_) * ds());
}

double LogRadialGrid::r(std::size_t j) const { return std::exp(s(j)); }

double LogRadialGrid::sigma(std::size_t k) const {
  const auto signed_index =
      static_cast<double>(static_cast<long long>(k) - static_cast<long long>(n_ / 2));
  return signed_index * dsigma();
}

RadialSamples::RadialSamples(LogRadialGrid g)
    : grid(g), values(g.size(), Complex{0.0, 0.0}) {}

RadialSamples::RadialSamples(LogRadialGrid g, std::vector<Complex> v)
    : grid(g), values(std::move(v)) {
  check_length(grid, values.size(), "RadialSamples");
}

LogSamples::LogSamples(LogRadialGrid g) : grid(g), values(g.size(), Complex{0.0, 0.0}) {}

LogSamples::LogSamples(LogRadialGrid g, std::vector<Complex> v)
    : grid(g), values(std::move(v)) {
  check_length(grid, values.size(), "LogSamples");
}

FrequencySamples::FrequencySamples(LogRadialGrid g)
    : grid(g), values(g.size(), Complex{0.0, 0.0}) {}

FrequencySamples::FrequencySamples(LogRadialGrid g, std::vector<Complex> v)
    : grid(g), values(std::move(v)) {
  check_length(grid, values.size(), "FrequencySamples");
}

LogSamples u_forward(const RadialSamples& f) {
  const auto& grid = f.grid;
  const double nu = grid.weight_exponent();
  LogSamples g(grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    g.values[j] = nu == 0.0 ? f.values[j] : std::exp(nu * grid.s(j)) * f.values[j];
  }
  return g;
}

RadialSamples u_inverse(const LogSamples& g) {
  const auto& grid = g.grid;
  const double nu = grid.weight_exponent();
  RadialSamples f(grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    f.values[j] = nu == 0.0 ? g.values[j] : std::exp(-nu * grid.s(j)) * g.values[j];
  }
  return f;
}

// g_hat(sigma_k) = ds / sqrt(2 pi) * sum_j g_j exp(-i sigma_k s_j). With
// s_j = s_min + j ds this is a phase times the DFT at index k' mod n.
FrequencySamples fourier_forward(const LogSamples& g) {
  const auto& grid = g.grid;
  const std::size_t n = grid.size();
  std::vector<Complex> buffer = g.values;
  detail::dft_in_place(buffer, -1);

  FrequencySamples out(grid);
  const double scale = grid.ds() / std::sqrt(2.0 * kPi);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t source = (k + n / 2) % n;
    const double sigma = grid.sigma(k);
    out.values[k] = scale * std::polar(1.0, -sigma * grid.s_min()) * buffer[source];
  }
  return out;
}

LogSamples fourier_inverse(const FrequencySamples& g_hat) {
  const auto& grid = g_hat.grid;
  const std::size_t n = grid.size();
  std::vector<Complex> buffer(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t target = (k + n / 2) % n;
    buffer[target] = std::polar(1.0, grid.sigma(k) * grid.s_min()) * g_hat.values[k];
  }
  detail::dft_in_place(buffer, +1);

  const double scale = grid.dsigma() / std::sqrt(2.0 * kPi);
  LogSamples out(grid);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = scale * buffer[j];
  }
  return out;
}

double weighted_norm(const RadialSamples& f) {
  const auto& grid = f.grid;
  const double power = grid.dim() - 2.0;
  double sum = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double weight = power == 0.0 ? 1.0 : std::exp(power * grid.s(j));
    sum += std::norm(f.values[j]) * weight;
  }
  return std::sqrt(sum * grid.ds());
}

double l2_norm(const LogSamples& g) {
  double sum = 0.0;
  for (const auto& v : g.values) {
    sum += std::norm(v);
  }
  return std::sqrt(sum * g.grid.ds());
}

double l2_norm(const FrequencySamples& g_hat) {
  double sum = 0.0;
  for (const auto& v : g_hat.values) {
    sum += std::norm(v);
  }
  return std::sqrt(sum * g_hat.grid.dsigma());
}

Complex weighted_inner(const RadialSamples& f, const RadialSamples& h) {
  if (!(f.grid == h.grid)) {
    throw DomainError("weighted_inner: grids differ");
  }
  const auto& grid = f.grid;
  const double power = grid.dim() - 2.0;
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double weight = power == 0.0 ? 1.0 : std::exp(power * grid.s(j));
    sum += std::conj(f.values[j]) * h.values[j] * weight;
  }
  return sum * grid.ds();
}

} // namespace conformal_heat
