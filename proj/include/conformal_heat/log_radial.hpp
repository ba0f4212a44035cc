#pragma once

// Log-radial coordinates.
//
// A radial function f on (0, inf) with measure r^{N-3} dr is carried to
// L^2(R, ds) by
//
//   g(s) = e^{(N-2)s/2} f(e^s),      f(r) = r^{-(N-2)/2} g(log r),
//
// and then to the frequency side by the unitary Fourier transform
// (2 pi)^{-1/2} int g(s) e^{-i sigma s} ds. On the frequency side the
// Euler operator r d/dr + (N-2)/2 acts as multiplication by i sigma.
//
// Everything is sampled on a periodic uniform grid s_j = s_min + j ds. The
// Fourier side stores values in signed order, index k <-> k' = k - n/2, at
// sigma_k = 2 pi k' / (n ds).

#include <complex>
#include <cstddef>
#include <vector>

namespace conformal_heat {

using Complex = std::complex<double>;

class LogRadialGrid {
public:
  // Throws DomainError unless dim >= 1, s_min < s_max, and n is a power of
  // two with n >= 8.
  LogRadialGrid(int dim, double s_min, double s_max, std::size_t n);

  // s in [-16, 16] with 2048 points.
  static LogRadialGrid standard(int dim);

  int dim() const { return dim_; }
  double s_min() const { return s_min_; }
  double s_max() const { return s_max_; }
  std::size_t size() const { return n_; }
  double ds() const { return (s_max_ - s_min_) / static_cast<double>(n_); }
  double dsigma() const;

  // (N - 2) / 2
  double weight_exponent() const { return 0.5 * (dim_ - 2); }

  double s(std::size_t j) const { return s_min_ + static_cast<double>(j) * ds(); }
  double r(std::size_t j) const;
  double sigma(std::size_t k) const;

  // Same geometry in another dimension.
  LogRadialGrid with_dim(int dim) const { return {dim, s_min_, s_max_, n_}; }

  friend bool operator==(const LogRadialGrid&, const LogRadialGrid&) = default;

private:
  int dim_;
  double s_min_;
  double s_max_;
  std::size_t n_;
};

// Samples f(r_j), r_j = exp(s_j).
struct RadialSamples {
  LogRadialGrid grid;
  std::vector<Complex> values;

  explicit RadialSamples(LogRadialGrid g);
  RadialSamples(LogRadialGrid g, std::vector<Complex> v);
};

// Samples g(s_j) of the log-radial transform.
struct LogSamples {
  LogRadialGrid grid;
  std::vector<Complex> values;

  explicit LogSamples(LogRadialGrid g);
  LogSamples(LogRadialGrid g, std::vector<Complex> v);
};

// Samples of the Fourier transform at sigma_k, signed order.
struct FrequencySamples {
  LogRadialGrid grid;
  std::vector<Complex> values;

  explicit FrequencySamples(LogRadialGrid g);
  FrequencySamples(LogRadialGrid g, std::vector<Complex> v);
};

LogSamples u_forward(const RadialSamples& f);
RadialSamples u_inverse(const LogSamples& g);

FrequencySamples fourier_forward(const LogSamples& g);
LogSamples fourier_inverse(const FrequencySamples& g_hat);

// Discrete norm of L^2(R_+, r^{N-3} dr): sqrt(sum |f(r_j)|^2 r_j^{N-2} ds).
double weighted_norm(const RadialSamples& f);

// sqrt(sum |g_j|^2 ds)
double l2_norm(const LogSamples& g);

// sqrt(sum |g_hat_k|^2 dsigma)
double l2_norm(const FrequencySamples& g_hat);

// Weighted inner product sum conj(f_j) h_j r_j^{N-2} ds.
Complex weighted_inner(const RadialSamples& f, const RadialSamples& h);

// Sample a function of r on the grid.
template <class F>
RadialSamples sample_radial(const LogRadialGrid& grid, F&& f) {
  RadialSamples out(grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    out.values[j] = f(grid.r(j));
  }
  return out;
}

// Sample a function of s on the grid.
template <class F>
LogSamples sample_log(const LogRadialGrid& grid, F&& g) {
  LogSamples out(grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    out.values[j] = g(grid.s(j));
  }
  return out;
}

} // namespace conformal_heat
