#pragma once

// Exact action of the radial generators on power functions r^lambda.
//
// For a != 0 and degree m (theta = r d/dr):
//
//   H_a[m]  = (2/a) theta + (a + N - 2)/a
//   E+_a[m] = (i/a) r^a
//   E-_a[m] = (i/a) r^{-a} (theta - m)(theta + m + N - 2)
//
// and the degenerate (commutative) generators at a = 0:
//
//   2 theta + N - 2,   i,   i (theta - m)(theta + m + N - 2).
//
// Each maps r^lambda to a multiple of a single power, so commutators can be
// checked coefficient by coefficient.

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace conformal_heat {

using Complex = std::complex<double>;

// Finite sum of c_lambda r^lambda.
class PowerSum {
public:
  struct Term {
    Complex exponent;
    Complex coefficient;
  };

  PowerSum() = default;
  static PowerSum monomial(Complex exponent, Complex coefficient = 1.0);

  // Terms whose exponents agree to 1e-12 (relative) are merged.
  void add(Complex exponent, Complex coefficient);

  PowerSum& operator+=(const PowerSum& other);
  PowerSum& operator-=(const PowerSum& other);
  PowerSum& operator*=(Complex scale);

  // Coefficient of r^exponent (zero if absent).
  Complex coefficient(Complex exponent) const;

  double max_abs_coefficient() const;

  const std::vector<Term>& terms() const { return terms_; }

private:
  std::vector<Term> terms_;
};

PowerSum operator+(PowerSum a, const PowerSum& b);
PowerSum operator-(PowerSum a, const PowerSum& b);
PowerSum operator*(Complex s, PowerSum a);

enum class LadderKind { H, EPlus, EMinus };

const char* to_string(LadderKind kind);

struct LadderOperatorSpec {
  LadderKind kind;
  std::optional<Complex> a;  // empty: degenerate generator
  int degree = 0;
  int dim = 1;

  // Throws DomainError for a == 0.
  static LadderOperatorSpec radial(LadderKind kind, Complex a, int degree, int dim);
  static LadderOperatorSpec degenerate(LadderKind kind, int degree, int dim);

  bool is_degenerate() const { return !a.has_value(); }
};

// Real linear combination sum c_i X_i of generators (complex c allowed).
using OperatorCombination = std::vector<std::pair<Complex, LadderOperatorSpec>>;

OperatorCombination single(const LadderOperatorSpec& op, Complex coefficient = 1.0);

PowerSum act(const LadderOperatorSpec& op, const PowerSum& f);
PowerSum act(const OperatorCombination& op, const PowerSum& f);

// [X, Y] f = X(Y f) - Y(X f)
PowerSum commutator(const OperatorCombination& x, const OperatorCombination& y,
                    const PowerSum& f);

// max over lambda in basis of max |coefficient| of ([X, Y] - expected) r^lambda.
double commutator_defect(const OperatorCombination& x, const OperatorCombination& y,
                         const OperatorCombination& expected, std::span<const Complex> basis);
double commutator_defect(const LadderOperatorSpec& x, const LadderOperatorSpec& y,
                         const OperatorCombination& expected, std::span<const Complex> basis);

// {-2, -1, 0, 1, 2, 3} + i {-1, 0, 1}
std::vector<Complex> standard_basis();

// Defect of [a X_a, a Y_a] against zero for each a (positive reals).
std::vector<double> degeneration_trace(std::span<const double> a_sequence,
                                       std::pair<LadderKind, LadderKind> pair, int degree,
                                       int dim, std::span<const Complex> basis);

// Distance between the degenerate generator and the a -> 0 limit of the
// rescaled generator a X_a, the limit estimated from a and 2a by linear
// extrapolation of both the coefficient and the exponent. O(a^2).
double contraction_defect(LadderKind kind, int degree, int dim, double a,
                          std::span<const Complex> basis);

} // namespace conformal_heat
