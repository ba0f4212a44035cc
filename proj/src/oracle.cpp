#include "conformal_heat/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "conformal_heat/errors.hpp"

namespace conformal_heat {

namespace {

constexpr Complex kI{0.0, 1.0};

bool same_exponent(Complex x, Complex y) {
  return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(x));
}

// X r^lambda = coefficient * r^{exponent}.
PowerSum::Term act_on_power(const LadderOperatorSpec& op, Complex lambda) {
  const double m = op.degree;
  const double n_shift = op.dim - 2.0;
  const Complex casimir = (lambda - m) * (lambda + m + n_shift);
  if (op.is_degenerate()) {
    switch (op.kind) {
      case LadderKind::H:
        return {lambda, 2.0 * lambda + n_shift};
      case LadderKind::EPlus:
        return {lambda, kI};
      case LadderKind::EMinus:
        return {lambda, kI * casimir};
    }
  }
  const Complex a = *op.a;
  switch (op.kind) {
    case LadderKind::H:
      return {lambda, (2.0 * lambda + a + n_shift) / a};
    case LadderKind::EPlus:
      return {lambda + a, kI / a};
    case LadderKind::EMinus:
      break;
  }
  return {lambda - a, kI / a * casimir};
}

} // namespace

PowerSum PowerSum::monomial(Complex exponent, Complex coefficient) {
  PowerSum p;
  p.add(exponent, coefficient);
  return p;
}

void PowerSum::add(Complex exponent, Complex coefficient) {
  for (auto& term : terms_) {
    if (same_exponent(term.exponent, exponent)) {
      term.coefficient += coefficient;
      return;
    }
  }
  terms_.push_back({exponent, coefficient});
}

PowerSum& PowerSum::operator+=(const PowerSum& other) {
  for (const auto& t : other.terms_) {
    add(t.exponent, t.coefficient);
  }
  return *this;
}

PowerSum& PowerSum::operator-=(const PowerSum& other) {
  for (const auto& t : other.terms_) {
    add(t.exponent, -t.coefficient);
  }
  return *this;
}

PowerSum& PowerSum::operator*=(Complex scale) {
  for (auto& t : terms_) {
    t.coefficient *= scale;
  }
  return *this;
}

Complex PowerSum::coefficient(Complex exponent) const {
  for (const auto& t : terms_) {
    if (same_exponent(t.exponent, exponent)) {
      return t.coefficient;
    }
  }
  return {0.0, 0.0};
}

double PowerSum::max_abs_coefficient() const {
  double out = 0.0;
  for (const auto& t : terms_) {
    out = std::max(out, std::abs(t.coefficient));
  }
  return out;
}

PowerSum operator+(PowerSum a, const PowerSum& b) { return a += b; }
PowerSum operator-(PowerSum a, const PowerSum& b) { return a -= b; }
PowerSum operator*(Complex s, PowerSum a) { return a *= s; }

const char* to_string(LadderKind kind) {
  switch (kind) {
    case LadderKind::H:
      return "H";
    case LadderKind::EPlus:
      return "E+";
    case LadderKind::EMinus:
      break;
  }
  return "E-";
}

LadderOperatorSpec LadderOperatorSpec::radial(LadderKind kind, Complex a, int degree, int dim) {
  if (a == 0.0) {
    throw DomainError("LadderOperatorSpec: a must be nonzero; use degenerate()");
  }
  return {kind, a, degree, dim};
}

LadderOperatorSpec LadderOperatorSpec::degenerate(LadderKind kind, int degree, int dim) {
  return {kind, std::nullopt, degree, dim};
}

OperatorCombination single(const LadderOperatorSpec& op, Complex coefficient) {
  return {{coefficient, op}};
}

PowerSum act(const LadderOperatorSpec& op, const PowerSum& f) {
  PowerSum out;
  for (const auto& t : f.terms()) {
    const auto image = act_on_power(op, t.exponent);
    out.add(image.exponent, image.coefficient * t.coefficient);
  }
  return out;
}

PowerSum act(const OperatorCombination& op, const PowerSum& f) {
  PowerSum out;
  for (const auto& [c, x] : op) {
    out += c * act(x, f);
  }
  return out;
}

PowerSum commutator(const OperatorCombination& x, const OperatorCombination& y,
                    const PowerSum& f) {
  return act(x, act(y, f)) - act(y, act(x, f));
}

double commutator_defect(const OperatorCombination& x, const OperatorCombination& y,
                         const OperatorCombination& expected, std::span<const Complex> basis) {
  if (basis.empty()) {
    throw DomainError("commutator_defect: empty basis");
  }
  double defect = 0.0;
  for (const Complex lambda : basis) {
    const auto f = PowerSum::monomial(lambda);
    const auto residual = commutator(x, y, f) - act(expected, f);
    defect = std::max(defect, residual.max_abs_coefficient());
  }
  return defect;
}

double commutator_defect(const LadderOperatorSpec& x, const LadderOperatorSpec& y,
                         const OperatorCombination& expected, std::span<const Complex> basis) {
  return commutator_defect(single(x), single(y), expected, basis);
}

std::vector<Complex> standard_basis() {
  std::vector<Complex> basis;
  for (int re = -2; re <= 3; ++re) {
    for (int im = -1; im <= 1; ++im) {
      basis.emplace_back(re, im);
    }
  }
  return basis;
}

std::vector<double> degeneration_trace(std::span<const double> a_sequence,
                                       std::pair<LadderKind, LadderKind> pair, int degree,
                                       int dim, std::span<const Complex> basis) {
  std::vector<double> defects;
  defects.reserve(a_sequence.size());
  for (const double a : a_sequence) {
    if (!(a > 0.0)) {
      throw DomainError("degeneration_trace: a must be positive");
    }
    const auto x = single(LadderOperatorSpec::radial(pair.first, a, degree, dim), a);
    const auto y = single(LadderOperatorSpec::radial(pair.second, a, degree, dim), a);
    defects.push_back(commutator_defect(x, y, {}, basis));
  }
  return defects;
}

double contraction_defect(LadderKind kind, int degree, int dim, double a,
                          std::span<const Complex> basis) {
  if (!(a > 0.0)) {
    throw DomainError("contraction_defect: a must be positive");
  }
  const auto limit = LadderOperatorSpec::degenerate(kind, degree, dim);
  const auto at_a = LadderOperatorSpec::radial(kind, a, degree, dim);
  const auto at_2a = LadderOperatorSpec::radial(kind, 2.0 * a, degree, dim);
  double defect = 0.0;
  for (const Complex lambda : basis) {
    const auto exact = act_on_power(limit, lambda);
    const auto x1 = act_on_power(at_a, lambda);
    const auto x2 = act_on_power(at_2a, lambda);
    // Rescaled generators a X_a and 2a X_{2a}.
    const Complex c1 = a * x1.coefficient;
    const Complex c2 = 2.0 * a * x2.coefficient;
    const Complex coefficient = 2.0 * c1 - c2;
    const Complex exponent = 2.0 * x1.exponent - x2.exponent;
    defect = std::max({defect, std::abs(coefficient - exact.coefficient),
                       std::abs(exponent - exact.exponent)});
  }
  return defect;
}

} // namespace conformal_heat
