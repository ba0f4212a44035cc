#pragma once

#include <stdexcept>
#include <string>

namespace conformal_heat {

// Argument outside the domain of a special function or geometric object.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Series whose convergence condition fails (theta with Im tau <= 0).
class DivergenceError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A mathematically meaningful request made outside the regime where the
// requested route is valid, e.g. a kernel at Re z <= 0.
class InvalidRegimeError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// exp(z1 D + z2 + z3 |x|^2 Laplacian) requested for an unbounded exponent.
class UnboundedRegimeError : public InvalidRegimeError {
public:
  using InvalidRegimeError::InvalidRegimeError;
};

// Dilation parameter that does not map the log grid onto itself.
class MisalignedShiftError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input data (field files, point lists, flags).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace conformal_heat
