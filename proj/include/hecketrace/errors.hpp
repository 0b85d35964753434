#ifndef HECKETRACE_ERRORS_HPP
#define HECKETRACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hecketrace {

/// Input outside the domain of an operation (parity, range, mismatched fields).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Violation of the parity condition k_v = w (mod 2).
class AlgebraicityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Parabolic element (t^2 = 4n at some real place); orbital integrals are undefined there.
class DegenerateInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Series truncated too early for the requested coefficient extraction.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Request outside what the verification layer handles (e.g. eigenvalue fields of degree > 2).
class UnsupportedScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hecketrace

#endif  // HECKETRACE_ERRORS_HPP
