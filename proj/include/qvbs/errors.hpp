#pragma once

#include <stdexcept>
#include <string>

namespace qvbs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic could not be carried out: inexact division, a pole,
/// or a sum of surds with different radicands.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A dense object would exceed the configured memory budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// The two leading transfer-matrix eigenvalues have equal modulus.
class NoSpectralGapError : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same quantity disagree.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qvbs
