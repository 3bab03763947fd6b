#pragma once

#include <stdexcept>
#include <string>

namespace torus {

/// Base class of every error raised by the algebra layer.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The outer polynomial of a composition/substitution has a negative or
/// half-integer exponent.
class NonIntegralOuter : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NotAPerfectSquare : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Evaluation at zero of a polynomial with negative exponents.
class ZeroBase : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// -c2 has no polynomial square root, so no polynomial b2 exists.
class NonPolynomialB2 : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Malformed serialized polynomial.
class ParseError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace torus
