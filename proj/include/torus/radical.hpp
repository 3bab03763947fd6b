#pragma once

#include <complex>
#include <vector>

#include "torus/bipoly.hpp"

namespace torus {

/// prefactor * sqrt(radicand_1) * ... * sqrt(radicand_k), kept in simplified
/// form: no radicand is a perfect square, and repeated radicands are folded
/// into the prefactor.
class RadicalExpr {
 public:
  explicit RadicalExpr(BiPoly prefactor, std::vector<BiPoly> radicands = {});

  const BiPoly& prefactor() const { return prefactor_; }
  const std::vector<BiPoly>& radicands() const { return radicands_; }
  const VariablePair& variables() const { return prefactor_.variables(); }

  /// No radicands left: the expression is an ordinary polynomial.
  bool is_polynomial() const { return radicands_.empty(); }

  /// prefactor^2 * product of radicands.
  BiPoly squared() const;

  /// Principal square roots of the evaluated radicands.
  std::complex<double> eval(std::complex<double> za, std::complex<double> zb) const;

  friend bool operator==(const RadicalExpr& a, const RadicalExpr& b) {
    return a.prefactor_ == b.prefactor_ && a.radicands_ == b.radicands_;
  }

 private:
  BiPoly prefactor_;
  std::vector<BiPoly> radicands_;
};

/// Pulls the largest square monomial, the square part of the integer
/// content, and (when the rest is a perfect square) the whole polynomial out
/// from under the root. Whatever is left stays as a single radicand.
RadicalExpr bi_sqrt_perfect(const BiPoly& f);

}  // namespace torus
