#pragma once

// Shared evaluator for half-lattice monomial sums. Works in MPFR at a
// precision derived from the coefficient sizes and exponent spread, so the
// double result is accurate even when the monomial basis cancels badly
// (e.g. Chebyshev polynomials at 2cos(theta)).

#include <array>
#include <complex>
#include <span>

#include "torus/laurent.hpp"

namespace torus::detail {

struct MonomialRef {
  const Integer* coeff;
  std::array<int, 2> nums;  // exponent numerators, one per base
};

/// Sum of coeff * prod(base_i ^ (num_i / 2)). `bases` has one or two entries.
std::complex<double> precise_eval(std::span<const MonomialRef> terms,
                                  std::span<const std::complex<double>> bases);

}  // namespace torus::detail
