#pragma once

// Monic Chebyshev polynomials in x with T_n(2cos t) = 2cos(nt) and
// V_n(2cos t) = sin((n+1)t)/sin t, plus their two-variable versions.

#include <cstddef>
#include <vector>

#include "torus/bipoly.hpp"
#include "torus/laurent.hpp"

namespace torus {

inline VariablePair rx_vars() { return {"r", "x"}; }

/// T_{n+1} = x T_n - T_{n-1}, T_0 = 2, T_1 = x.
LaurentPoly cheb_first(std::size_t n);

/// V_{n+1} = x V_n - V_{n-1}, V_0 = 1, V_1 = x.
LaurentPoly cheb_second(std::size_t n);
/// Entries n = 0..n_max.
std::vector<LaurentPoly> cheb_first_table(std::size_t n_max);
std::vector<LaurentPoly> cheb_second_table(std::size_t n_max);

/// V_n(q,p) = [n+1]_{q,p}.
BiPoly cheb_second_qp(std::size_t n);

/// V_n(r,x) = r^n V_n(x).
BiPoly cheb_second_rx(std::size_t n);

}  // namespace torus
