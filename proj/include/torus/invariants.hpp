#pragma once

// Alexander, generalized two-variable Alexander and HOMFLY polynomials of the
// torus knots T(s,2) and links L(s,2).

#include <cstddef>
#include <vector>

#include "torus/bipoly.hpp"
#include "torus/laurent.hpp"

namespace torus {

inline VariablePair az_vars() { return {"a", "z"}; }

/// Crossing number s >= 1 of T(s,2) (s odd) or L(s,2) (s even).
class TorusIndex {
 public:
  /// Throws std::invalid_argument for s < 1.
  explicit TorusIndex(int s);
  /// T(2m+1, 2).
  static TorusIndex knot(int m) { return TorusIndex(2 * m + 1); }

  int s() const { return s_; }
  /// Alexander degree m = (s-1)/2.
  HalfExp degree() const { return HalfExp{s_ - 1}; }
  bool is_knot() const { return s_ % 2 == 1; }

 private:
  int s_;
};

/// sum_{i=0}^{2m} (-1)^i t^(m-i).
LaurentPoly alexander_closed(TorusIndex idx);

/// Entries for s = 1..s_max (element k holds s = k+1), generated by
/// A_{s+1} = (t^(1/2) - t^(-1/2)) A_s + A_{s-1}.
std::vector<LaurentPoly> alexander_unified_rec(int s_max);

/// Knot entries m = 0..m_max from A_{m+1} = (t + t^-1) A_m - A_{m-1}.
std::vector<LaurentPoly> alexander_knot_rec(int m_max);

/// [m+1]_q - [m]_q, in the variable t.
LaurentPoly alexander_from_qnum(std::size_t m);

/// [n+1]_{q,p} - qp [n]_{q,p}.
BiPoly alexander_qp(std::size_t n);

/// Entries n = 0..n_max from A_{n+1} = (q+p) A_n - qp A_{n-1},
/// A_0 = 1, A_1 = q - qp + p.
std::vector<BiPoly> alexander_qp_rec(std::size_t n_max);

/// r^n (V_n(x) - r V_{n-1}(x)), assembled from the two-variable Chebyshev
/// polynomials.
BiPoly alexander_rx(std::size_t n);

/// Entries n = 0..n_max from A_{n+1} = rx A_n - r^2 A_{n-1},
/// A_0 = 1, A_1 = rx - r^2.
std::vector<BiPoly> alexander_rx_rec(std::size_t n_max);

/// Knot entries m = 0..m_max from H_{m+1} = a^2(z^2+2) H_m - a^4 H_{m-1},
/// H_0 = 1, H_1 = 2a^2 + a^2z^2 - a^4.
std::vector<BiPoly> homfly_rec(std::size_t m_max);

/// alexander_rx(n) under r -> a^2, x -> z^2 + 2.
BiPoly homfly_from_alexander(std::size_t n);

}  // namespace torus
