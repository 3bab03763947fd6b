#pragma once

// q-numbers [n]_q and q,p-numbers [n]_{q,p}. Each family has a closed-form
// constructor and a recurrence constructor; the two are checked against each
// other by the test suites. [0] is the empty sum.

#include <cstddef>
#include <vector>

#include "torus/bipoly.hpp"
#include "torus/laurent.hpp"

namespace torus {

/// Variables (q, p) used by every q,p-number object.
inline VariablePair qp_vars() { return {"q", "p"}; }

/// q^(n-1) + q^(n-3) + ... + q^(1-n).
LaurentPoly qnum_closed(std::size_t n);

/// [n+1] = (q + q^-1)[n] - [n-1], [0] = 0, [1] = 1.
LaurentPoly qnum_rec(std::size_t n);
/// qnum_rec(0..n_max) in one pass.
std::vector<LaurentPoly> qnum_rec_table(std::size_t n_max);

/// sum_{i<n} q^(n-1-i) p^i.
BiPoly qpnum_closed(std::size_t n);

/// [n+1] = (q + p)[n] - qp[n-1], [0] = 0, [1] = 1.
BiPoly qpnum_rec(std::size_t n);
std::vector<BiPoly> qpnum_rec_table(std::size_t n_max);

}  // namespace torus
