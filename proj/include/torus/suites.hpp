#pragma once

// Named identity suites, each checking one identity per index n = 1..max_n.
//
//   unified-skein       skein relation on the unified Alexander sequence
//   knot-recurrence     knot recurrence vs closed form vs q-number difference
//   qnum-oracle         recurrence vs closed form for [n]_q and [n]_{q,p}
//   chebyshev-identity  T_n = V_n - V_{n-2} and V_n(q + q^-1) = [n+1]_q
//   alexander-chebyshev V_n - V_{n-1} at x = t + t^-1 vs the Alexander sum
//   qp-specialization   two-variable objects at p = q^-1, and their recurrences
//   homfly-bridge       substituted generalized Alexander vs HOMFLY recurrence
//   trig                trigonometric evaluations within 1e-9

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace torus {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;

  bool ok() const { return passed == checked; }
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or max_n < 1.
SuiteResult run_suite(std::string_view name, std::size_t max_n);

/// Absolute tolerance of the trig suite (relative for the scaled q,p check).
inline constexpr double kTrigTolerance = 1e-9;

}  // namespace torus
