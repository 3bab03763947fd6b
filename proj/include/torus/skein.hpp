#pragma once

// Conversion between skein coefficients (b1, b2) of
//   P_+ = b1 P_0 + b2 P_-
// on the unified knot/link sequence and recurrence coefficients (c1, c2) of
//   P_{m+1} = c1 P_m + c2 P_{m-1}
// on the knot-only subsequence: c1 = b1^2 + 2 b2, c2 = -b2^2.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "torus/bipoly.hpp"
#include "torus/radical.hpp"

namespace torus {

struct SkeinCoeffs {
  RadicalExpr b1;
  BiPoly b2;
};

struct RecurrenceCoeffs {
  BiPoly c1;
  BiPoly c2;
};

/// b2 = sqrt(-c2), b1 = sqrt(c1 - 2 b2), both with positive leading
/// coefficient. b1 may keep a radical; b2 must not (NonPolynomialB2).
SkeinCoeffs derive_skein(const BiPoly& c1, const BiPoly& c2);

/// c1 = b1^2 + 2 b2, c2 = -b2^2.
RecurrenceCoeffs compose_skein(const RadicalExpr& b1, const BiPoly& b2);

enum class SkeinStride {
  /// Every element of the sequence is a consecutive crossing number s, s+1, ...
  consecutive,
  /// The sequence holds knots only (s, s+2, ...); the two-step relation
  /// implied by (b1, b2) is checked.
  knots_only,
};

struct SkeinOptions {
  SkeinStride stride = SkeinStride::consecutive;
  /// Check at sample points even when the relation could be checked exactly.
  bool force_numeric = false;
};

struct TripleCheck {
  std::size_t index;  // position of the middle element
  bool holds;
  double residual;  // 0 in exact mode; worst relative residual otherwise
};

struct SkeinReport {
  bool numeric = false;
  std::vector<TripleCheck> triples;

  bool all_hold() const;
  std::optional<std::size_t> first_failure() const;
};

/// Relative tolerance of numeric checks.
inline constexpr double kSkeinTolerance = 1e-9;

/// Checks every consecutive triple of `sequence`. Exact when b1 is free of
/// radicals (or the stride squares them away); otherwise sampled at points
/// with a > 0, b > 2 so every radicand of the form (b - 2) stays positive.
/// Throws std::invalid_argument for fewer than three elements.
SkeinReport verify_skein(std::span<const BiPoly> sequence, const RadicalExpr& b1, const BiPoly& b2,
                         SkeinOptions options = {});


/// c1 = t + t^-1, c2 = -1 (classical Alexander knots; second slot unused).
RecurrenceCoeffs classical_recurrence();
/// c1 = rx, c2 = -r^2.
RecurrenceCoeffs rx_recurrence();
/// c1 = a^2(z^2 + 2), c2 = -a^4.
RecurrenceCoeffs homfly_recurrence();

}  // namespace torus
