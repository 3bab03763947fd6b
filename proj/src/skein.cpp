#include "torus/skein.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "torus/errors.hpp"

namespace torus {
namespace {

// a > 0 and b > 2.
constexpr std::array<std::array<double, 2>, 3> kSamplePoints{{{1.3, 2.5}, {2.1, 3.7}, {0.7, 5.2}}};

}  // namespace

SkeinCoeffs derive_skein(const BiPoly& c1, const BiPoly& c2) {
  const auto& vars = c1.variables();
  BiPoly b2(vars);
  if (!c2.is_zero()) {
    RadicalExpr root = bi_sqrt_perfect(-c2);
    if (!root.is_polynomial()) {
      throw NonPolynomialB2("-c2 is not the square of a polynomial, so b2 cannot be polynomial");
    }
    b2 = root.prefactor().renamed(vars);
  }
  const BiPoly under = c1 - scale(b2, 2);
  RadicalExpr b1 = under.is_zero() ? RadicalExpr(BiPoly(vars)) : bi_sqrt_perfect(under);
  return {std::move(b1), std::move(b2)};
}

RecurrenceCoeffs compose_skein(const RadicalExpr& b1, const BiPoly& b2) {
  BiPoly c1 = b1.squared().renamed(b2.variables()) + scale(b2, 2);
  BiPoly c2 = -(b2 * b2);
  return {std::move(c1), std::move(c2)};
}

bool SkeinReport::all_hold() const {
  return std::all_of(triples.begin(), triples.end(), [](const TripleCheck& t) { return t.holds; });
}

std::optional<std::size_t> SkeinReport::first_failure() const {
  for (const auto& t : triples) {
    if (!t.holds) return t.index;
  }
  return std::nullopt;
}

SkeinReport verify_skein(std::span<const BiPoly> sequence, const RadicalExpr& b1, const BiPoly& b2,
                         SkeinOptions options) {
  if (sequence.size() < 3) throw std::invalid_argument("verify_skein needs at least three polynomials");
  const bool knots_only = options.stride == SkeinStride::knots_only;

  SkeinReport report;
  report.numeric = options.force_numeric || (!knots_only && !b1.is_polynomial());

  if (!report.numeric) {
    BiPoly c1 = b1.prefactor();
    BiPoly c2 = b2;
    if (knots_only) {
      auto composed = compose_skein(b1, b2);
      c1 = std::move(composed.c1);
      c2 = std::move(composed.c2);
    }
    for (std::size_t n = 1; n + 1 < sequence.size(); ++n) {
      const BiPoly residual = sequence[n + 1] - c1 * sequence[n] - c2 * sequence[n - 1];
      report.triples.push_back({n, residual.is_zero(), 0.0});
    }
    return report;
  }

  struct Sample {
    std::complex<double> c1, c2;
    std::array<double, 2> point;
  };
  std::vector<Sample> samples;
  for (const auto& pt : kSamplePoints) {
    const std::complex<double> vb1 = b1.eval(pt[0], pt[1]);
    const std::complex<double> vb2 = eval_complex(b2, pt[0], pt[1]);
    if (knots_only) {
      samples.push_back({vb1 * vb1 + 2.0 * vb2, -vb2 * vb2, pt});
    } else {
      samples.push_back({vb1, vb2, pt});
    }
  }

  for (std::size_t n = 1; n + 1 < sequence.size(); ++n) {
    double worst = 0.0;
    for (const auto& s : samples) {
      const auto next = eval_complex(sequence[n + 1], s.point[0], s.point[1]);
      const auto mid = s.c1 * eval_complex(sequence[n], s.point[0], s.point[1]);
      const auto prev = s.c2 * eval_complex(sequence[n - 1], s.point[0], s.point[1]);
      const double scale_ref = std::max(1.0, std::abs(next) + std::abs(mid) + std::abs(prev));
      worst = std::max(worst, std::abs(next - mid - prev) / scale_ref);
    }
    report.triples.push_back({n, worst <= kSkeinTolerance, worst});
  }
  return report;
}


RecurrenceCoeffs classical_recurrence() {
  const VariablePair vars{"t", "y"};
  return {BiPoly::from_terms({{HalfExp::whole(1), HalfExp{0}, 1}, {HalfExp::whole(-1), HalfExp{0}, 1}}, vars),
          BiPoly::constant(-1, vars)};
}

RecurrenceCoeffs rx_recurrence() {
  const VariablePair vars{"r", "x"};
  return {BiPoly::monomial(1, HalfExp::whole(1), HalfExp::whole(1), vars),
          BiPoly::monomial(-1, HalfExp::whole(2), HalfExp{0}, vars)};
}

RecurrenceCoeffs homfly_recurrence() {
  const VariablePair vars{"a", "z"};
  return {BiPoly::from_terms({{HalfExp::whole(2), HalfExp::whole(2), 1}, {HalfExp::whole(2), HalfExp{0}, 2}}, vars),
          BiPoly::monomial(-1, HalfExp::whole(4), HalfExp{0}, vars)};
}

}  // namespace torus
