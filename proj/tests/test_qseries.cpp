#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "support.hpp"
#include "torus/qseries.hpp"

namespace torus {
namespace {

namespace oracle = testing::oracle;

LaurentPoly q_terms(std::initializer_list<int> whole_exps) {
  std::vector<LaurentTerm> terms;
  for (int e : whole_exps) terms.emplace_back(HalfExp::whole(e), 1);
  return LaurentPoly::from_terms(terms, "q");
}

BiPoly qp_terms(std::initializer_list<std::pair<int, int>> exps) {
  std::vector<BiTerm> terms;
  for (const auto& [a, b] : exps) terms.push_back({HalfExp::whole(a), HalfExp::whole(b), 1});
  return BiPoly::from_terms(terms, qp_vars());
}

// Brute-force [n]_q: (q^n - q^-n)/(q - q^-1) by repeated synthetic division,
// done on a dense table in whole-exponent units.
oracle::Dense qnum_by_division(int n) {
  oracle::Dense num{{n, 1}, {-n, -1}};
  oracle::Dense quotient;
  while (!num.empty()) {
    const auto [top, c] = *num.rbegin();
    quotient[top - 1] += c;
    num[top] -= c;
    num[top - 2] += c;
    std::erase_if(num, [](const auto& kv) { return kv.second == 0; });
  }
  oracle::Dense halves;
  for (const auto& [e, c] : quotient) halves[2 * e] = c;
  return halves;
}

TEST(QNumbers, PaperValues) {
  EXPECT_EQ(qnum_closed(1), LaurentPoly::constant(1, "q"));
  EXPECT_EQ(qnum_closed(4), q_terms({3, 1, -1, -3}));
  EXPECT_TRUE(qnum_closed(0).is_zero());
  EXPECT_EQ(qnum_rec(2), q_terms({1, -1}));
  EXPECT_EQ(qnum_rec(3), q_terms({2, 0, -2}));
  EXPECT_EQ(qnum_closed(4).variable(), "q");
}

TEST(QNumbers, DivisionOracle) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(qnum_closed(n), oracle::to_poly(qnum_by_division(n), "q")) << n;
  }
  EXPECT_EQ(qnum_rec(7), qnum_closed(7));
}

TEST(QNumbers, RecurrenceMatchesClosedForm) {
  const auto table = qnum_rec_table(500);
  ASSERT_EQ(table.size(), 501u);
  for (std::size_t n = 0; n <= 500; ++n) ASSERT_EQ(table[n], qnum_closed(n)) << n;
  EXPECT_EQ(qnum_rec(37), qnum_closed(37));
}

TEST(QNumbers, ClassicalLimit) {
  for (std::size_t n = 0; n <= 100; ++n) {
    EXPECT_EQ(eval_complex(qnum_closed(n), 1.0), std::complex<double>(static_cast<double>(n), 0.0));
  }
}

TEST(QNumbers, UnitCircle) {
  for (double theta : {0.3, 0.7, 1.1, 2.0}) {
    const auto q = std::polar(1.0, theta);
    for (std::size_t n = 1; n <= 50; ++n) {
      const double expected = std::sin(n * theta) / std::sin(theta);
      EXPECT_LE(std::abs(eval_complex(qnum_closed(n), q) - expected), 1e-9) << n << " " << theta;
    }
  }
}

TEST(QPNumbers, PaperValues) {
  EXPECT_EQ(qpnum_closed(3), qp_terms({{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(qpnum_closed(1), BiPoly::constant(1, qp_vars()));
  EXPECT_EQ(qpnum_closed(4), qp_terms({{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
  EXPECT_EQ(qpnum_rec(2), qp_terms({{1, 0}, {0, 1}}));
  EXPECT_EQ(qpnum_rec(5), qpnum_closed(5));
  EXPECT_TRUE(qpnum_rec(0).is_zero());
  EXPECT_EQ(qpnum_closed(2).variables(), qp_vars());
}

TEST(QPNumbers, Homogeneous) {
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto f = qpnum_closed(n);
    EXPECT_EQ(f.size(), n);
    for (const auto& [key, c] : f.terms()) {
      EXPECT_EQ(key.first + key.second, 2 * static_cast<int>(n - 1));
      EXPECT_EQ(c, 1);
    }
  }
}

TEST(QPNumbers, RecurrenceMatchesClosedForm) {
  const auto table = qpnum_rec_table(500);
  ASSERT_EQ(table.size(), 501u);
  for (std::size_t n = 0; n <= 500; ++n) ASSERT_EQ(table[n], qpnum_closed(n)) << n;
  EXPECT_EQ(qpnum_rec(37), qpnum_closed(37));
}

TEST(QPNumbers, SpecializesToQNumbers) {
  const auto t = LaurentPoly::indeterminate("t");
  const auto t_inv = LaurentPoly::monomial(1, HalfExp::whole(-1), "t");
  for (std::size_t n = 0; n <= 200; ++n) {
    ASSERT_EQ(bi_to_univariate(qpnum_closed(n), t, t_inv), qnum_closed(n).renamed("t")) << n;
  }
}

TEST(QPNumbers, ScaledUnitCircle) {
  for (double r : {0.5, 1.0, 2.0}) {
    for (double theta : {0.3, 0.7, 1.1, 2.0}) {
      const auto q = std::polar(r, theta);
      const auto p = std::polar(r, -theta);
      for (std::size_t n = 1; n <= 50; ++n) {
        const double expected = std::pow(r, n - 1.0) * std::sin(n * theta) / std::sin(theta);
        const auto got = eval_complex(qpnum_closed(n), q, p);
        const double scale = std::max(1.0, std::pow(r, n - 1.0) * n);
        EXPECT_LE(std::abs(got - expected), 1e-9 * scale) << n << " " << r << " " << theta;
      }
    }
  }
}

}  // namespace
}  // namespace torus
