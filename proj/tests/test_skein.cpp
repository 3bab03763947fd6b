#include <gtest/gtest.h>

#include <stdexcept>

#include "torus/errors.hpp"
#include "torus/invariants.hpp"
#include "torus/skein.hpp"

namespace torus {
namespace {

BiPoly mono(int c, int a_num, int b_num, const VariablePair& vars) {
  return BiPoly::monomial(c, HalfExp{a_num}, HalfExp{b_num}, vars);
}

std::vector<BiPoly> unified_sequence(int s_max) {
  std::vector<BiPoly> out;
  for (const auto& p : alexander_unified_rec(s_max)) out.push_back(BiPoly::from_univariate(p));
  return out;
}

TEST(DeriveSkein, Classical) {
  const auto rec = classical_recurrence();
  const auto sk = derive_skein(rec.c1, rec.c2);
  const VariablePair vars{"t", "y"};
  EXPECT_EQ(sk.b2, BiPoly::constant(1, vars));
  EXPECT_TRUE(sk.b1.is_polynomial());
  EXPECT_EQ(sk.b1.prefactor(), mono(1, 1, 0, vars) - mono(1, -1, 0, vars));
}

TEST(DeriveSkein, GeneralizedAlexanderKeepsRadical) {
  const auto rec = rx_recurrence();
  const auto sk = derive_skein(rec.c1, rec.c2);
  const VariablePair vars{"r", "x"};
  EXPECT_EQ(sk.b2, mono(1, 2, 0, vars));
  EXPECT_FALSE(sk.b1.is_polynomial());
  EXPECT_EQ(sk.b1.prefactor(), mono(1, 1, 0, vars));
  ASSERT_EQ(sk.b1.radicands().size(), 1u);
  EXPECT_EQ(sk.b1.radicands()[0], mono(1, 0, 2, vars) - BiPoly::constant(2, vars));
}

TEST(DeriveSkein, Homfly) {
  const auto rec = homfly_recurrence();
  const auto sk = derive_skein(rec.c1, rec.c2);
  const VariablePair vars{"a", "z"};
  EXPECT_EQ(sk.b2, mono(1, 4, 0, vars));
  EXPECT_TRUE(sk.b1.is_polynomial());
  EXPECT_EQ(sk.b1.prefactor(), mono(1, 2, 2, vars));
}

TEST(DeriveSkein, RoundTripsThroughCompose) {
  for (const auto& rec : {classical_recurrence(), rx_recurrence(), homfly_recurrence()}) {
    const auto sk = derive_skein(rec.c1, rec.c2);
    const auto back = compose_skein(sk.b1, sk.b2);
    EXPECT_EQ(back.c1, rec.c1);
    EXPECT_EQ(back.c2, rec.c2);
    EXPECT_EQ(back.c1.variables(), rec.c1.variables());
    const auto again = derive_skein(back.c1, back.c2);
    EXPECT_EQ(again.b1, sk.b1);
    EXPECT_EQ(again.b2, sk.b2);
  }
}

TEST(ComposeSkein, Values) {
  const VariablePair t_vars{"t", "y"};
  const RadicalExpr classical(mono(1, 1, 0, t_vars) - mono(1, -1, 0, t_vars));
  const auto c = compose_skein(classical, BiPoly::constant(1, t_vars));
  EXPECT_EQ(c.c1, mono(1, 2, 0, t_vars) + mono(1, -2, 0, t_vars));
  EXPECT_EQ(c.c2, BiPoly::constant(-1, t_vars));

  const VariablePair az{"a", "z"};
  const auto h = compose_skein(RadicalExpr(mono(1, 2, 2, az)), mono(1, 4, 0, az));
  EXPECT_EQ(h.c1, mono(1, 4, 4, az) + mono(2, 4, 0, az));
  EXPECT_EQ(h.c2, mono(-1, 8, 0, az));

  const auto degenerate = compose_skein(RadicalExpr(BiPoly(t_vars)), BiPoly::constant(1, t_vars));
  EXPECT_EQ(degenerate.c1, BiPoly::constant(2, t_vars));
  EXPECT_EQ(degenerate.c2, BiPoly::constant(-1, t_vars));
}

TEST(DeriveSkein, DegenerateInputs) {
  const VariablePair vars{"t", "y"};
  const auto sk = derive_skein(BiPoly::constant(2, vars), BiPoly::constant(-1, vars));
  EXPECT_EQ(sk.b2, BiPoly::constant(1, vars));
  EXPECT_TRUE(sk.b1.prefactor().is_zero());

  const auto zero_c2 = derive_skein(mono(1, 4, 0, vars), BiPoly(vars));
  EXPECT_TRUE(zero_c2.b2.is_zero());
  EXPECT_EQ(zero_c2.b1.prefactor(), mono(1, 2, 0, vars));
}

TEST(DeriveSkein, RejectsNonPolynomialB2) {
  const VariablePair vars{"r", "x"};
  EXPECT_THROW(derive_skein(mono(1, 2, 2, vars), mono(-1, 0, 2, vars) - BiPoly::constant(1, vars)), NonPolynomialB2);
  // a bare monomial always has a half-exponent root
  EXPECT_EQ(derive_skein(mono(1, 2, 2, vars), mono(-1, 0, 2, vars)).b2, mono(1, 0, 1, vars));
  EXPECT_THROW(derive_skein(mono(1, 2, 2, vars), mono(-1, 0, 4, vars) - BiPoly::constant(1, vars)), NonPolynomialB2);
}

TEST(VerifySkein, UnifiedAlexander) {
  const auto seq = unified_sequence(10);
  const auto sk = derive_skein(classical_recurrence().c1, classical_recurrence().c2);
  const auto b1 = RadicalExpr(sk.b1.prefactor().renamed(seq[0].variables()));
  const auto report = verify_skein(seq, b1, sk.b2.renamed(seq[0].variables()));
  EXPECT_FALSE(report.numeric);
  EXPECT_EQ(report.triples.size(), 8u);
  EXPECT_TRUE(report.all_hold());
  EXPECT_EQ(report.first_failure(), std::nullopt);
}

TEST(VerifySkein, UnifiedAlexanderToS200) {
  const auto seq = unified_sequence(200);
  const auto sk = derive_skein(classical_recurrence().c1, classical_recurrence().c2);
  EXPECT_TRUE(verify_skein(seq, sk.b1, sk.b2).all_hold());
}

TEST(VerifySkein, HomflyKnots) {
  const auto seq = homfly_rec(100);
  const auto sk = derive_skein(homfly_recurrence().c1, homfly_recurrence().c2);
  const auto report = verify_skein(seq, sk.b1, sk.b2, {.stride = SkeinStride::knots_only});
  EXPECT_FALSE(report.numeric);
  EXPECT_EQ(report.triples.size(), 99u);
  EXPECT_TRUE(report.all_hold());
}

TEST(VerifySkein, WrongB2FailsOnFirstTriple) {
  const auto seq = unified_sequence(10);
  const auto sk = derive_skein(classical_recurrence().c1, classical_recurrence().c2);
  const auto report = verify_skein(seq, sk.b1, BiPoly::constant(2, sk.b2.variables()));
  EXPECT_FALSE(report.all_hold());
  EXPECT_EQ(report.first_failure(), 1u);
  EXPECT_FALSE(report.triples.front().holds);
}

TEST(VerifySkein, WrongHomflyB1Fails) {
  const auto seq = homfly_rec(5);
  const VariablePair az{"a", "z"};
  const auto report = verify_skein(seq, RadicalExpr(mono(2, 2, 2, az)), mono(1, 4, 0, az),
                                   {.stride = SkeinStride::knots_only});
  EXPECT_EQ(report.first_failure(), 1u);
}

TEST(VerifySkein, RadicalB1ChecksNumerically) {
  const auto seq = alexander_rx_rec(30);
  const auto sk = derive_skein(rx_recurrence().c1, rx_recurrence().c2);
  const auto exact = verify_skein(seq, sk.b1, sk.b2, {.stride = SkeinStride::knots_only});
  EXPECT_FALSE(exact.numeric);
  EXPECT_TRUE(exact.all_hold());

  const auto sampled = verify_skein(seq, sk.b1, sk.b2, {.stride = SkeinStride::knots_only, .force_numeric = true});
  EXPECT_TRUE(sampled.numeric);
  EXPECT_TRUE(sampled.all_hold());
  for (const auto& t : sampled.triples) EXPECT_LE(t.residual, kSkeinTolerance);

  const VariablePair rx{"r", "x"};
  const auto bad = verify_skein(seq, sk.b1, mono(1, 2, 2, rx), {.stride = SkeinStride::knots_only, .force_numeric = true});
  EXPECT_FALSE(bad.all_hold());
}

TEST(VerifySkein, ConsecutiveRadicalIsNumeric) {
  // b1 = sqrt(x - 2) with b2 = 1 generates its own sequence; check it in
  // numeric mode against a sequence built from the squared two-step form.
  const VariablePair rx{"r", "x"};
  const RadicalExpr b1(BiPoly::constant(1, rx), {mono(1, 0, 2, rx) - BiPoly::constant(2, rx)});
  const auto b2 = BiPoly::constant(1, rx);
  const std::vector<BiPoly> seq{BiPoly::constant(1, rx), BiPoly::constant(1, rx), BiPoly::constant(1, rx)};
  const auto report = verify_skein(seq, b1, b2);
  EXPECT_TRUE(report.numeric);
  EXPECT_FALSE(report.all_hold());
}

TEST(VerifySkein, NeedsThreeElements) {
  const auto seq = unified_sequence(2);
  const auto sk = derive_skein(classical_recurrence().c1, classical_recurrence().c2);
  EXPECT_THROW(verify_skein(seq, sk.b1, sk.b2), std::invalid_argument);
}

}  // namespace
}  // namespace torus
