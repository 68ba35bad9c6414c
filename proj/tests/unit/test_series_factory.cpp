#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/series_factory.hpp"

using namespace ratgamma;

namespace {

Rational coeff(CompositeTag tag, long n, long m = 0) { return expand({tag, m}, n).coeffs[static_cast<std::size_t>(n)]; }

}  // namespace

TEST(SeriesFactory, KnownCoefficients) {
  EXPECT_EQ(coeff(CompositeTag::SINH_LN, 2), Rational(-1, 2));
  EXPECT_EQ(coeff(CompositeTag::SINH_LN, 1), Rational(1));
  EXPECT_EQ(coeff(CompositeTag::COSH_LN, 1), Rational(0));
  EXPECT_EQ(coeff(CompositeTag::COSH_LN, 2), Rational(1, 2));
  EXPECT_EQ(coeff(CompositeTag::TANH_LN, 5), Rational(-1, 4));
}

TEST(SeriesFactory, ClosedPatterns) {
  // sinh(ln(1+z)) = z - (1/2) sum_{n>=2} (-1)^n z^n
  const auto s = expand({CompositeTag::SINH_LN, 0}, 30);
  for (long n = 2; n <= 30; ++n) EXPECT_EQ(s.coeffs[n], Rational(n % 2 ? 1 : -1, 2)) << n;
  // tanh(ln(1+z)) = sum (-1)^n z^{4n+1} / 2^{2n} plus the even-power part; check the z^{4n+1} entries.
  const auto t = expand({CompositeTag::TANH_LN, 0}, 41);
  for (long n = 0; 4 * n + 1 <= 41; ++n) {
    EXPECT_EQ(t.coeffs[4 * n + 1], Rational(BigInt(n % 2 ? -1 : 1), BigInt(1) << (2 * n))) << n;
  }
}

TEST(SeriesFactory, Radii) {
  const long b = 128;
  EXPECT_NEAR(radius({CompositeTag::LN_1P_LN, 0}, b).to_double(), 1 - std::exp(-1.0), 1e-15);
  EXPECT_NEAR(radius({CompositeTag::ARCTAN_LN, 0}, b).to_double(), 2 * std::sin(0.5), 1e-15);
  EXPECT_NEAR(radius({CompositeTag::COS_LN, 0}, b).to_double(), 1.0, 1e-15);
}

TEST(SeriesFactory, ParseNames) {
  EXPECT_EQ(CompositeKind::parse("SINH_LN", 0).tag, CompositeTag::SINH_LN);
  EXPECT_EQ(CompositeKind::parse("INV_LOG_POW", 3).m, 3);
  EXPECT_THROW(CompositeKind::parse("NOPE", 0), DomainError);
  EXPECT_THROW(expand({CompositeTag::INV_LOG_POW, 1}, 5), DomainError);
}

TEST(SeriesFactory, LaurentHeadForInverseLogPowers) {
  // 1/ln^2(1+z) = z^-2 + z^-1 + 1/12 + 0 z - z^2/240 + ...
  const auto s = expand({CompositeTag::INV_LOG_POW, 2}, 3);
  ASSERT_EQ(s.laurent_head.size(), 2u);
  EXPECT_EQ(s.laurent_head[0], std::make_pair(-2L, Rational(1)));
  EXPECT_EQ(s.laurent_head[1], std::make_pair(-1L, Rational(1)));
  EXPECT_EQ(s.coeffs[0], Rational(1, 12));
  EXPECT_EQ(s.coeffs[2], Rational(-1, 240));
}

// Property: inside the radius the truncated expansion matches direct evaluation.
TEST(SeriesFactory, ExpansionMatchesDirectEvaluation) {
  const std::vector<CompositeKind> kinds = {
      {CompositeTag::COSH_LN, 0},        {CompositeTag::SINH_LN, 0},   {CompositeTag::COS_LN, 0},
      {CompositeTag::SIN_LN, 0},         {CompositeTag::LN_1P_LN, 0},  {CompositeTag::INV_LOG_POW, 2},
      {CompositeTag::INV_LOG_POW, 3},    {CompositeTag::LOGPOW_OVER_1PZ, 2}, {CompositeTag::ARCTAN_LN, 0},
      {CompositeTag::ARCTANH_LN, 0},     {CompositeTag::ARCTANH_POW, 3}, {CompositeTag::TAN_LN, 0},
      {CompositeTag::TANH_LN, 0},        {CompositeTag::ARCTAN_ARCTANH, 0}};
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (const auto& k : kinds) {
    const auto s = expand(k, 120);
    const double r = std::min(1.0, radius(k, 64).to_double());
    for (int i = 0; i < 5; ++i) {
      double zd = u(rng) * r;
      if (std::fabs(zd) < 1e-3) zd = 0.1 * r;
      const HPReal z = HPReal::from_double(zd, 192);
      const HPReal series = s.evaluate(z);
      const HPReal direct = composite_value(k, z);
      // Truncation error near (|z|/r)^121 <= 2^-121.
      EXPECT_LT(abs(series - direct).to_double(), 1e-25 * std::max(1.0, std::fabs(direct.to_double())))
          << k.name() << " at " << zd;
    }
  }
}

TEST(ArctanArctanh, Coefficients) {
  const auto A = arctan_arctanh_coeffs(6);
  // Odd powers x^{2n+1}: x, 0 x^3, x^5/15, ..., 64/2835 x^9.
  EXPECT_EQ(A[0], Rational(1));
  EXPECT_EQ(A[1], Rational(0));
  EXPECT_EQ(A[2], Rational(1, 15));
  EXPECT_EQ(A[4], Rational(64, 2835));
}

TEST(ArctanArctanh, FloatRouteMatchesExact) {
  const auto A = arctan_arctanh_coeffs(60);
  const auto H = arctan_arctanh_coeffs_hp(60, 256);
  for (std::size_t n = 0; n < A.size(); ++n) {
    const HPReal e = HPReal::from_rational(A[n], 256);
    EXPECT_LT(abs(H[n] - e).to_double(), 1e-70 * std::max(1.0, std::fabs(e.to_double()))) << n;
  }
}

TEST(Cayley, LnLn2Terms) {
  const auto t = cayley_lnln_series(7);
  EXPECT_EQ(t[0], Rational(-1, 2));
  EXPECT_EQ(t[3], Rational(251, 2880));
  EXPECT_EQ(t[6], Rational(-751, 17280));
}

TEST(Cayley, PartialSumsApproachLnLn2) {
  const auto t = cayley_lnln_series(300);
  HPReal s(128);
  for (const auto& x : t) s += HPReal::from_rational(x, 128);
  const double target = std::log(std::log(2.0));
  // Alternating with terms ~ 1/(n ln n): error below the first omitted term.
  EXPECT_LT(std::fabs(s.to_double() - target), 1.0 / (301 * std::log(301.0)));
}
