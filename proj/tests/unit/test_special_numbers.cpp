#include <gtest/gtest.h>

#include <cmath>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/oracle.hpp"
#include "ratgamma/special_numbers.hpp"
#include "ratgamma/stirling.hpp"

using namespace ratgamma;

TEST(Gregory, Values) {
  const Rational expect[] = {Rational(1, 2),   Rational(-1, 12), Rational(1, 24),
                             Rational(-19, 720), Rational(3, 160), Rational(-863, 60480)};
  for (long n = 1; n <= 6; ++n) EXPECT_EQ(gregory(n), expect[n - 1]);
  EXPECT_EQ(gregory(7), Rational(275, 24192));
  EXPECT_THROW(gregory(0), Error);
}

TEST(Gregory, StrictlyAlternating) {
  for (long n = 1; n <= 120; ++n) EXPECT_EQ(gregory(n).sign(), n % 2 ? 1 : -1);
}

TEST(Gregory, GeneratingFunction) {
  // 1 + sum G_n z^n = z / ln(1+z), residual shrinking in N.
  for (double zd : {0.5, -0.5}) {
    const HPReal z = HPReal::from_double(zd, 128);
    const HPReal target = z / log1p(z);
    double prev = 1.0;
    for (long N : {10L, 20L, 40L}) {
      HPReal s = HPReal::from_long(1, 128);
      for (long n = 1; n <= N; ++n) s += HPReal::from_rational(gregory(n), 128) * pow(z, n);
      const double r = abs(s - target).to_double();
      EXPECT_LT(r, prev);
      prev = r;
    }
    EXPECT_LT(prev, 1e-12);
  }
}

TEST(Gregory, FloatPathMatchesExact) {
  for (long n : {2L, 5L, 17L, 100L, 250L, 400L}) {
    const HPReal e = HPReal::from_rational(gregory(n), 256);
    const HPReal f = gregory_hp(n, 256);
    EXPECT_LT(relative_error(f, e).to_double(), 1e-70) << n;
  }
  EXPECT_NEAR(gregory_hp(2, 128).to_double(), -1.0 / 12, 1e-18);
  EXPECT_NEAR(gregory_hp(5, 128).to_double(), 0.01875, 1e-18);
}

TEST(Gregory, IntegralRouteMatchesConvolution) {
  for (long n : {500L, 3000L}) {
    EXPECT_LT(relative_error(gregory_integral(n, 128), gregory_hp(n, 128)).to_double(), 1e-30) << n;
  }
}

TEST(Cauchy2, Values) {
  const Rational expect[] = {Rational(1, 2),    Rational(5, 6),   Rational(9, 4),
                             Rational(251, 30), Rational(475, 12), Rational(19087, 84)};
  for (long n = 1; n <= 6; ++n) EXPECT_EQ(cauchy2(n), expect[n - 1]);
  EXPECT_EQ(cauchy2(0), Rational(1));
}

TEST(Cauchy2, RatioFloatAndIntegralRoutes) {
  for (long n : {3L, 50L, 400L}) {
    const HPReal e = HPReal::from_rational(cauchy2(n) / Rational(factorial(static_cast<unsigned long>(n))), 256);
    EXPECT_LT(relative_error(cauchy2_ratio_hp(n, 256), e).to_double(), 1e-70) << n;
  }
  for (long n : {700L, 4000L}) {
    EXPECT_LT(relative_error(cauchy2_ratio_integral(n, 128), cauchy2_ratio_hp(n, 128)).to_double(), 1e-30) << n;
  }
}

TEST(Binet, Values) {
  EXPECT_EQ(binet_I(3), Rational(59, 60));
  EXPECT_EQ(binet_Iprime(4), Rational(1, 15));
  EXPECT_EQ(binet_Iprime(2), Rational(0));
  EXPECT_EQ(binet_K(4), Rational(109, 15));
  EXPECT_EQ(binet_K(6), Rational(11153, 42));
}

TEST(Binet, Relations) {
  for (long n = 2; n <= 60; ++n) {
    const Rational nf(factorial(static_cast<unsigned long>(n)));
    EXPECT_EQ(binet_K(n), nf - Rational(2) * cauchy2(n));
    EXPECT_EQ((binet_K(n) - Rational(n) * binet_K(n - 1)) / Rational(2), gregory(n).abs() * nf) << n;
  }
}

TEST(Cauchy, FirstKind) {
  for (long n = 1; n <= 30; ++n) {
    EXPECT_EQ(cauchy1(n), gregory(n) * Rational(factorial(static_cast<unsigned long>(n))));
  }
}

TEST(GeneralSums, Values) {
  EXPECT_EQ(general_sum_unsigned(2, 1), Rational(5, 6));
  EXPECT_EQ(general_sum_signed(1, 1), Rational(1, 2));
  EXPECT_EQ(general_sum_unsigned(3, 2), Rational(97, 60));
}

TEST(GeneralSums, FloatSeriesMatchExact) {
  for (long k : {1L, 2L, 3L}) {
    const auto u = unsigned_sum_series(k, 300, 256);
    const auto s = signed_sum_series(k, 300, 256);
    for (long n : {1L, 7L, 64L, 300L}) {
      const Rational nf(factorial(static_cast<unsigned long>(n)));
      EXPECT_LT(relative_error((*u)[n], HPReal::from_rational(general_sum_unsigned(n, k) / nf, 256)).to_double(),
                1e-70);
      EXPECT_LT(relative_error((*s)[n], HPReal::from_rational(general_sum_signed(n, k) / nf, 256)).to_double(),
                1e-60);
    }
  }
}

TEST(Recurrence, GregoryCauchy) {
  // n C2_{n-1} - C2_n = |G_n| n!
  EXPECT_EQ(Rational(4) * Rational(9, 4) - Rational(251, 30), Rational(19, 30));
  EXPECT_TRUE(recurrence_check(50));
  EXPECT_TRUE(recurrence_check(400));
}

TEST(Bounds, GregorySimple) {
  const auto [lo, hi] = gregory_bounds(5, BoundForm::Simple, 128);
  EXPECT_LT(lo.to_double(), 3.0 / 160);
  EXPECT_GT(hi.to_double(), 3.0 / 160);
  EXPECT_THROW(gregory_bounds(4, BoundForm::Simple, 128), DomainError);
  const HPReal g = abs(gregory_hp(100, 128));
  const auto [l2, h2] = gregory_bounds(100, BoundForm::Simple, 128);
  EXPECT_TRUE(l2 <= g && g <= h2);
}

TEST(Bounds, GregoryFullIsTighter) {
  for (long n : {10L, 100L, 1000L}) {
    const auto [ls, hs] = gregory_bounds(n, BoundForm::Simple, 128);
    const auto [lf, hf] = gregory_bounds(n, BoundForm::Full, 128);
    const HPReal g = abs(gregory_hp(n, 128));
    EXPECT_TRUE(lf <= g && g <= hf) << n;
    EXPECT_LE((hf - lf).to_double(), (hs - ls).to_double()) << n;
  }
}

TEST(Bounds, Cauchy2) {
  const auto [lo4, hi4] = cauchy2_bounds(4, BoundForm::Simple, 128);
  EXPECT_LT(lo4.to_double(), 251.0 / 30 / 24);
  EXPECT_GT(hi4.to_double(), 251.0 / 30 / 24);
  const auto [lo3, hi3] = cauchy2_bounds(3, BoundForm::Simple, 128);
  EXPECT_LT(lo3.to_double(), 0.375);
  EXPECT_GT(hi3.to_double(), 0.375);
  const HPReal c = cauchy2_ratio_hp(10000, 128);
  const auto [lo, hi] = cauchy2_bounds(10000, BoundForm::Simple, 128);
  EXPECT_TRUE(lo <= c && c <= hi);
}

TEST(Asymptotics, Values) {
  EXPECT_NEAR(cauchy2_asymptotic(1000000, 1, 128).to_double(), 1 / std::log(1e6), 1e-15);
  for (long n : {10L, 1000L, 123456L}) {
    const double L = std::log(static_cast<double>(n));
    EXPECT_NEAR(std::fabs(gregory_asymptotic(n, 1, 128).to_double()) * n * L * L, 1.0, 1e-14);
  }
  // Sign of G_n carried by the asymptotic form.
  EXPECT_LT(gregory_asymptotic(1000, 1, 128).to_double(), 0.0);
  EXPECT_GT(gregory_asymptotic(1001, 1, 128).to_double(), 0.0);
}

TEST(Asymptotics, HigherOrderIsCloser) {
  for (long n : {1000L, 4000L}) {
    const HPReal c = cauchy2_ratio_hp(n, 128);
    const HPReal g = gregory_hp(n, 128);
    double pc = 1e9, pg = 1e9;
    for (int order = 1; order <= 3; ++order) {
      const double ec = abs(c - cauchy2_asymptotic(n, order, 128)).to_double();
      const double eg = abs(g - gregory_asymptotic(n, order, 128)).to_double();
      EXPECT_LT(ec, pc);
      EXPECT_LT(eg, pg);
      pc = ec;
      pg = eg;
    }
  }
}

TEST(ReciprocalGamma, Coefficients) {
  const auto a = reciprocal_gamma_coeffs(12, 256);
  EXPECT_TRUE(a[0].is_zero());
  EXPECT_EQ(a[1].to_double(), 1.0);
  EXPECT_NEAR(a[2].to_double(), 0.5772156649015329, 1e-15);
  const double g = 0.5772156649015329;
  EXPECT_NEAR(a[3].to_double(), g * g / 2 - M_PI * M_PI / 12, 1e-15);
  // Independent contour route.
  const auto c = reciprocal_gamma_coeffs_contour(12, 256);
  for (long k = 1; k <= 12; ++k) EXPECT_NEAR(a[k].to_double(), c[k].to_double(), 1e-25) << k;
  // 1/Gamma(x) at x = 0.3 from the truncated series.
  HPReal s(256), xp = HPReal::from_long(1, 256);
  const HPReal x = HPReal::from_double(0.25, 256);
  const auto big = reciprocal_gamma_coeffs(40, 256);
  for (long k = 0; k <= 40; ++k) {
    s += big[k] * xp;
    xp *= x;
  }
  EXPECT_LT(abs(s - oracle::rgamma(x)).to_double(), 1e-25);
}
