#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/identity_suite.hpp"
#include "ratgamma/oracle.hpp"

using namespace ratgamma;
using namespace ratgamma::identities;

TEST(Identities, ZetaFromStirling) {
  const long b = 128;
  // k = 1: terms 1/n^2, so the tail after N is close to 1/N.
  const HPReal s = zeta_from_stirling(1, 1000, b);
  const double err = (oracle::zeta(2, b) - s).to_double();
  EXPECT_GT(err, 0.0);
  EXPECT_NEAR(err * 1000, 1.0, 1e-3);
  EXPECT_LT(std::fabs((zeta_from_stirling(2, 2000, b) - oracle::zeta(3, b)).to_double()), 1e-2);
}

TEST(Identities, HurwitzFromStirling) {
  const long b = 128;
  const HPReal s = hurwitz_from_stirling(1, Rational(2), 2000, b);
  const HPReal ref = oracle::hurwitz_zeta(HPReal::from_long(2, b), HPReal::from_long(2, b));
  EXPECT_LT(abs(s - ref).to_double(), 2e-3);
}

TEST(Identities, GregoryShifted) {
  const long b = 128;
  const double g = oracle::euler_gamma(b).to_double();
  EXPECT_NEAR(gregory_shifted_closed(0, b).to_double(), g, 1e-15);
  EXPECT_NEAR(gregory_shifted_sum(0, 10000, b).to_double(), g, 2e-6);
  // The negative shifts reduce through the auxiliary sums; checked against the full sum.
  for (long k : {-3L, -2L, -1L, 1L, 2L, 3L}) {
    EXPECT_LT(std::fabs((gregory_shifted_sum(k, 10000, b) - gregory_shifted_closed(k, b)).to_double()), 1e-5) << k;
  }
  EXPECT_THROW(gregory_shifted_closed(-4, b), DomainError);
}

TEST(Identities, FontanaFamily) {
  const long b = 128;
  EXPECT_NEAR(fontana_unit(10000, b).to_double(), 1.0, 0.2);
  EXPECT_NEAR(reciprocal_ln2(10000, b).to_double(), 1 / std::log(2.0), 1e-5);
  EXPECT_NEAR(lnln2(2000, b).to_double(), std::log(std::log(2.0)), 1e-3);
}

TEST(Identities, HarmonicExactTerms) {
  const Rational expect[] = {Rational(1, 6), Rational(1, 32), Rational(11, 810), Rational(35, 4608),
                             Rational(14659, 3024000)};
  for (long n = 1; n <= 5; ++n) {
    EXPECT_EQ(harmonic_weighted_term(HarmonicCase::GAMMA_FROM_PI2_12, n), expect[n - 1]);
  }
  const long b = 128;
  const double pi2 = M_PI * M_PI;
  EXPECT_NEAR(harmonic_weighted_rhs(HarmonicCase::PI2_6_MINUS_1, b).to_double(), pi2 / 6 - 1, 1e-15);
  for (auto c : {HarmonicCase::PI2_6_MINUS_1, HarmonicCase::GAMMA_FROM_PI2_12, HarmonicCase::GAMMA_FROM_PI2_9,
                 HarmonicCase::PSI_LIKE}) {
    const auto [lhs, rhs] = harmonic_weighted(c, 3000, b);
    EXPECT_LT(abs(lhs - rhs).to_double(), 1e-3) << to_string(c);
  }
}

TEST(Identities, EulerFromCauchy) {
  const Rational expect[] = {Rational(1, 4), Rational(5, 72), Rational(1, 32), Rational(251, 14400),
                             Rational(19, 1728)};
  for (long n = 1; n <= 5; ++n) EXPECT_EQ(euler_from_cauchy2_term(n), expect[n - 1]);
  EXPECT_NEAR(euler_from_cauchy2(5000, 128).to_double(), 0.5772156649015329, 1e-4);
  EXPECT_NEAR(alternating_euler(2000, 128).to_double(), 0.4679481152, 1e-8);
}

TEST(Identities, DigammaAndLnGammaSeries) {
  const long b = 128;
  const double psi2 = oracle::polygamma(0, HPReal::from_long(2, b)).to_double();
  EXPECT_NEAR(norlund_digamma(Rational(2), 2000, b, NorlundVariant::PLUS1).to_double(), psi2, 1e-5);
  EXPECT_NEAR(binet_digamma(Rational(2), 2000, b, BinetPsiVariant::K_DIFF).to_double(), psi2, 1e-4);
  const double lg3 = std::log(2.0);
  EXPECT_NEAR(binet_lngamma(Rational(3), 400, b, BinetLnVariant::I_PLUS1).to_double(), lg3, 1e-5);
}

TEST(Identities, LogPowerIntegral) {
  const long b = 128;
  const auto r = log_power_integral(2, 1, b);
  EXPECT_NEAR(r.closed.to_double(), 2 * 1.2020569031595943, 1e-14);
  EXPECT_LT(abs(r.closed - r.quadrature).to_double(), 1e-30);
  EXPECT_NEAR(log_power_integral(3, 2, b).closed.to_double(), -7.21234141895757, 1e-12);
  EXPECT_NEAR(log_power_integral(4, 3, b).closed.to_double(), 27.4125616424488, 1e-12);
  for (long s = 1; s <= 6; ++s) {
    for (long k = 1; k <= s; ++k) {
      const auto v = log_power_integral(s, k, b);
      EXPECT_LT(relative_error(v.closed, v.quadrature).to_double(), 1e-25) << s << "," << k;
    }
  }
  EXPECT_THROW(log_power_integral(2, 3, b), DomainError);
  EXPECT_THROW(log_power_integral(1, 0, b), DomainError);
}

TEST(Identities, AuxiliarySums) {
  const auto aux = auxiliary_sums(2000, 128);
  ASSERT_EQ(aux.size(), kAuxiliaryCount);
  for (const auto& a : aux) EXPECT_LT(abs(a.lhs - a.rhs).to_double(), 10 * a.tail_estimate + 1e-30) << a.id;
  EXPECT_EQ(auxiliary_sum_rhs(0, 64).to_double(), 1.0);
  EXPECT_NEAR(auxiliary_sum_rhs(1, 64).to_double(), 0.75, 1e-15);
}

TEST(Catalogue, IdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& c : catalogue()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.description.empty());
  }
  EXPECT_GE(ids.size(), 30u);
  EXPECT_THROW(find_case("no_such_case"), DomainError);
}

// Property: the slope fit recovers the exponent of synthetic data with any log shape.
TEST(Catalogue, FitSlopeRecoversExponent) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pe(-3, 0), la(-3, 3), cc(0.1, 10);
  const std::vector<long> Ns = {100, 1000, 10000};
  for (int i = 0; i < 200; ++i) {
    const double p = pe(rng), a = la(rng), C = cc(rng);
    std::vector<double> errs, shape;
    for (long N : Ns) {
      const double L = std::log(static_cast<double>(N));
      shape.push_back(std::pow(L, a));
      errs.push_back(C * std::pow(static_cast<double>(N), p) * std::pow(L, a));
    }
    EXPECT_NEAR(fit_slope(Ns, errs, shape), p, 1e-9);
  }
}

TEST(Catalogue, RunCheapCase) {
  const auto r = run_case(find_case("zeta_k1"), {100, 1000}, 128);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.fitted_c, kMaxFittedConstant);
  EXPECT_NEAR(r.slope, -1.0, kSlopeTolerance);
  for (const auto& row : r.rows) EXPECT_TRUE(row.pass);
}
