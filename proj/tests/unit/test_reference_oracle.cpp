#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ratgamma/oracle.hpp"
#include "ratgamma/quadrature.hpp"

using namespace ratgamma;

namespace {

constexpr long kBits = 192;

HPReal hp(double x, long bits = kBits) { return HPReal::from_double(x, bits); }

}  // namespace

TEST(Oracle, LnGammaSpecialValues) {
  EXPECT_TRUE(oracle::lngamma(hp(1.0)).is_zero() || abs(oracle::lngamma(hp(1.0))).to_double() < 1e-55);
  EXPECT_LT(abs(oracle::lngamma(hp(2.0))).to_double(), 1e-55);
  const HPReal half = oracle::lngamma(hp(0.5));
  EXPECT_LT(abs(half - log(const_pi(kBits)) / 2).to_double(), 1e-55);
  EXPECT_NEAR(oracle::lngamma(hp(10.0)).to_double(), std::log(362880.0), 1e-12);
}

TEST(Oracle, LnGammaMatchesEulerIntegral) {
  // Gamma(z) = int_0^inf t^{z-1} e^{-t} dt = (1/z) int_0^inf exp(-u^{1/z}) du after u = t^z.
  const long b = 128;
  for (double zd : {1 / M_PI, 0.75, 2.5}) {
    const HPReal z = hp(zd, b);
    const HPReal g = quad::integrate_to_infinity(
                         [&](const HPReal& u) { return exp(-exp(log(u) / z)); }, HPReal(b), b) / z;
    EXPECT_LT(abs(log(g) - oracle::lngamma(z)).to_double(), 1e-25) << zd;
  }
}

TEST(Oracle, RecurrenceAndReflection) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.05, 5.0), v(-4.0, 4.0);
  for (int i = 0; i < 40; ++i) {
    const ComplexHP z(hp(u(rng)), hp(v(rng)));
    // ln Gamma(z + 1) = ln Gamma(z) + ln z up to a multiple of 2 pi i on the principal branch.
    const ComplexHP d = oracle::lngamma(z + ComplexHP(HPReal::from_long(1, kBits))) - oracle::lngamma(z) - log(z);
    EXPECT_LT(abs(d.re).to_double(), 1e-50);
    const double k = d.im.to_double() / (2 * M_PI);
    EXPECT_NEAR(k, std::round(k), 1e-40);
  }
  // Gamma(x) Gamma(1-x) = pi / sin(pi x)
  const HPReal x = hp(0.3);
  const HPReal lhs = oracle::lngamma(x) + oracle::lngamma(1 - x);
  EXPECT_LT(abs(lhs - log(const_pi(kBits) / sin(const_pi(kBits) * x))).to_double(), 1e-50);
}

TEST(Oracle, ReciprocalGamma) {
  EXPECT_TRUE(oracle::rgamma(hp(0.0)).is_zero());
  EXPECT_TRUE(oracle::rgamma(hp(-3.0)).is_zero());
  EXPECT_NEAR(oracle::rgamma(hp(-0.5)).to_double(), -1 / (2 * std::sqrt(M_PI)), 1e-15);
  EXPECT_NEAR(oracle::rgamma(hp(5.0)).to_double(), 1.0 / 24, 1e-16);
}

TEST(Oracle, Polygamma) {
  EXPECT_LT(abs(oracle::polygamma(0, hp(1.0)) + oracle::euler_gamma(kBits)).to_double(), 1e-50);
  EXPECT_LT(abs(oracle::polygamma(1, hp(1.0)) - oracle::zeta(2, kBits)).to_double(), 1e-50);
  EXPECT_LT(abs(oracle::polygamma(2, hp(1.0)) + 2 * oracle::zeta(3, kBits)).to_double(), 1e-50);
  // Derivative check against a central difference of the next lower order.
  const HPReal h = ldexp(HPReal::from_long(1, kBits), -50);
  for (double xd : {0.3, 1 / M_PI, 2.7}) {
    const HPReal x = hp(xd);
    for (int k = 0; k <= 2; ++k) {
      const HPReal fd = k == 0 ? (oracle::lngamma(x + h) - oracle::lngamma(x - h)) / (2 * h)
                               : (oracle::polygamma(k - 1, x + h) - oracle::polygamma(k - 1, x - h)) / (2 * h);
      EXPECT_LT(relative_error(fd, oracle::polygamma(k, x)).to_double(), 1e-25) << xd << " k=" << k;
    }
  }
}

TEST(Oracle, ZetaValues) {
  const HPReal pi = const_pi(kBits);
  EXPECT_LT(abs(oracle::zeta(2, kBits) - pi * pi / 6).to_double(), 1e-55);
  EXPECT_LT(abs(oracle::zeta(4, kBits) - pi * pi * pi * pi / 90).to_double(), 1e-55);
  EXPECT_NEAR(oracle::zeta(3, kBits).to_double(), 1.2020569031595943, 1e-15);
  EXPECT_NEAR(oracle::zeta(hp(0.0)).to_double(), -0.5, 1e-15);
  EXPECT_LT(abs(oracle::zeta_prime(hp(0.0)) + oracle::ln_2pi(kBits) / 2).to_double(), 1e-50);
  // zeta'(-2) = -zeta(3) / (4 pi^2)
  EXPECT_LT(abs(oracle::zeta_prime(hp(-2.0)) + oracle::zeta(3, kBits) / (4 * pi * pi)).to_double(), 1e-50);
  EXPECT_NEAR(oracle::zeta_prime(hp(2.0)).to_double(), -0.93754825431584375, 1e-15);
  // zeta(s, 1) = zeta(s); zeta(s, 2) = zeta(s) - 1.
  EXPECT_LT(abs(oracle::hurwitz_zeta(hp(3.0), hp(1.0)) - oracle::zeta(3, kBits)).to_double(), 1e-50);
  EXPECT_LT(abs(oracle::hurwitz_zeta(hp(2.0), hp(2.0)) - oracle::zeta(2, kBits) + 1).to_double(), 1e-50);
}

TEST(Oracle, Constants) {
  EXPECT_EQ(oracle::euler_gamma(128).str(20), "5.7721566490153286061e-01");
  EXPECT_NEAR(oracle::li2(128).to_double(), 1.0451637801174928, 1e-15);
  EXPECT_NEAR((oracle::li2(128) - oracle::euler_gamma(128)).to_double(), 0.4679481152, 1e-10);
  EXPECT_NEAR(oracle::ln_2pi(128).to_double(), std::log(2 * M_PI), 1e-15);
}

TEST(Quadrature, ReciprocalGammaIntegral) {
  const long b = 128;
  const HPReal A = quad::integrate([](const HPReal& x) { return oracle::rgamma(x); }, HPReal(b),
                                   HPReal::from_long(1, b), b);
  EXPECT_NEAR(A.to_double(), 0.5412357343, 1e-10);
}

TEST(Quadrature, ArctanArctanhIntegral) {
  const long b = 128;
  const HPReal v = quad::integrate([](const HPReal& x) { return atan(atanh(x)) / x; }, HPReal(b),
                                   HPReal::from_long(1, b), b);
  EXPECT_NEAR(v.to_double(), 1.025760510, 1e-9);
}

TEST(Quadrature, EndpointSingularities) {
  const long b = 192;
  // int_0^1 ln x dx = -1, int_0^1 x^{-1/2} dx = 2, int_0^inf e^{-x} dx = 1.
  const HPReal one = HPReal::from_long(1, b);
  EXPECT_LT(abs(quad::integrate([](const HPReal& x) { return log(x); }, HPReal(b), one, b) + 1).to_double(), 1e-40);
  EXPECT_LT(abs(quad::integrate([](const HPReal& x) { return 1 / sqrt(x); }, HPReal(b), one, b) - 2).to_double(),
            1e-40);
  EXPECT_LT(abs(quad::integrate_to_infinity([](const HPReal& x) { return exp(-x); }, HPReal(b), b) - 1).to_double(),
            1e-40);
}
