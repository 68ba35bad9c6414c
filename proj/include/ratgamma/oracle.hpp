#pragma once

#include "ratgamma/core/complex_hp.hpp"
#include "ratgamma/core/hpreal.hpp"

// Reference implementations used to check the series machinery. Nothing here
// depends on Stirling numbers of the first kind.
namespace ratgamma::oracle {

struct OracleConfig {
  long bits = kDefaultBits;
  long guard_bits = 40;
  // Arguments are shifted until Re(w) >= shift_threshold before the
  // asymptotic series is applied.
  long shift_threshold = 20;
  long max_terms = 4000;
};

OracleConfig default_config(long bits);

// Principal branch of log Gamma, continuous on C minus (-inf, 0].
ComplexHP lngamma(const ComplexHP& z, const OracleConfig& cfg);
ComplexHP lngamma(const ComplexHP& z);
// Real argument, x > 0.
HPReal lngamma(const HPReal& x);
// 1/Gamma(x) for any real x; zero at the poles of Gamma.
HPReal rgamma(const HPReal& x);

// k-th derivative of digamma (k = 0 is digamma itself).
ComplexHP polygamma(int k, const ComplexHP& z, const OracleConfig& cfg);
ComplexHP polygamma(int k, const ComplexHP& z);
HPReal polygamma(int k, const HPReal& x);

// Riemann and Hurwitz zeta for real s != 1, v > 0.
HPReal zeta(const HPReal& s);
HPReal zeta(long s, long bits);
HPReal zeta_prime(const HPReal& s);
HPReal hurwitz_zeta(const HPReal& s, const HPReal& v);

HPReal euler_gamma(long bits);
// Logarithmic integral li(2).
HPReal li2(long bits);
HPReal ln_2pi(long bits);

}  // namespace ratgamma::oracle
