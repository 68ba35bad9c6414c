#include "ratgamma/oracle.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/core/tables.hpp"

namespace ratgamma::oracle {

namespace {

HPReal bern_hp(long n, long bits) { return HPReal::from_rational(bernoulli(n), bits); }

bool is_nonpositive_integer(const HPReal& x) { return x.sign() <= 0 && mpfr_integer_p(x.get()); }

void check_pole(const ComplexHP& z) {
  if (z.im.is_zero() && is_nonpositive_integer(z.re)) throw PoleError("pole of Gamma at " + z.re.str(20));
}

long working_bits(const OracleConfig& cfg) { return cfg.bits + cfg.guard_bits; }

// Number of unit steps needed to move Re(z) past the threshold.
long shift_count(const HPReal& re, long threshold) {
  if (re >= static_cast<double>(threshold)) return 0;
  return static_cast<long>(std::ceil(static_cast<double>(threshold) - re.to_double()));
}

// Adds asymptotic terms until they drop below 2^-wp relative to the running
// total; terms must keep decreasing until then.
template <typename TermFn>
void add_asymptotic(ComplexHP& total, TermFn term_at, long wp, long max_terms) {
  HPReal last_mag;
  bool have_last = false;
  for (long j = 1; j <= max_terms; ++j) {
    ComplexHP t = term_at(j);
    HPReal mag = abs(t);
    total += t;
    if (mag <= ldexp(abs(total), -wp) || mag.is_zero()) return;
    if (have_last && mag > last_mag) throw ConvergenceError("asymptotic series diverged before reaching target precision");
    last_mag = mag;
    have_last = true;
  }
  throw ConvergenceError("asymptotic series exceeded the term limit");
}

// Euler-Maclaurin tail sum_{j>=1} B_2j/(2j)! P_j(s) X^{1-s-2j} with
// P_j(s) = s (s+1) ... (s+2j-2). Also returns d/ds of the same sum when
// deriv is non-null.
HPReal em_tail(const HPReal& s, const HPReal& X, long wp, long max_terms, HPReal* deriv) {
  HPReal lnX = log(X);
  HPReal xpow = exp((1 - s) * lnX);  // X^{1-s}
  HPReal inv_x2 = 1 / (X * X);
  HPReal P = s;
  HPReal dP = HPReal::from_long(1, wp);
  HPReal fact = HPReal::from_long(2, wp);  // (2j)!
  HPReal total(wp);
  HPReal dtotal(wp);
  HPReal last;
  bool have_last = false;
  for (long j = 1; j <= max_terms; ++j) {
    xpow *= inv_x2;
    HPReal b = bern_hp(2 * j, wp) / fact;
    HPReal t = b * P * xpow;
    total += t;
    // At non-positive integer s the zeta terms vanish but the derivative terms do not.
    HPReal mag = abs(t);
    HPReal scale = abs(total);
    if (deriv) {
      HPReal dt = b * (dP - lnX * P) * xpow;
      dtotal += dt;
      mag += abs(dt);
      scale += abs(dtotal);
    }
    if (mag <= ldexp(scale, -wp) || mag.is_zero()) break;
    if (have_last && mag > last) throw ConvergenceError("Euler-Maclaurin tail diverged");
    last = mag;
    have_last = true;
    // Advance P and its derivative by the factors (s+2j-1)(s+2j).
    HPReal f1 = s + (2 * j - 1);
    HPReal f2 = s + 2 * j;
    HPReal q = f1 * f2;
    HPReal dq = f1 + f2;
    dP = dP * q + P * dq;
    P *= q;
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  if (deriv) *deriv = dtotal;
  return total;
}

long em_cutoff(const HPReal& s, long wp) {
  return std::max<long>(12, static_cast<long>(std::ceil(0.12 * static_cast<double>(wp) + std::fabs(s.to_double()))));
}

}  // namespace

OracleConfig default_config(long bits) {
  OracleConfig cfg;
  cfg.bits = bits;
  const double wp = static_cast<double>(bits + cfg.guard_bits);
  cfg.shift_threshold = std::max<long>(20, static_cast<long>(std::ceil(wp * std::log(2.0) / (2 * M_PI))) + 2);
  cfg.max_terms = 6 * cfg.shift_threshold + 50;
  return cfg;
}

ComplexHP lngamma(const ComplexHP& z_in, const OracleConfig& cfg) {
  check_pole(z_in);
  const long wp = working_bits(cfg);
  ComplexHP z(z_in.re.with_bits(wp), z_in.im.with_bits(wp));
  const long m = shift_count(z.re, cfg.shift_threshold);
  ComplexHP w = z + m;

  ComplexHP lw = log(w);
  ComplexHP total = (w - ldexp(HPReal::from_long(1, wp), -1)) * lw - w + ComplexHP(ldexp(ln_2pi(wp), -1));
  ComplexHP inv = reciprocal(w);
  ComplexHP inv2 = inv * inv;
  ComplexHP p = inv;
  add_asymptotic(
      total,
      [&](long j) {
        if (j > 1) p = p * inv2;
        return p * (bern_hp(2 * j, wp) / ((2 * j) * (2 * j - 1)));
      },
      wp, cfg.max_terms);

  if (m > 0) {
    if (z.is_real()) {
      HPReal prod = HPReal::from_long(1, wp);
      for (long j = 0; j < m; ++j) prod *= z.re + j;
      total -= log(ComplexHP(prod, HPReal(wp)));
    } else {
      for (long j = 0; j < m; ++j) total -= log(z + j);
    }
  }
  return ComplexHP(total.re.with_bits(cfg.bits), total.im.with_bits(cfg.bits));
}

ComplexHP lngamma(const ComplexHP& z) { return lngamma(z, default_config(z.bits())); }

HPReal lngamma(const HPReal& x) {
  if (x.sign() <= 0) throw DomainError("real log Gamma requires x > 0");
  return lngamma(ComplexHP(x)).re;
}

HPReal rgamma(const HPReal& x) {
  const long bits = x.bits();
  if (is_nonpositive_integer(x)) return HPReal(bits);
  if (x >= 0.5) return exp(-lngamma(x));
  // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi.
  const long wp = bits + 32;
  HPReal xw = x.with_bits(wp);
  HPReal pi = const_pi(wp);
  HPReal lg = lngamma(ComplexHP(1 - xw), default_config(wp)).re;
  return (sin(pi * xw) * exp(lg) / pi).with_bits(bits);
}

ComplexHP polygamma(int k, const ComplexHP& z_in, const OracleConfig& cfg) {
  if (k < 0) throw DomainError("polygamma order must be non-negative");
  check_pole(z_in);
  const long wp = working_bits(cfg) + 2 * k;
  ComplexHP z(z_in.re.with_bits(wp), z_in.im.with_bits(wp));
  const long m = shift_count(z.re, cfg.shift_threshold + k);
  ComplexHP w = z + m;
  ComplexHP inv = reciprocal(w);
  ComplexHP inv2 = inv * inv;
  const HPReal one = HPReal::from_long(1, wp);

  ComplexHP total(wp);
  if (k == 0) {
    total = log(w) - inv * ldexp(one, -1);
    ComplexHP p(one);
    add_asymptotic(
        total,
        [&](long j) {
          p = p * inv2;
          return p * (-bern_hp(2 * j, wp) / (2 * j));
        },
        wp, cfg.max_terms);
  } else {
    HPReal kf = HPReal::from_bigint(factorial(k), wp);
    HPReal km1f = HPReal::from_bigint(factorial(k - 1), wp);
    ComplexHP wk = pow(inv, k);  // w^-k
    total = wk * km1f + wk * inv * ldexp(kf, -1);
    ComplexHP p = wk;
    add_asymptotic(
        total,
        [&](long j) {
          p = p * inv2;
          // (2j+k-1)!/(2j)!
          BigInt ratio = 1;
          for (long i = 1; i <= k - 1; ++i) ratio *= 2 * j + i;
          return p * (bern_hp(2 * j, wp) * HPReal::from_bigint(ratio, wp));
        },
        wp, cfg.max_terms);
    if ((k + 1) % 2 != 0) total = -total;
  }

  if (m > 0) {
    ComplexHP shift(wp);
    for (long j = 0; j < m; ++j) shift += pow(reciprocal(z + j), k + 1);
    HPReal coef = HPReal::from_bigint(factorial(k), wp);
    if (k % 2 != 0) coef = -coef;
    total -= shift * coef;
  }
  return ComplexHP(total.re.with_bits(cfg.bits), total.im.with_bits(cfg.bits));
}

ComplexHP polygamma(int k, const ComplexHP& z) { return polygamma(k, z, default_config(z.bits())); }

HPReal polygamma(int k, const HPReal& x) { return polygamma(k, ComplexHP(x)).re; }

HPReal zeta(const HPReal& s_in) {
  const long bits = s_in.bits();
  if (s_in == HPReal::from_long(1, bits)) throw PoleError("zeta has a pole at s = 1");
  const long wp = bits + 32;
  HPReal s = s_in.with_bits(wp);
  const long N = em_cutoff(s, wp);
  HPReal total(wp);
  for (long n = 1; n < N; ++n) total += exp(-s * log(HPReal::from_long(n, wp)));
  HPReal X = HPReal::from_long(N, wp);
  total += exp((1 - s) * log(X)) / (s - 1);
  total += ldexp(exp(-s * log(X)), -1);
  total += em_tail(s, X, wp, 4 * N + 50, nullptr);
  return total.with_bits(bits);
}

HPReal zeta(long s, long bits) { return zeta(HPReal::from_long(s, bits)); }

HPReal zeta_prime(const HPReal& s_in) {
  const long bits = s_in.bits();
  if (s_in == HPReal::from_long(1, bits)) throw PoleError("zeta has a pole at s = 1");
  const long wp = bits + 32;
  HPReal s = s_in.with_bits(wp);
  const long N = em_cutoff(s, wp);
  HPReal total(wp);
  for (long n = 2; n < N; ++n) {
    HPReal ln = log(HPReal::from_long(n, wp));
    total -= ln * exp(-s * ln);
  }
  HPReal X = HPReal::from_long(N, wp);
  HPReal lnX = log(X);
  HPReal x1s = exp((1 - s) * lnX);
  HPReal sm1 = s - 1;
  total -= lnX * x1s / sm1 + x1s / (sm1 * sm1);
  total -= ldexp(lnX * exp(-s * lnX), -1);
  HPReal d(wp);
  em_tail(s, X, wp, 4 * N + 50, &d);
  total += d;
  return total.with_bits(bits);
}

HPReal hurwitz_zeta(const HPReal& s_in, const HPReal& v_in) {
  const long bits = std::max(s_in.bits(), v_in.bits());
  if (s_in == HPReal::from_long(1, bits)) throw PoleError("Hurwitz zeta has a pole at s = 1");
  if (v_in.sign() <= 0) throw DomainError("Hurwitz zeta requires v > 0");
  const long wp = bits + 32;
  HPReal s = s_in.with_bits(wp);
  HPReal v = v_in.with_bits(wp);
  const long N = em_cutoff(s, wp);
  HPReal total(wp);
  for (long n = 0; n < N; ++n) total += exp(-s * log(v + n));
  HPReal X = v + N;
  total += exp((1 - s) * log(X)) / (s - 1);
  total += ldexp(exp(-s * log(X)), -1);
  total += em_tail(s, X, wp, 4 * N + 50, nullptr);
  return total.with_bits(bits);
}

HPReal euler_gamma(long bits) {
  static std::mutex mu;
  static std::map<long, HPReal> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bits);
    if (it != cache.end()) return it->second;
  }
  HPReal g = -polygamma(0, HPReal::from_long(1, bits + 16));
  g.set_bits(bits);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(bits, g);
  return g;
}

HPReal li2(long bits) {
  const long wp = bits + 32;
  HPReal l2 = const_log2(wp);
  HPReal total = euler_gamma(wp) + log(l2);
  HPReal p = HPReal::from_long(1, wp);
  for (long k = 1;; ++k) {
    p = p * l2 / k;  // (ln 2)^k / k!
    HPReal t = p / k;
    total += t;
    if (t <= ldexp(total, -wp)) break;
  }
  return total.with_bits(bits);
}

HPReal ln_2pi(long bits) { return log(ldexp(const_pi(bits), 1)); }

}  // namespace ratgamma::oracle
