#include <cmath>
#include <string>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/core/tables.hpp"
#include "ratgamma/identity_suite.hpp"
#include "ratgamma/oracle.hpp"
#include "ratgamma/quadrature.hpp"
#include "ratgamma/special_numbers.hpp"
#include "ratgamma/stirling.hpp"

namespace ratgamma::identities {

namespace {

long guard(long bits) { return bits + 32; }

void check_N(long N) {
  if (N < 1) throw DomainError("number of terms must be >= 1");
}

std::vector<HPReal> finish(std::vector<HPReal> v, long bits) {
  for (auto& x : v) x.set_bits(bits);
  return v;
}

// Columns u(n, j) = |S1(n, j)| / n!, j = 1..k, advanced by
// u(n+1, j) = (u(n, j-1) + n u(n, j)) / (n+1).
class NormalizedColumns {
 public:
  NormalizedColumns(long k, long wp) : k_(k), u_(static_cast<std::size_t>(k + 1), HPReal(wp)) {
    u_[1] = HPReal::from_long(1, wp);
  }
  long n() const { return n_; }
  const HPReal& operator[](long j) const { return u_[static_cast<std::size_t>(j)]; }
  void advance() {
    for (long j = k_; j >= 1; --j) {
      HPReal& cur = u_[static_cast<std::size_t>(j)];
      cur *= n_;
      cur += u_[static_cast<std::size_t>(j - 1)];
      cur /= (n_ + 1);
    }
    ++n_;
  }

 private:
  long k_;
  long n_ = 1;
  std::vector<HPReal> u_;  // index 0 stays zero for n >= 1
};

HPReal pi_sq(long wp) {
  HPReal pi = const_pi(wp);
  return pi * pi;
}

}  // namespace

std::vector<HPReal> zeta_from_stirling_prefix(long k, long N, long bits) {
  if (k < 1) throw DomainError("zeta_from_stirling requires k >= 1");
  check_N(N);
  const long wp = guard(bits);
  std::vector<HPReal> out(static_cast<std::size_t>(N + 1), HPReal(wp));
  NormalizedColumns u(k, wp);
  HPReal s(wp);
  for (long n = 1; n <= N; ++n) {
    if (n > 1) u.advance();
    s += u[k] / n;
    out[static_cast<std::size_t>(n)] = s;
  }
  return finish(std::move(out), bits);
}

HPReal zeta_from_stirling(long k, long N, long bits) { return zeta_from_stirling_prefix(k, N, bits).back(); }

std::vector<HPReal> hurwitz_from_stirling_prefix(long k, const Rational& v, long N, long bits) {
  if (k < 1) throw DomainError("hurwitz_from_stirling requires k >= 1");
  if (v.sign() <= 0) throw DomainError("hurwitz_from_stirling requires v > 0");
  check_N(N);
  const long wp = guard(bits);
  const HPReal vv = HPReal::from_rational(v, wp);
  std::vector<HPReal> out(static_cast<std::size_t>(N + 1), HPReal(wp));
  NormalizedColumns u(k, wp);
  HPReal ratio = HPReal::from_long(1, wp);  // n! / (v)_n
  HPReal s(wp);
  for (long n = 1; n <= N; ++n) {
    if (n > 1) u.advance();
    ratio = ratio * n / (vv + (n - 1));
    s += u[k] * ratio / n;
    out[static_cast<std::size_t>(n)] = s;
  }
  return finish(std::move(out), bits);
}

HPReal hurwitz_from_stirling(long k, const Rational& v, long N, long bits) {
  return hurwitz_from_stirling_prefix(k, v, N, bits).back();
}

std::vector<HPReal> gregory_shifted_prefix(long k, long N, long bits) {
  if (k < -3) throw DomainError("gregory_shifted_sum supports shifts k >= -3");
  check_N(N);
  const long wp = guard(bits);
  const auto Gp = signed_sum_series(1, N, wp);
  const auto& G = *Gp;
  const long start = k < 0 ? 1 - k : 1;
  std::vector<HPReal> out(static_cast<std::size_t>(N + 1), HPReal(wp));
  HPReal s(wp);
  for (long n = 1; n <= N; ++n) {
    if (n >= start) s += abs(G[static_cast<std::size_t>(n)]) / (n + k);
    out[static_cast<std::size_t>(n)] = s;
  }
  return finish(std::move(out), bits);
}

HPReal gregory_shifted_sum(long k, long N, long bits) { return gregory_shifted_prefix(k, N, bits).back(); }

HPReal gregory_shifted_closed(long k, long bits) {
  if (k < -3) throw DomainError("gregory_shifted_sum supports shifts k >= -3");
  const long wp = guard(bits) + 2 * std::max(k, 0L);
  const HPReal g = oracle::euler_gamma(wp);
  const HPReal l2p = oracle::ln_2pi(wp);
  const HPReal p2 = pi_sq(wp);
  HPReal v(wp);
  if (k == 0) {
    v = g;
  } else if (k > 0) {
    // 1/k + sum_{m=1}^{k} (-1)^m C(k,m) ln(m+1)
    v = HPReal::from_long(1, wp) / k;
    for (long m = 1; m <= k; ++m) {
      HPReal t = HPReal::from_bigint(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(m)), wp) *
                 log(HPReal::from_long(m + 1, wp));
      if (m % 2) v -= t;
      else v += t;
    }
  } else if (k == -1) {
    v = HPReal::from_long(-1, wp) / 2 + l2p / 2 - g / 2;
  } else {
    const HPReal zp2 = oracle::zeta_prime(HPReal::from_long(2, wp));
    if (k == -2) {
      v = HPReal::from_long(-1, wp) / 8 + l2p / 12 - zp2 / (2 * p2);
    } else {
      v = HPReal::from_long(-1, wp) / 16 + l2p / 24 - zp2 / (4 * p2) + oracle::zeta(3, wp) / (8 * p2);
    }
  }
  return v.with_bits(bits);
}

std::vector<HPReal> fontana_unit_prefix(long N, long bits) {
  check_N(N);
  const long wp = guard(bits);
  const auto Gp = signed_sum_series(1, N, wp);
  const auto& G = *Gp;
  std::vector<HPReal> out(static_cast<std::size_t>(N + 1), HPReal(wp));
  HPReal s(wp);
  for (long n = 1; n <= N; ++n) {
    s += abs(G[static_cast<std::size_t>(n)]);
    out[static_cast<std::size_t>(n)] = s;
  }
  return finish(std::move(out), bits);
}

std::vector<HPReal> reciprocal_ln2_prefix(long N, long bits) {
  check_N(N);
  const long wp = guard(bits);
  const auto Gp = signed_sum_series(1, N, wp);
  const auto& G = *Gp;
  std::vector<HPReal> out(static_cast<std::size_t>(N + 1), HPReal(wp));
  HPReal s = HPReal::from_long(1, wp);
  out[0] = s;
  for (long n = 1; n <= N; ++n) {
    s += G[static_cast<std::size_t>(n)];
    out[static_cast<std::size_t>(n)] = s;
  }
  return finish(std::move(out), bits);
}

std::vector<HPReal> lnln2_prefix(long N, long bits) {
  check_N(N);
  const long wp = guard(bits);
  const auto u1 = unsigned_sum_series(1, N, wp);  // C2_n / n!
  std::vector<HPReal> out(static_cast<std::size_t>(N + 1), HPReal(wp));
  HPReal s(wp);
  for (long n = 1; n <= N; ++n) {
    HPReal t = (*u1)[static_cast<std::size_t>(n)] / n;
    if (n % 2) s -= t;
    else s += t;
    out[static_cast<std::size_t>(n)] = s;
  }
  return finish(std::move(out), bits);
}

HPReal fontana_unit(long N, long bits) { return fontana_unit_prefix(N, bits).back(); }
HPReal reciprocal_ln2(long N, long bits) { return reciprocal_ln2_prefix(N, bits).back(); }
HPReal lnln2(long N, long bits) { return lnln2_prefix(N, bits).back(); }

std::vector<HPReal> sum_l_plus_k_prefix(long k, long N, long bits) {
  if (k < 2) throw DomainError("sum_l_plus_k requires k >= 2");
  check_N(N);
  const long wp = guard(bits);
  const auto sk = signed_sum_series(k, N, wp);
  std::vector<HPReal> out(static_cast<std::size_t>(N + 1), HPReal(wp));
  HPReal s(wp);
  for (long n = 1; n <= N; ++n) {
    HPReal t = (*sk)[static_cast<std::size_t>(n)] / n;
    if (n % 2) s += t;
    else s -= t;
    out[static_cast<std::size_t>(n)] = s;
  }
  return finish(std::move(out), bits);
}

HPReal sum_l_plus_k_rhs(long k, long bits) {
  if (k < 2) throw DomainError("sum_l_plus_k requires k >= 2");
  const long wp = guard(bits) + 2 * k;
  const HPReal two_pi = 2 * const_pi(wp);
  HPReal v = HPReal::from_long(1, wp) / (k - 1) - oracle::ln_2pi(wp) / k + oracle::euler_gamma(wp) / 2;
  for (long l = 1; l <= (k - 1) / 2; ++l) {
    HPReal t = HPReal::from_bigint(binomial(static_cast<unsigned long>(k - 1), static_cast<unsigned long>(2 * l - 1)) *
                                       factorial(static_cast<unsigned long>(2 * l)),
                                   wp) *
               oracle::zeta_prime(HPReal::from_long(2 * l, wp)) / (pow(two_pi, 2 * l) * l);
    if (l % 2) v -= t;
    else v += t;
  }
  for (long l = 1; l <= k / 2 - 1; ++l) {
    HPReal t = HPReal::from_bigint(binomial(static_cast<unsigned long>(k - 1), static_cast<unsigned long>(2 * l)) *
                                       factorial(static_cast<unsigned long>(2 * l)),
                                   wp) *
               oracle::zeta(2 * l + 1, wp) / (2 * pow(two_pi, 2 * l));
    if (l % 2) v -= t;
    else v += t;
  }
  return v.with_bits(bits);
}

std::pair<HPReal, HPReal> sum_l_plus_k_closed(long k, long N, long bits) {
  return {sum_l_plus_k_prefix(k, N, bits).back(), sum_l_plus_k_rhs(k, bits)};
}

std::string to_string(HarmonicCase c) {
  switch (c) {
    case HarmonicCase::PI2_6_MINUS_1: return "PI2_6_MINUS_1";
    case HarmonicCase::GAMMA_FROM_PI2_12: return "GAMMA_FROM_PI2_12";
    case HarmonicCase::GAMMA_FROM_PI2_9: return "GAMMA_FROM_PI2_9";
    case HarmonicCase::PSI_LIKE: return "PSI_LIKE";
  }
  return "?";
}

namespace {

// f(l) as partial fractions: sum_j w_j / (l + j).
std::vector<std::pair<long, Rational>> harmonic_fractions(HarmonicCase c) {
  switch (c) {
    case HarmonicCase::PI2_6_MINUS_1: return {{1, Rational(1)}};
    case HarmonicCase::GAMMA_FROM_PI2_12: return {{1, Rational(1)}, {2, Rational(-1)}};
    case HarmonicCase::GAMMA_FROM_PI2_9: return {{1, Rational(1, 2)}, {3, Rational(-1, 2)}};
    case HarmonicCase::PSI_LIKE: return {{1, Rational(1, 2)}, {2, Rational(-1)}, {3, Rational(1, 2)}};
  }
  return {};
}

}  // namespace

std::vector<HPReal> harmonic_weighted_prefix(HarmonicCase c, long N, long bits) {
  check_N(N);
  const long wp = guard(bits);
  const auto parts = harmonic_fractions(c);
  std::vector<std::shared_ptr<const std::vector<HPReal>>> seqs;
  std::vector<HPReal> weights;
  for (const auto& [j, w] : parts) {
    seqs.push_back(signed_sum_series(j, N, wp));
    weights.push_back(HPReal::from_rational(w, wp));
  }
  std::vector<HPReal> out(static_cast<std::size_t>(N + 1), HPReal(wp));
  Rational H = 0;  // exact harmonic number
  HPReal s(wp);
  for (long n = 1; n <= N; ++n) {
    H += Rational(1, n);
    HPReal coef(wp);
    for (std::size_t i = 0; i < parts.size(); ++i) coef += weights[i] * (*seqs[i])[static_cast<std::size_t>(n)];
    HPReal t = HPReal::from_rational(H, wp) * coef / n;
    if (n % 2) s += t;
    else s -= t;
    out[static_cast<std::size_t>(n)] = s;
  }
  return finish(std::move(out), bits);
}

HPReal harmonic_weighted_rhs(HarmonicCase c, long bits) {
  const long wp = guard(bits);
  const HPReal p2 = pi_sq(wp);
  const HPReal g = oracle::euler_gamma(wp);
  const HPReal l2p = oracle::ln_2pi(wp);
  HPReal v(wp);
  switch (c) {
    case HarmonicCase::PI2_6_MINUS_1: v = p2 / 6 - 1; break;
    case HarmonicCase::GAMMA_FROM_PI2_12: v = p2 / 12 - g; break;
    case HarmonicCase::GAMMA_FROM_PI2_9: v = p2 / 18 + l2p / 2 - g / 2 - 1; break;
    case HarmonicCase::PSI_LIKE: v = 1 + p2 / 36 - (g + l2p) / 2; break;
  }
  return v.with_bits(bits);
}

std::pair<HPReal, HPReal> harmonic_weighted(HarmonicCase c, long N, long bits) {
  return {harmonic_weighted_prefix(c, N, bits).back(), harmonic_weighted_rhs(c, bits)};
}

Rational harmonic_weighted_term(HarmonicCase c, long n) {
  if (n < 1) throw DomainError("term index must be >= 1");
  Rational coef = 0;
  for (const auto& [j, w] : harmonic_fractions(c)) coef += w * general_sum_signed(n, j);
  Rational H = 0;
  for (long m = 1; m <= n; ++m) H += Rational(1, m);
  Rational t = H * coef / Rational(BigInt(n * factorial(static_cast<unsigned long>(n))));
  return n % 2 ? t : -t;
}

std::vector<HPReal> alternating_euler_prefix(long N, long bits) {
  check_N(N);
  const long wp = guard(bits);
  const auto Gp = signed_sum_series(1, N, wp);
  const auto& G = *Gp;
  std::vector<HPReal> out(static_cast<std::size_t>(N + 1), HPReal(wp));
  HPReal s(wp);
  for (long n = 1; n <= N; ++n) {
    s += G[static_cast<std::size_t>(n)] / n;
    out[static_cast<std::size_t>(n)] = s;
  }
  return finish(std::move(out), bits);
}

HPReal alternating_euler(long N, long bits) { return alternating_euler_prefix(N, bits).back(); }

std::vector<HPReal> euler_from_cauchy2_prefix(long N, long bits) {
  check_N(N);
  const long wp = guard(bits);
  const auto u1 = unsigned_sum_series(1, N, wp);
  std::vector<HPReal> out(static_cast<std::size_t>(N + 1), HPReal(wp));
  HPReal s = HPReal::from_long(1, wp);
  out[0] = s;
  for (long n = 1; n <= N; ++n) {
    s -= (*u1)[static_cast<std::size_t>(n)] / (HPReal::from_long(n, wp) * (n + 1));
    out[static_cast<std::size_t>(n)] = s;
  }
  return finish(std::move(out), bits);
}

HPReal euler_from_cauchy2(long N, long bits) { return euler_from_cauchy2_prefix(N, bits).back(); }

Rational euler_from_cauchy2_term(long n) {
  if (n < 1) throw DomainError("term index must be >= 1");
  return cauchy2(n) / Rational(BigInt(n * factorial(static_cast<unsigned long>(n + 1))));
}

namespace {

void check_z(const Rational& z) {
  if (z.sign() <= 0) throw DomainError("argument must be positive");
}

// n!/(z+1)_n and (n-1)!/(z)_n for n = 1..N.
std::vector<HPReal> ratio_plus1(const HPReal& z, long N, long wp) {
  std::vector<HPReal> r(static_cast<std::size_t>(N + 1), HPReal(wp));
  HPReal v = HPReal::from_long(1, wp);
  r[0] = v;
  for (long n = 1; n <= N; ++n) {
    v = v * n / (z + n);
    r[static_cast<std::size_t>(n)] = v;
  }
  return r;
}

std::vector<HPReal> ratio_plain(const HPReal& z, long N, long wp) {
  std::vector<HPReal> q(static_cast<std::size_t>(N + 1), HPReal(wp));
  HPReal v = 1 / z;
  q[1] = v;
  for (long n = 2; n <= N; ++n) {
    v = v * (n - 1) / (z + (n - 1));
    q[static_cast<std::size_t>(n)] = v;
  }
  return q;
}

}  // namespace

std::vector<HPReal> norlund_digamma_prefix(const Rational& z, long N, long bits, NorlundVariant variant) {
  check_z(z);
  check_N(N);
  const long wp = guard(bits);
  const HPReal zz = HPReal::from_rational(z, wp);
  std::vector<HPReal> out(static_cast<std::size_t>(N + 1), HPReal(wp));
  if (variant == NorlundVariant::PLUS1) {
    const auto u1 = unsigned_sum_series(1, N, wp);
    const auto r = ratio_plus1(zz, N, wp);
    HPReal s = log(zz) - 1 / zz;
    out[0] = s;
    for (long n = 1; n <= N; ++n) {
      s += (*u1)[static_cast<std::size_t>(n)] * r[static_cast<std::size_t>(n)] / n;
      out[static_cast<std::size_t>(n)] = s;
    }
  } else {
    const auto Gp = signed_sum_series(1, N, wp);
    const auto& G = *Gp;
    const auto q = ratio_plain(zz, N, wp);
    HPReal s = log(zz) - 1 / (2 * zz);
    out[0] = s;
    out[1] = s;
    for (long n = 2; n <= N; ++n) {
      s -= abs(G[static_cast<std::size_t>(n)]) * q[static_cast<std::size_t>(n)];
      out[static_cast<std::size_t>(n)] = s;
    }
  }
  return finish(std::move(out), bits);
}

HPReal norlund_digamma(const Rational& z, long N, long bits, NorlundVariant v) {
  return norlund_digamma_prefix(z, N, bits, v).back();
}

std::vector<HPReal> binet_lngamma_prefix(const Rational& z, long N, long bits, BinetLnVariant variant) {
  check_z(z);
  check_N(N);
  const long wp = guard(bits);
  const HPReal zz = HPReal::from_rational(z, wp);
  const HPReal half = HPReal::from_long(1, wp) / 2;
  const auto u1 = unsigned_sum_series(1, N, wp);
  const auto u2 = unsigned_sum_series(2, N, wp);
  std::vector<HPReal> out(static_cast<std::size_t>(N + 1), HPReal(wp));
  HPReal s = (zz - half) * log(zz) - zz + oracle::ln_2pi(wp) / 2;
  out[0] = s;
  if (variant == BinetLnVariant::I_PLUS1) {
    const auto r = ratio_plus1(zz, N, wp);
    for (long n = 1; n <= N; ++n) {
      const std::size_t i = static_cast<std::size_t>(n);
      HPReal I_over_fact = 2 * (*u2)[i] - (*u1)[i];  // I(n)/n!
      s += half * I_over_fact * r[i] / n;
      out[i] = s;
    }
  } else {
    const auto u3 = unsigned_sum_series(3, N, wp);
    const auto q = ratio_plain(zz, N, wp);
    for (long n = 1; n <= N; ++n) {
      const std::size_t i = static_cast<std::size_t>(n);
      const std::size_t m = i - 1;
      HPReal Ip = -(*u1)[m] + 3 * (*u2)[m] - 2 * (*u3)[m];  // I'(n)/(n-1)!
      s -= half * Ip * q[i] / n;
      out[i] = s;
    }
  }
  return finish(std::move(out), bits);
}

HPReal binet_lngamma(const Rational& z, long N, long bits, BinetLnVariant v) {
  return binet_lngamma_prefix(z, N, bits, v).back();
}

std::vector<HPReal> binet_digamma_prefix(const Rational& z, long N, long bits, BinetPsiVariant variant) {
  check_z(z);
  check_N(N);
  const long wp = guard(bits);
  const HPReal zz = HPReal::from_rational(z, wp);
  const auto u1 = unsigned_sum_series(1, N, wp);
  std::vector<HPReal> out(static_cast<std::size_t>(N + 1), HPReal(wp));
  HPReal s = log(zz) - 1 / (2 * zz);
  out[0] = s;
  out[1] = s;
  if (variant == BinetPsiVariant::K_PLUS1) {
    const auto r = ratio_plus1(zz, N, wp);
    for (long n = 2; n <= N; ++n) {
      const std::size_t i = static_cast<std::size_t>(n);
      HPReal K_over_fact = 1 - 2 * (*u1)[i];
      s -= K_over_fact * r[i] / (2 * n);
      out[i] = s;
    }
  } else {
    const auto q = ratio_plain(zz, N, wp);
    for (long n = 2; n <= N; ++n) {
      const std::size_t i = static_cast<std::size_t>(n);
      // (K(n) - n K(n-1)) / n! = 2 (C2_{n-1}/(n-1)! - C2_n/n!)
      HPReal d = 2 * ((*u1)[i - 1] - (*u1)[i]);
      s -= d * q[i] / 2;
      out[i] = s;
    }
  }
  return finish(std::move(out), bits);
}

HPReal binet_digamma(const Rational& z, long N, long bits, BinetPsiVariant v) {
  return binet_digamma_prefix(z, N, bits, v).back();
}

LogPowerIntegral log_power_integral(long s, long k, long bits) {
  if (k < 1) throw DomainError("log_power_integral requires k >= 1");
  if (s <= k - 1) throw DomainError("log_power_integral requires s > k - 1");
  const long wp = guard(bits);
  const HPReal fs = HPReal::from_bigint(factorial(static_cast<unsigned long>(s)), wp);
  HPReal closed(wp);
  if (k == 1) {
    closed = fs * oracle::zeta(s + 1, wp);
  } else {
    // s!/(k-1)! sum_r S1(k-1,r) sum_m C(r,m) (k-2)^{r-m} zeta(s+1-m)
    auto t = shared_triangle(k - 1);
    HPReal acc(wp);
    for (long r = 1; r <= k - 1; ++r) {
      const BigInt srk = signed_s1(*t, k - 1, r);
      HPReal inner(wp);
      for (long m = 0; m <= r; ++m) {
        BigInt c = binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(m));
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k - 2), static_cast<unsigned long>(r - m));
        inner += HPReal::from_bigint(BigInt(c * p), wp) * oracle::zeta(s + 1 - m, wp);
      }
      acc += HPReal::from_bigint(srk, wp) * inner;
    }
    closed = fs * acc / HPReal::from_bigint(factorial(static_cast<unsigned long>(k - 1)), wp);
  }
  if (s % 2) closed = -closed;

  // x = 1 - e^{-t}: int_0^inf t^s e^{-t} / (1 - e^{-t})^k dt, times (-1)^s.
  auto f = [&](const HPReal& t) {
    return exp(s * log(t) - t - k * log(-expm1(-t)));
  };
  quad::QuadOptions opt;
  opt.bits = bits + 8;
  HPReal q = quad::exp_sinh(f, HPReal(wp), opt).value;
  if (s % 2) q = -q;
  return {closed.with_bits(bits), q.with_bits(bits)};
}

namespace {

struct AuxSpec {
  const char* id;
  long j, m;
};
// Stirling side: sum (-1)^{n-1} S1(n,j) / ((n - m) n!) = (-1)^{j-1} sum u(n,j)/(n-m).
constexpr AuxSpec kAux[] = {{"aux_s1_shift1", 1, 1}, {"aux_s1_shift2", 1, 2}, {"aux_s2_shift2", 2, 2},
                            {"aux_s1_shift3", 1, 3}, {"aux_s2_shift3", 2, 3}, {"aux_s3_shift3", 3, 3}};

void check_aux(std::size_t index) {
  if (index >= kAuxiliaryCount) throw DomainError("auxiliary sum index out of range");
}

}  // namespace

std::string auxiliary_sum_id(std::size_t index) {
  check_aux(index);
  return kAux[index].id;
}

std::vector<HPReal> auxiliary_sum_prefix(std::size_t index, long N, long bits) {
  check_aux(index);
  check_N(N);
  const long wp = guard(bits);
  const auto& sp = kAux[index];
  std::vector<HPReal> v(static_cast<std::size_t>(N + 1), HPReal(wp));
  HPReal acc(wp);
  NormalizedColumns u(3, wp);
  for (long n = 1; n <= N; ++n) {
    if (n > 1) u.advance();
    if (n > sp.m) {
      HPReal t = u[sp.j] / (n - sp.m);
      if (sp.j % 2) acc += t;
      else acc -= t;
    }
    v[static_cast<std::size_t>(n)] = acc;
  }
  return finish(std::move(v), bits);
}

HPReal auxiliary_sum_rhs(std::size_t index, long bits) {
  check_aux(index);
  const long wp = guard(bits);
  const HPReal p2 = pi_sq(wp);
  const HPReal one = HPReal::from_long(1, wp);
  HPReal r(wp);
  switch (index) {
    case 0: r = one; break;
    case 1: r = one * 3 / 4; break;
    case 2: r = -(one * 3 / 4) - p2 / 12; break;
    case 3: r = one * 11 / 18; break;
    case 4: r = -(one * 11 / 12) - p2 / 18; break;
    default: r = one * 11 / 36 + p2 / 12 + oracle::zeta(3, wp) / 3; break;
  }
  return r.with_bits(bits);
}

std::vector<AuxiliarySum> auxiliary_sums(long N, long bits) {
  if (N < 4) throw DomainError("auxiliary sums need N >= 4");
  const double L = std::log(static_cast<double>(N));
  const double Nd = static_cast<double>(N);
  const double tails[] = {1 / Nd, 1 / Nd, L / Nd, 1 / Nd, L / Nd, L * L / (2 * Nd)};
  std::vector<AuxiliarySum> out;
  for (std::size_t i = 0; i < kAuxiliaryCount; ++i) {
    out.push_back({kAux[i].id, auxiliary_sum_prefix(i, N, bits).back(), auxiliary_sum_rhs(i, bits), tails[i]});
  }
  return out;
}

}  // namespace ratgamma::identities
