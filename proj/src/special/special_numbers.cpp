#include "ratgamma/special_numbers.hpp"

#include <string>

#include "ratgamma/core/complex_hp.hpp"
#include "ratgamma/core/errors.hpp"
#include "ratgamma/oracle.hpp"
#include "ratgamma/stirling.hpp"

namespace ratgamma {

namespace {

void check_exact_range(long n, long lo) {
  if (n < lo) throw DomainError("index " + std::to_string(n) + " below " + std::to_string(lo));
  if (n > kExactMax) throw RangeError("index " + std::to_string(n) + " exceeds the exact range " + std::to_string(kExactMax));
}

// sum_l S1(n,l) sign^(n-l) / (l+k) over a common denominator.
Rational stirling_sum(long n, long k, bool unsigned_values) {
  if (k < 1) throw DomainError("shift k must be >= 1");
  check_exact_range(n, 0);
  if (n == 0) return Rational(1, k);
  auto t = shared_triangle(n);
  BigInt lcm = 1;
  for (long d = k + 1; d <= n + k; ++d) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(d));
  BigInt num = 0;
  const auto& row = t->rows[static_cast<std::size_t>(n)];
  for (long l = 1; l <= n; ++l) {
    BigInt v = unsigned_values ? BigInt(abs(row[static_cast<std::size_t>(l)])) : row[static_cast<std::size_t>(l)];
    num += v * (lcm / (l + k));
  }
  return Rational(num, lcm);
}

HPReal ln_n(long n, long bits) { return log(HPReal::from_long(n, bits)); }

}  // namespace

Rational general_sum_unsigned(long n, long k) { return stirling_sum(n, k, true); }
Rational general_sum_signed(long n, long k) { return stirling_sum(n, k, false); }

Rational gregory(long n) {
  check_exact_range(n, 1);
  return general_sum_signed(n, 1) / Rational(factorial(static_cast<unsigned long>(n)));
}

Rational cauchy2(long n) {
  check_exact_range(n, 0);
  return general_sum_unsigned(n, 1);
}

Rational cauchy1(long n) {
  check_exact_range(n, 1);
  return general_sum_signed(n, 1);
}

Rational binet_I(long n) {
  check_exact_range(n, 1);
  return Rational(2) * general_sum_unsigned(n, 2) - general_sum_unsigned(n, 1);
}

Rational binet_Iprime(long n) {
  check_exact_range(n, 1);
  if (n == 1) return Rational(-1, 6);
  const long m = n - 1;
  return -general_sum_unsigned(m, 1) + Rational(3) * general_sum_unsigned(m, 2) - Rational(2) * general_sum_unsigned(m, 3);
}

Rational binet_K(long n) {
  check_exact_range(n, 1);
  return Rational(factorial(static_cast<unsigned long>(n))) - Rational(2) * cauchy2(n);
}

bool recurrence_check(long n_max) {
  check_exact_range(n_max, 1);
  Rational prev = 1;  // C2_0
  for (long n = 1; n <= n_max; ++n) {
    Rational c = cauchy2(n);
    Rational lhs = Rational(n) * prev - c;
    Rational rhs = gregory(n).abs() * Rational(factorial(static_cast<unsigned long>(n)));
    if (lhs != rhs) return false;
    prev = c;
  }
  return true;
}

std::pair<HPReal, HPReal> gregory_bounds(long n, BoundForm form, long bits) {
  const long wp = bits + 16;
  const HPReal g = oracle::euler_gamma(wp);
  if (form == BoundForm::Simple) {
    if (n < 5) throw DomainError("simple Gregory bounds require n >= 5");
    HPReal L = ln_n(n, wp);
    HPReal L2 = L * L;
    HPReal L3 = L2 * L;
    HPReal lead = 1 / (L2 * n);
    HPReal lo = lead - 2 / (L3 * n);
    HPReal hi = lead - 2 * g / (L3 * n);
    return {lo.with_bits(bits), hi.with_bits(bits)};
  }
  if (n < 3) throw DomainError("full Gregory bounds require n >= 3");
  HPReal L = ln_n(n, wp);
  HPReal L2 = L * L;
  HPReal L3 = L2 * L;
  HPReal nn = HPReal::from_long(n, wp);
  HPReal lo = 1 / (nn * L2) - 2 / (nn * L3) + 1 / (nn * nn * L2) + 2 / (nn * nn * L3);
  HPReal M = ln_n(n - 1, wp);
  HPReal M2 = M * M;
  HPReal M3 = M2 * M;
  HPReal M4 = M3 * M;
  HPReal m1 = HPReal::from_long(n - 1, wp);
  HPReal nm = nn * m1;
  HPReal one_g = 1 - g;
  HPReal hi = 1 / (m1 * M2) - 2 * g / (m1 * M3) - 6 * one_g / (m1 * M4) + one_g / (nm * M2) +
              2 * (3 - g) / (nm * M3) + 12 * one_g / (nm * M4);
  return {lo.with_bits(bits), hi.with_bits(bits)};
}

std::pair<HPReal, HPReal> cauchy2_bounds(long n, BoundForm form, long bits) {
  const long wp = bits + 16;
  const HPReal g = oracle::euler_gamma(wp);
  if (form == BoundForm::Simple) {
    if (n < 3) throw DomainError("simple Cauchy bounds require n >= 3");
    HPReal L = ln_n(n, wp);
    HPReal L2 = L * L;
    return {(1 / L - 1 / L2).with_bits(bits), (1 / L - g / L2).with_bits(bits)};
  }
  if (n < 2) throw DomainError("full Cauchy bounds require n >= 2");
  HPReal P = ln_n(n + 1, wp);
  HPReal P2 = P * P;
  HPReal lo = 1 / P - 1 / P2 + 1 / (P2 * (n + 1));
  HPReal L = ln_n(n, wp);
  HPReal L2 = L * L;
  HPReal L3 = L2 * L;
  HPReal one_g = 1 - g;
  HPReal hi = 1 / L - g / L2 - 2 * one_g / L3 + (2 - g) / (L2 * n) + 2 * one_g / (L3 * n);
  return {lo.with_bits(bits), hi.with_bits(bits)};
}

HPReal cauchy2_asymptotic(long n, int order, long bits) {
  if (n < 3) throw DomainError("asymptotic form requires n >= 3");
  if (order < 1 || order > 3) throw DomainError("asymptotic order must be 1, 2 or 3");
  const long wp = bits + 16;
  HPReal L = ln_n(n, wp);
  HPReal g = oracle::euler_gamma(wp);
  HPReal v = 1 / L;
  if (order >= 2) v -= g / (L * L);
  if (order >= 3) {
    HPReal pi = const_pi(wp);
    v -= (pi * pi - 6 * g * g) / (6 * L * L * L);
  }
  return v.with_bits(bits);
}

HPReal gregory_asymptotic(long n, int order, long bits) {
  if (n < 3) throw DomainError("asymptotic form requires n >= 3");
  if (order < 1 || order > 3) throw DomainError("asymptotic order must be 1, 2 or 3");
  const long wp = bits + 16;
  HPReal L = ln_n(n, wp);
  HPReal L2 = L * L;
  HPReal g = oracle::euler_gamma(wp);
  HPReal v = 1 / L2;
  if (order >= 2) v -= 2 * g / (L2 * L);
  if (order >= 3) {
    HPReal pi = const_pi(wp);
    v -= (pi * pi - 6 * g * g) / (2 * L2 * L2);
  }
  v /= n;
  if (n % 2 == 0) v = -v;
  return v.with_bits(bits);
}

std::vector<HPReal> reciprocal_gamma_coeffs(long K, long bits) {
  if (K < 2) throw DomainError("reciprocal_gamma_coeffs requires K >= 2");
  const long wp = bits + 32;
  // 1/Gamma(x) = x exp(L(x)), L(x) = gamma x - sum_{k>=2} (-1)^k zeta(k) x^k / k.
  std::vector<HPReal> L(static_cast<std::size_t>(K), HPReal(wp));
  L[1] = oracle::euler_gamma(wp);
  for (long k = 2; k < K; ++k) {
    HPReal z = oracle::zeta(k, wp) / k;
    L[static_cast<std::size_t>(k)] = (k % 2 == 0) ? -z : z;
  }
  // e = exp(L) via m e_m = sum_{j=1}^{m} j L_j e_{m-j}.
  std::vector<HPReal> e(static_cast<std::size_t>(K), HPReal(wp));
  e[0] = HPReal::from_long(1, wp);
  for (long m = 1; m < K; ++m) {
    HPReal s(wp);
    for (long j = 1; j <= m; ++j) s += L[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(m - j)] * j;
    e[static_cast<std::size_t>(m)] = s / m;
  }
  std::vector<HPReal> a(static_cast<std::size_t>(K + 1), HPReal(bits));
  for (long m = 0; m < K; ++m) a[static_cast<std::size_t>(m + 1)] = e[static_cast<std::size_t>(m)].with_bits(bits);
  return a;
}

std::vector<HPReal> reciprocal_gamma_coeffs_contour(long K, long bits, long nodes) {
  if (K < 2) throw DomainError("reciprocal_gamma_coeffs requires K >= 2");
  if (nodes <= K) throw DomainError("contour rule needs more nodes than coefficients");
  const long wp = bits + 32 + K;
  const HPReal pi = const_pi(wp);
  const HPReal r = HPReal::from_string("0.5", wp);
  // sin(pi x) Gamma(x) at x = 1 + t equals pi / Gamma(-t) = pi sum_k a_k (-t)^k.
  std::vector<ComplexHP> f(static_cast<std::size_t>(nodes));
  std::vector<ComplexHP> w(static_cast<std::size_t>(nodes));
  for (long j = 0; j < nodes; ++j) {
    HPReal theta = 2 * pi * j / nodes;
    w[static_cast<std::size_t>(j)] = ComplexHP(cos(theta), sin(theta));
    ComplexHP x = ComplexHP(HPReal::from_long(1, wp)) + w[static_cast<std::size_t>(j)] * r;
    ComplexHP pix = x * pi;
    ComplexHP s(sin(pix.re) * cosh(pix.im), cos(pix.re) * sinh(pix.im));
    f[static_cast<std::size_t>(j)] = s * exp(oracle::lngamma(x, oracle::default_config(wp)));
  }
  std::vector<HPReal> a(static_cast<std::size_t>(K + 1), HPReal(bits));
  HPReal rk = HPReal::from_long(1, wp);
  for (long k = 0; k <= K; ++k) {
    ComplexHP c(wp);
    for (long j = 0; j < nodes; ++j) {
      // w_j^-k = conj(w_{jk mod nodes})
      c += f[static_cast<std::size_t>(j)] * conj(w[static_cast<std::size_t>((j * k) % nodes)]);
    }
    HPReal v = c.re / (rk * nodes * pi);
    if (k % 2) v = -v;
    a[static_cast<std::size_t>(k)] = v.with_bits(bits);
    rk *= r;
  }
  return a;
}

}  // namespace ratgamma
