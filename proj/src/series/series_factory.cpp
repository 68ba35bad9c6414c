#include "ratgamma/series_factory.hpp"

#include <functional>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/core/tables.hpp"
#include "ratgamma/special_numbers.hpp"
#include "ratgamma/stirling.hpp"

namespace ratgamma {

namespace {

struct TagName {
  CompositeTag tag;
  const char* name;
};

constexpr TagName kNames[] = {
    {CompositeTag::COSH_LN, "COSH_LN"},
    {CompositeTag::SINH_LN, "SINH_LN"},
    {CompositeTag::COS_LN, "COS_LN"},
    {CompositeTag::SIN_LN, "SIN_LN"},
    {CompositeTag::LN_1P_LN, "LN_1P_LN"},
    {CompositeTag::INV_LOG_POW, "INV_LOG_POW"},
    {CompositeTag::LOGPOW_OVER_1PZ, "LOGPOW_OVER_1PZ"},
    {CompositeTag::ARCTAN_LN, "ARCTAN_LN"},
    {CompositeTag::ARCTANH_LN, "ARCTANH_LN"},
    {CompositeTag::ARCTANH_POW, "ARCTANH_POW"},
    {CompositeTag::TAN_LN, "TAN_LN"},
    {CompositeTag::TANH_LN, "TANH_LN"},
    {CompositeTag::ARCTAN_ARCTANH, "ARCTAN_ARCTANH"},
};

void validate(const CompositeKind& k) {
  switch (k.tag) {
    case CompositeTag::INV_LOG_POW:
      if (k.m < 2) throw DomainError("INV_LOG_POW requires m >= 2");
      break;
    case CompositeTag::LOGPOW_OVER_1PZ:
      if (k.m < 0) throw DomainError("LOGPOW_OVER_1PZ requires m >= 0");
      break;
    case CompositeTag::ARCTANH_POW:
      if (k.m < 1) throw DomainError("ARCTANH_POW requires m >= 1");
      break;
    default:
      break;
  }
}

// 2^{2l+1} (2^{2l+2} - 1) |B_{2l+2}| / (l+1): the (2l+1)-th derivative of tan at 0.
Rational tan_weight(long l) {
  BigInt p2 = 1;
  p2 <<= static_cast<mp_bitcnt_t>(2 * l + 1);
  BigInt p4 = 1;
  p4 <<= static_cast<mp_bitcnt_t>(2 * l + 2);
  return Rational(BigInt(p2 * (p4 - 1))) * bernoulli(2 * l + 2).abs() / Rational(l + 1);
}

// l-th derivative at 0 of the outer function f, so that
// f(ln(1+z)) = sum_n z^n/n! sum_l w(l) S1(n,l).
Rational outer_weight(CompositeTag tag, long l) {
  const bool even = l % 2 == 0;
  const long h = l / 2;
  switch (tag) {
    case CompositeTag::COSH_LN:
      return even ? Rational(1) : Rational(0);
    case CompositeTag::SINH_LN:
      return even ? Rational(0) : Rational(1);
    case CompositeTag::COS_LN:
      return even ? Rational(h % 2 ? -1 : 1) : Rational(0);
    case CompositeTag::SIN_LN:
      return even ? Rational(0) : Rational(h % 2 ? -1 : 1);
    case CompositeTag::LN_1P_LN:
      if (l == 0) return Rational(0);
      return Rational(factorial(static_cast<unsigned long>(l - 1))) * Rational(l % 2 ? 1 : -1);
    case CompositeTag::ARCTAN_LN:
      return even ? Rational(0) : Rational(factorial(static_cast<unsigned long>(2 * h))) * Rational(h % 2 ? -1 : 1);
    case CompositeTag::ARCTANH_LN:
      return even ? Rational(0) : Rational(factorial(static_cast<unsigned long>(2 * h)));
    case CompositeTag::TAN_LN:
      return even ? Rational(0) : tan_weight(h);
    case CompositeTag::TANH_LN:
      return even ? Rational(0) : tan_weight(h) * Rational(h % 2 ? -1 : 1);
    default:
      throw std::logic_error("outer_weight: not a column-weight kind");
  }
}

// Unified engine: coeffs[n] = (1/n!) sum_{l=0}^{n} w(l) S1(n,l).
std::vector<Rational> column_sum(const std::function<Rational(long)>& w, long N) {
  auto t = shared_triangle(N);
  std::vector<Rational> w_cache;
  w_cache.reserve(static_cast<std::size_t>(N + 1));
  for (long l = 0; l <= N; ++l) w_cache.push_back(w(l));
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(N + 1));
  BigInt fact = 1;
  for (long n = 0; n <= N; ++n) {
    if (n > 0) fact *= n;
    Rational s(0);
    const auto& row = t->rows[static_cast<std::size_t>(n)];
    for (long l = 0; l <= n; ++l) {
      const Rational& wl = w_cache[static_cast<std::size_t>(l)];
      if (wl.is_zero() || row[static_cast<std::size_t>(l)] == 0) continue;
      s += wl * Rational(row[static_cast<std::size_t>(l)]);
    }
    out.push_back(s / Rational(fact));
  }
  return out;
}

// 1/ln^m(1+z) from
//   L_j = (1/z) sum_{k=1}^{j-1} L_{j-k}/k! + 1/(j! z) + sum_{n>=1} z^{n-1}/n! sum_l S1(n,l)/(l+1)_j,
// starting from L_1 = 1/z + sum_{n>=1} G_n z^{n-1}.
void inverse_log_power(long m, long N, CoeffSeries& out) {
  auto t = shared_triangle(N + m + 1);
  // L[j] holds powers -j .. N + m - j, stored with offset j.
  std::vector<std::vector<Rational>> L(static_cast<std::size_t>(m + 1));
  auto at = [&](long j, long p) -> Rational {
    if (p < -j) return Rational(0);
    return L[static_cast<std::size_t>(j)][static_cast<std::size_t>(p + j)];
  };
  for (long j = 1; j <= m; ++j) {
    const long top = N + m - j;
    auto& v = L[static_cast<std::size_t>(j)];
    v.assign(static_cast<std::size_t>(top + j + 1), Rational(0));
    for (long p = -j; p <= top; ++p) {
      Rational c(0);
      if (j == 1) {
        c = (p == -1) ? Rational(1) : (p >= 0 ? gregory(p + 1) : Rational(0));
      } else {
        for (long k = 1; k <= j - 1; ++k) c += at(j - k, p + 1) / Rational(factorial(static_cast<unsigned long>(k)));
        if (p == -1) c += Rational(1) / Rational(factorial(static_cast<unsigned long>(j)));
        if (p >= 0) {
          const long n = p + 1;
          Rational s(0);
          const auto& row = t->rows[static_cast<std::size_t>(n)];
          for (long l = 1; l <= n; ++l) {
            BigInt rising = 1;
            for (long i = 1; i <= j; ++i) rising *= l + i;
            s += Rational(row[static_cast<std::size_t>(l)], rising);
          }
          c += s / Rational(factorial(static_cast<unsigned long>(n)));
        }
      }
      v[static_cast<std::size_t>(p + j)] = c;
    }
  }
  for (long p = -m; p < 0; ++p) {
    Rational c = at(m, p);
    if (!c.is_zero()) out.laurent_head.emplace_back(p, c);
  }
  out.coeffs.clear();
  for (long p = 0; p <= N; ++p) out.coeffs.push_back(at(m, p));
}

std::vector<Rational> arctanh_power(long m, long N) {
  auto t = shared_triangle(N);
  std::vector<Rational> out(static_cast<std::size_t>(N + 1), Rational(0));
  for (long n = m; n <= N; ++n) {
    Rational s(0);
    for (long l = m; l <= n; ++l) {
      BigInt num = binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(l - 1)) *
                   t->rows[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)];
      num <<= static_cast<mp_bitcnt_t>(l - m);
      s += Rational(num, factorial(static_cast<unsigned long>(l)));
    }
    out[static_cast<std::size_t>(n)] = s;
  }
  return out;
}

}  // namespace

std::string CompositeKind::name() const {
  for (const auto& e : kNames) {
    if (e.tag == tag) return e.name;
  }
  return "UNKNOWN";
}

CompositeKind CompositeKind::parse(const std::string& name, long m) {
  for (const auto& e : kNames) {
    if (name == e.name) return CompositeKind{e.tag, m};
  }
  throw DomainError("unknown series kind: " + name);
}

HPReal CoeffSeries::evaluate(const HPReal& z) const {
  const long wp = z.bits() + 16;
  HPReal zw = z.with_bits(wp);
  HPReal acc(wp);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * zw + HPReal::from_rational(*it, wp);
  for (const auto& [p, c] : laurent_head) acc += HPReal::from_rational(c, wp) * pow(zw, p);
  return acc.with_bits(z.bits());
}

CoeffSeries expand(const CompositeKind& kind, long N) {
  validate(kind);
  if (N < 1) throw DomainError("expand requires N >= 1");
  CoeffSeries out{kind, {}, radius(kind), {}};
  switch (kind.tag) {
    case CompositeTag::INV_LOG_POW:
      inverse_log_power(kind.m, N, out);
      break;
    case CompositeTag::LOGPOW_OVER_1PZ: {
      // Derivative of ln^{m+1}(1+z)/(m+1): coefficient m! S1(n+1, m+1)/n!.
      auto t = shared_triangle(N + 1);
      const BigInt mf = factorial(static_cast<unsigned long>(kind.m));
      for (long n = 0; n <= N; ++n) {
        const long row = n + 1;
        BigInt s = kind.m + 1 <= row ? t->rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(kind.m + 1)] : BigInt(0);
        out.coeffs.push_back(Rational(mf * s, factorial(static_cast<unsigned long>(n))));
      }
      break;
    }
    case CompositeTag::ARCTANH_POW:
      out.coeffs = arctanh_power(kind.m, N);
      break;
    case CompositeTag::ARCTAN_ARCTANH: {
      auto A = arctan_arctanh_coeffs((N - 1) / 2);
      out.coeffs.assign(static_cast<std::size_t>(N + 1), Rational(0));
      for (std::size_t i = 0; i < A.size(); ++i) out.coeffs[2 * i + 1] = A[i];
      break;
    }
    default: {
      const CompositeTag tag = kind.tag;
      out.coeffs = column_sum([tag](long l) { return outer_weight(tag, l); }, N);
      break;
    }
  }
  return out;
}

HPReal radius(const CompositeKind& kind, long bits) {
  validate(kind);
  HPReal one = HPReal::from_long(1, bits);
  switch (kind.tag) {
    case CompositeTag::LN_1P_LN:
    case CompositeTag::ARCTANH_LN:
      return one - exp(-one);
    case CompositeTag::ARCTAN_LN:
      return 2 * sin(ldexp(one, -1));
    case CompositeTag::TAN_LN:
      return one - exp(-ldexp(const_pi(bits), -1));
    case CompositeTag::TANH_LN:
      return sqrt(HPReal::from_long(2, bits));
    default:
      return one;
  }
}

HPReal composite_value(const CompositeKind& kind, const HPReal& z) {
  validate(kind);
  const long wp = z.bits() + 16;
  HPReal zw = z.with_bits(wp);
  HPReal L = log1p(zw);
  HPReal v(wp);
  switch (kind.tag) {
    case CompositeTag::COSH_LN: v = cosh(L); break;
    case CompositeTag::SINH_LN: v = sinh(L); break;
    case CompositeTag::COS_LN: v = cos(L); break;
    case CompositeTag::SIN_LN: v = sin(L); break;
    case CompositeTag::LN_1P_LN: v = log1p(L); break;
    case CompositeTag::INV_LOG_POW: v = 1 / pow(L, kind.m); break;
    case CompositeTag::LOGPOW_OVER_1PZ: v = pow(L, kind.m) / (1 + zw); break;
    case CompositeTag::ARCTAN_LN: v = atan(L); break;
    case CompositeTag::ARCTANH_LN: v = atanh(L); break;
    case CompositeTag::ARCTANH_POW:
      v = pow(atanh(zw), kind.m) / HPReal::from_bigint(factorial(static_cast<unsigned long>(kind.m)), wp);
      break;
    case CompositeTag::TAN_LN: v = tan(L); break;
    case CompositeTag::TANH_LN: v = tanh(L); break;
    case CompositeTag::ARCTAN_ARCTANH: v = atan(atanh(zw)); break;
  }
  return v.with_bits(z.bits());
}

std::vector<Rational> arctan_arctanh_coeffs(long n_max) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  auto t = shared_triangle(2 * n_max + 1);
  // Inner sums over l depend only on k: sum_l (-1)^l (2l)! S1(k,2l+1)/2^{2l+1}.
  std::vector<Rational> inner(static_cast<std::size_t>(2 * n_max + 2), Rational(0));
  for (long k = 1; k <= 2 * n_max + 1; ++k) {
    Rational s(0);
    for (long l = 0; 2 * l + 1 <= k; ++l) {
      BigInt den = 1;
      den <<= static_cast<mp_bitcnt_t>(2 * l + 1);
      Rational term(factorial(static_cast<unsigned long>(2 * l)) * t->rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(2 * l + 1)], den);
      if (l % 2) s -= term; else s += term;
    }
    inner[static_cast<std::size_t>(k)] = s;
  }
  std::vector<Rational> A;
  A.reserve(static_cast<std::size_t>(n_max + 1));
  for (long n = 0; n <= n_max; ++n) {
    Rational s(0);
    for (long k = 1; k <= 2 * n + 1; ++k) {
      BigInt p2 = 1;
      p2 <<= static_cast<mp_bitcnt_t>(k);
      s += Rational(binomial(static_cast<unsigned long>(2 * n), static_cast<unsigned long>(k - 1)) * p2,
                    factorial(static_cast<unsigned long>(k))) *
           inner[static_cast<std::size_t>(k)];
    }
    A.push_back(s);
  }
  return A;
}

std::vector<HPReal> arctan_arctanh_coeffs_hp(long n_max, long bits) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  const long wp = bits + 64;
  const std::size_t M = static_cast<std::size_t>(n_max + 1);
  std::vector<HPReal> P;
  P.reserve(M);
  for (std::size_t j = 0; j < M; ++j) P.push_back(1 / HPReal::from_long(static_cast<long>(2 * j + 1), wp));
  // D = 1 + y P^2
  std::vector<HPReal> D(M, HPReal(wp));
  D[0] = HPReal::from_long(1, wp);
  HPReal term(wp);
  for (std::size_t j = 1; j < M; ++j) {
    HPReal acc(wp);
    for (std::size_t i = 0; i <= j - 1; ++i) {
      mpfr_mul(term.get(), P[i].get(), P[j - 1 - i].get(), MPFR_RNDN);
      mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
    }
    D[j] = acc;
  }
  // Q = 1/D
  std::vector<HPReal> Q(M, HPReal(wp));
  Q[0] = HPReal::from_long(1, wp);
  for (std::size_t m = 1; m < M; ++m) {
    HPReal acc(wp);
    for (std::size_t j = 1; j <= m; ++j) {
      mpfr_mul(term.get(), D[j].get(), Q[m - j].get(), MPFR_RNDN);
      mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
    }
    Q[m] = -acc;
  }
  // Dividing by (1 - y) is a prefix sum; integrating x^{2m} gives 1/(2m+1).
  std::vector<HPReal> A;
  A.reserve(M);
  HPReal R(wp);
  for (std::size_t m = 0; m < M; ++m) {
    R += Q[m];
    A.push_back((R / static_cast<long>(2 * m + 1)).with_bits(bits));
  }
  return A;
}

std::vector<Rational> cayley_lnln_series(long N) {
  if (N < 1) throw DomainError("cayley_lnln_series requires N >= 1");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(N));
  for (long n = 1; n <= N; ++n) {
    Rational t = cauchy2(n) / Rational(BigInt(factorial(static_cast<unsigned long>(n)) * n));
    out.push_back(n % 2 ? -t : t);
  }
  return out;
}

}  // namespace ratgamma
