#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/oracle.hpp"
#include "ratgamma/quadrature.hpp"
#include "ratgamma/special_numbers.hpp"

namespace ratgamma {

namespace {

// Coefficient sequences of
//   F_1 = z/ln(1+z),          F_{k+1} = [(1 + z - k F_k)/z] F_1          (signed)
//   Fbar_1 = Q/(1-z),         Fbar_{k+1} = [(1/(1-z) - k Fbar_k)/z] Q     (unsigned)
// with Q = z/(-ln(1-z)) = 1 - sum |G_n| z^n. Both follow from integrating
// t^{k-1} e^t by parts. Sequences only grow, so the deques keep references stable.
struct SeqKey {
  bool is_signed;
  long k;
  long bits;
  bool operator<(const SeqKey& o) const { return std::tie(is_signed, k, bits) < std::tie(o.is_signed, o.k, o.bits); }
};

class SequenceCache {
 public:
  static SequenceCache& shared() {
    static SequenceCache c;
    return c;
  }

  std::shared_ptr<const std::vector<HPReal>> prefix(bool is_signed, long k, long N, long bits) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& seq = ensure(is_signed, k, N, bits);
    auto out = std::make_shared<std::vector<HPReal>>();
    out->reserve(static_cast<std::size_t>(N + 1));
    for (long n = 0; n <= N; ++n) out->push_back(seq[static_cast<std::size_t>(n)].with_bits(bits));
    return out;
  }

  HPReal value(bool is_signed, long k, long n, long bits) {
    std::lock_guard<std::mutex> lock(mu_);
    return ensure(is_signed, k, n, bits)[static_cast<std::size_t>(n)].with_bits(bits);
  }

 private:
  static long working_bits(long bits) { return bits + 40; }

  std::deque<HPReal>& ensure(bool is_signed, long k, long N, long bits) {
    if (k < 1) throw DomainError("shift k must be >= 1");
    if (N < 0) throw DomainError("sequence length must be non-negative");
    auto& seq = seqs_[SeqKey{is_signed, k, bits}];
    const long have = static_cast<long>(seq.size()) - 1;
    if (have >= N) return seq;
    const long wp = working_bits(bits);
    // Base series: Gregory coefficients (signed) or Q (unsigned).
    auto& base = base_series(N, bits);
    if (k == 1) {
      if (is_signed) {
        for (long n = have + 1; n <= N; ++n) seq.push_back(base[static_cast<std::size_t>(n)]);
      } else {
        HPReal run = seq.empty() ? HPReal(wp) : seq.back();
        for (long n = have + 1; n <= N; ++n) {
          // Prefix sum of Q: 1 - sum_{j<=n} |G_j|.
          run += q_coeff(base, n, wp);
          seq.push_back(run);
        }
      }
      return seq;
    }
    auto& prev = ensure(is_signed, k - 1, N + 1, bits);
    auto& seq_again = seqs_[SeqKey{is_signed, k, bits}];
    // h_j = [z^{j+1}] (1 + z - (k-1) F_{k-1})  or  (1/(1-z) - (k-1) Fbar_{k-1})
    std::vector<HPReal> h;
    h.reserve(static_cast<std::size_t>(N + 1));
    for (long j = 0; j <= N; ++j) {
      HPReal v = prev[static_cast<std::size_t>(j + 1)] * (-(k - 1));
      if (!is_signed || j == 0) v += 1;
      h.push_back(std::move(v));
    }
    if (!is_signed) q_at(base, N, wp);
    const auto& b = is_signed ? base : q_[wp];
    HPReal term(wp);
    for (long n = have + 1; n <= N; ++n) {
      HPReal acc(wp);
      for (long j = 0; j <= n; ++j) {
        mpfr_mul(term.get(), h[static_cast<std::size_t>(j)].get(), b[static_cast<std::size_t>(n - j)].get(), MPFR_RNDN);
        mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
      }
      seq_again.push_back(acc);
    }
    return seq_again;
  }

  // Gregory coefficients G_0..G_N from G_n = -sum_{j=1}^{n} (-1)^j G_{n-j}/(j+1).
  std::deque<HPReal>& base_series(long N, long bits) {
    auto& g = gregory_[bits];
    const long wp = working_bits(bits);
    if (g.empty()) g.push_back(HPReal::from_long(1, wp));
    auto& recip = recip_[bits];
    while (static_cast<long>(recip.size()) <= N + 1) {
      const long j = static_cast<long>(recip.size());
      HPReal r = 1 / HPReal::from_long(j + 1, wp);
      if (j % 2) r = -r;
      recip.push_back(r);
    }
    HPReal term(wp);
    for (long n = static_cast<long>(g.size()); n <= N; ++n) {
      HPReal acc(wp);
      for (long j = 1; j <= n; ++j) {
        mpfr_mul(term.get(), recip[static_cast<std::size_t>(j)].get(), g[static_cast<std::size_t>(n - j)].get(), MPFR_RNDN);
        mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
      }
      g.push_back(-acc);
    }
    return g;
  }

  static HPReal q_coeff(const std::deque<HPReal>& g, long n, long wp) {
    if (n == 0) return HPReal::from_long(1, wp);
    return n % 2 ? -g[static_cast<std::size_t>(n)] : g[static_cast<std::size_t>(n)];
  }

  const HPReal& q_at(const std::deque<HPReal>& g, long n, long wp) {
    auto& q = q_[wp];
    while (static_cast<long>(q.size()) <= n) q.push_back(q_coeff(g, static_cast<long>(q.size()), wp));
    return q[static_cast<std::size_t>(n)];
  }

  std::mutex mu_;
  std::map<SeqKey, std::deque<HPReal>> seqs_;
  std::map<long, std::deque<HPReal>> gregory_;
  std::map<long, std::deque<HPReal>> recip_;
  std::map<long, std::deque<HPReal>> q_;
};

// exp(lnGamma(a + x) - lnGamma(n + 1)) / Gamma(x), the common integrand factor.
HPReal gamma_ratio(long a, const HPReal& x, const HPReal& lg_n1, long wp) {
  HPReal xw = x.with_bits(wp);
  HPReal lg = oracle::lngamma(xw + a);
  return exp(lg - lg_n1) * oracle::rgamma(xw);
}

long quad_bits(long n, long bits) {
  return bits + 32 + static_cast<long>(std::ceil(std::log2(static_cast<double>(n) * std::log(static_cast<double>(n)) + 2)));
}

}  // namespace

std::shared_ptr<const std::vector<HPReal>> signed_sum_series(long k, long N, long bits) {
  return SequenceCache::shared().prefix(true, k, N, bits);
}

std::shared_ptr<const std::vector<HPReal>> unsigned_sum_series(long k, long N, long bits) {
  return SequenceCache::shared().prefix(false, k, N, bits);
}

HPReal gregory_hp(long n, long bits) {
  if (n < 1) throw DomainError("gregory_hp requires n >= 1");
  if (n <= kConvolutionMax) return SequenceCache::shared().value(true, 1, n, bits);
  return gregory_integral(n, bits);
}

HPReal gregory_integral(long n, long bits) {
  if (n < 2) throw DomainError("gregory_integral requires n >= 2");
  // |G_n| = (1/n!) int_0^1 (1-x) Gamma(n-1+x)/Gamma(x) dx.
  const long wp = quad_bits(n, bits);
  const HPReal lg_n1 = oracle::lngamma(HPReal::from_long(n + 1, wp));
  HPReal v = quad::integrate(
      [&](const HPReal& x) { return HPReal((1 - x) * gamma_ratio(n - 1, x, lg_n1, wp)); }, HPReal(wp),
      HPReal::from_long(1, wp), bits + 8);
  if (n % 2 == 0) v = -v;
  return v.with_bits(bits);
}

HPReal cauchy2_ratio_hp(long n, long bits) {
  if (n < 0) throw DomainError("cauchy2_ratio_hp requires n >= 0");
  if (n <= kConvolutionMax) return SequenceCache::shared().value(false, 1, n, bits);
  return cauchy2_ratio_integral(n, bits);
}

HPReal cauchy2_ratio_integral(long n, long bits) {
  if (n < 1) throw DomainError("cauchy2_ratio_integral requires n >= 1");
  // C2_n/n! = (1/n!) int_0^1 Gamma(x+n)/Gamma(x) dx.
  const long wp = quad_bits(n, bits);
  const HPReal lg_n1 = oracle::lngamma(HPReal::from_long(n + 1, wp));
  HPReal v = quad::integrate([&](const HPReal& x) { return gamma_ratio(n, x, lg_n1, wp); }, HPReal(wp),
                             HPReal::from_long(1, wp), bits + 8);
  return v.with_bits(bits);
}

}  // namespace ratgamma
