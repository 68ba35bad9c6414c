#include "sweep.hpp"

#include <algorithm>
#include <cmath>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/stirling.hpp"

namespace ratgamma::detail {

namespace {

double log_abs(const ComplexHP& z) {
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, abs(z).get(), MPFR_RNDN);
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

// log |c_l| for l = 0..L.
std::vector<double> log_weights(const WeightSpec& w, long L) {
  std::vector<double> out(static_cast<std::size_t>(L + 1));
  const double lx = log_abs(w.x);
  for (long l = 0; l <= L; ++l) {
    const double k = static_cast<double>(2 * l + 1);
    double v = std::lgamma(static_cast<double>(2 * l + w.s + 1)) + k * lx;
    if (w.twofold) v += k * std::log(2.0) + std::log1p(-std::exp2(-k));
    out[static_cast<std::size_t>(l)] = v;
  }
  return out;
}

}  // namespace

SweepPlan plan_sweep(const std::vector<WeightSpec>& specs, long N, long bits) {
  if (N < 1) throw DomainError("number of terms must be >= 1");
  const long L = (N - 1) / 2;
  std::vector<std::vector<double>> logc;
  for (const auto& w : specs) logc.push_back(log_weights(w, L));
  const double cut = -static_cast<double>(bits + 40) * std::log(2.0);

  SweepPlan plan;
  plan.target_bits = bits;
  plan.last_column.assign(static_cast<std::size_t>(N + 1), 0);
  double peak = 0.0;
  long kmax = 1;
  LogRowSweep u(N);
  for (long n = 1; n <= N; ++n) {
    if (n > 1) u.advance();
    const double ln_n = std::log(static_cast<double>(n));
    long last = 1;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const double base = specs[i].log_scale - (specs[i].divide_by_n ? ln_n : 0.0);
      for (long k = 1; k <= n; k += 2) {
        const double m = logc[i][static_cast<std::size_t>((k - 1) / 2)] + u[k] + base;
        if (m > cut) last = std::max(last, k);
        peak = std::max(peak, m);
      }
    }
    plan.last_column[static_cast<std::size_t>(n)] = last;
    kmax = std::max(kmax, last);
  }
  plan.columns = kmax;
  plan.bits = bits + 40 + static_cast<long>(std::ceil(peak / std::log(2.0))) +
              static_cast<long>(std::ceil(std::log2(static_cast<double>(N) + 1))) +
              2 * static_cast<long>(std::ceil(std::log2(static_cast<double>(kmax) + 1)));
  return plan;
}

void run_sweep(const std::vector<WeightSpec>& specs, long N, const SweepPlan& plan,
               const std::function<void(long, const std::vector<ComplexHP>&)>& visit) {
  const long P = plan.bits;
  const long K = plan.columns;
  const long L = (K - 1) / 2;

  // Weights at the sweep precision; imaginary parts only when some x is complex.
  bool complex_weights = false;
  std::vector<std::vector<HPReal>> cre(specs.size()), cim(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& w = specs[i];
    ComplexHP x(w.x.re.with_bits(P), w.x.im.with_bits(P));
    if (!x.is_real()) complex_weights = true;
    const ComplexHP x2 = x * x;
    ComplexHP xp = x;
    HPReal f = HPReal::from_bigint(factorial(static_cast<unsigned long>(w.s)), P);
    for (long l = 0; l <= L; ++l) {
      if (l > 0) {
        f *= (2 * l + w.s - 1);
        f *= (2 * l + w.s);
        xp *= x2;
      }
      HPReal g = HPReal::from_long(1, P);
      if (w.twofold) g = ldexp(g, 2 * l + 1) - 1;
      ComplexHP c = xp * HPReal(f * g);
      if (l % 2) c = -c;
      cre[i].push_back(c.re);
      cim[i].push_back(c.im);
    }
  }

  // Each product only needs enough bits to be accurate to 2^-(bits+40)/K in
  // absolute terms; MPFR computes short products when the target precision is
  // below the operand precision. Temporaries are bucketed by 64 bits.
  std::vector<std::vector<double>> logc;
  for (const auto& w : specs) logc.push_back(log_weights(w, L));
  const double inv_ln2 = 1.0 / std::log(2.0);
  const double base = static_cast<double>(plan.target_bits + 40) + std::log2(static_cast<double>(K) + 1);
  const long buckets = (P + 63) / 64;
  std::vector<HPReal> tmp;
  for (long b = 1; b <= buckets; ++b) tmp.emplace_back(std::min(P, 64 * b));

  UnsignedRowSweep row(K, P);
  LogRowSweep lu(K);
  std::vector<ComplexHP> inner(specs.size(), ComplexHP(P));
  HPReal acc_re(P), acc_im(P);
  for (long n = 1; n <= N; ++n) {
    if (n > 1) {
      row.advance();
      lu.advance();
    }
    const double ln_n = std::log(static_cast<double>(n));
    const long top = std::min({n, K, plan.last_column[static_cast<std::size_t>(n)]});
    for (std::size_t i = 0; i < specs.size(); ++i) {
      mpfr_set_zero(acc_re.get(), 1);
      mpfr_set_zero(acc_im.get(), 1);
      const double shift = specs[i].log_scale - (specs[i].divide_by_n ? ln_n : 0.0);
      for (long k = 1; k <= top; k += 2) {
        const std::size_t l = static_cast<std::size_t>((k - 1) / 2);
        const double mag = (logc[i][l] + lu[k] + shift) * inv_ln2;
        long b = static_cast<long>(std::ceil((base + std::max(mag, 0.0)) / 64.0));
        b = std::clamp(b, 1L, buckets);
        HPReal& t = tmp[static_cast<std::size_t>(b - 1)];
        mpfr_mul(t.get(), cre[i][l].get(), row[k].get(), MPFR_RNDN);
        mpfr_add(acc_re.get(), acc_re.get(), t.get(), MPFR_RNDN);
        if (complex_weights) {
          mpfr_mul(t.get(), cim[i][l].get(), row[k].get(), MPFR_RNDN);
          mpfr_add(acc_im.get(), acc_im.get(), t.get(), MPFR_RNDN);
        }
      }
      mpfr_div(inner[i].re.get(), acc_re.get(), row.factorial().get(), MPFR_RNDN);
      mpfr_div(inner[i].im.get(), acc_im.get(), row.factorial().get(), MPFR_RNDN);
    }
    visit(n, inner);
  }
}

}  // namespace ratgamma::detail
