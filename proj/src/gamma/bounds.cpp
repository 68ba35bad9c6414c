#include <algorithm>
#include <cmath>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/gamma_expansions.hpp"
#include "ratgamma/quadrature.hpp"
#include "ratgamma/series_factory.hpp"
#include "ratgamma/special_numbers.hpp"
#include "sweep.hpp"

namespace ratgamma {

namespace {

ComplexHP times_i(const ComplexHP& z) { return ComplexHP(-z.im, z.re); }

detail::WeightSpec first_series_weights(const ComplexHP& z, long wp, bool divide_by_n) {
  const ComplexHP zz(z.re.with_bits(wp), z.im.with_bits(wp));
  return {0, false, reciprocal(zz * HPReal(2 * const_pi(wp))), 0.0, divide_by_n};
}

}  // namespace

HPReal term_upper_bound(const ComplexHP& z, long bits) {
  if (z.re <= 0.25) throw DomainError("term bound integral diverges for Re z <= 1/4");
  const long wp = bits + 16;
  const HPReal x = z.re.with_bits(wp);
  // sqrt(sinh t / t) e^{-2xt} = exp((t + ln(1 - e^{-2t}) - ln 2t)/2 - 2xt), free of overflow.
  auto f = [&](const HPReal& t) {
    HPReal e = t + log(-expm1(-2 * t)) - log(2 * t);
    return exp(ldexp(e, -1) - 2 * x * t);
  };
  quad::QuadOptions opt;
  opt.bits = bits + 8;
  const quad::QuadResult r = quad::exp_sinh(f, HPReal(wp), opt);
  return (r.value / const_pi(wp)).with_bits(bits);
}

ComplexHP general_term(long n, const ComplexHP& z, long bits) {
  if (n < 1) throw DomainError("term index must be >= 1");
  const std::vector<detail::WeightSpec> w{first_series_weights(z, bits + 40, true)};
  const detail::SweepPlan plan = detail::plan_sweep(w, n, bits);
  ComplexHP out(bits);
  detail::run_sweep(w, n, plan, [&](long m, const std::vector<ComplexHP>& inner) {
    if (m == n) out = inner[0] / n;
  });
  return ComplexHP(out.re.with_bits(bits), out.im.with_bits(bits));
}

ComplexHP term_asymptotic(long n, const ComplexHP& z, int order, long bits) {
  if (n < 3) throw DomainError("asymptotic form requires n >= 3");
  if (order < 1) throw DomainError("asymptotic order must be >= 1");
  const long wp = bits + 32;
  const std::vector<HPReal> a = reciprocal_gamma_coeffs(std::max(order, 2), wp);
  const HPReal L = log(HPReal::from_long(n, wp));
  const ComplexHP w = ComplexHP(z.re.with_bits(wp), z.im.with_bits(wp)) * HPReal(2 * const_pi(wp));
  const ComplexHP iL(HPReal(wp), L);
  // (i/2) sum_j a_j (j-1)! [(-i/(2 pi z + i L))^j - (i/(2 pi z - i L))^j] / n^2
  const ComplexHP A = -times_i(reciprocal(w + iL));
  const ComplexHP B = times_i(reciprocal(w - iL));
  ComplexHP Aj = A, Bj = B;
  ComplexHP sum(wp);
  HPReal fact = HPReal::from_long(1, wp);
  for (int j = 1; j <= order; ++j) {
    if (j > 1) {
      fact *= (j - 1);
      Aj *= A;
      Bj *= B;
    }
    sum += (Aj - Bj) * HPReal(a[static_cast<std::size_t>(j)] * fact);
  }
  ComplexHP v = times_i(sum) / HPReal(2 * HPReal::from_long(n, wp) * n);
  return ComplexHP(v.re.with_bits(bits), v.im.with_bits(bits));
}

ComplexHP pi_over_2_identity(const ComplexHP& z, long N, long bits, bool force) {
  const Region r = in_convergence_region(z);
  if (r != Region::Converges && !force) throw RegionError("pi/2 identity at z = " + z.str(12) + ": " + to_string(r));
  const std::vector<detail::WeightSpec> w{first_series_weights(z, bits + 40, false)};
  const detail::SweepPlan plan = detail::plan_sweep(w, N, bits);
  ComplexHP sum(plan.bits);
  detail::run_sweep(w, N, plan, [&](long, const std::vector<ComplexHP>& inner) { sum += inner[0]; });
  return ComplexHP(sum.re.with_bits(bits), sum.im.with_bits(bits));
}

std::vector<HPReal> kx_integral_partial_sums(long N, long bits) {
  if (N < 1) throw DomainError("number of terms must be >= 1");
  const long wp = bits + 16;
  const std::vector<HPReal> A = arctan_arctanh_coeffs_hp(N - 1, wp);
  const HPReal pi = const_pi(wp);
  const HPReal head = ldexp(log(pi), -1);
  std::vector<HPReal> out;
  out.reserve(static_cast<std::size_t>(N));
  HPReal s(wp);
  for (long n = 0; n < N; ++n) {
    s += A[static_cast<std::size_t>(n)] / (2 * n + 1);
    out.push_back((head + s / pi).with_bits(bits));
  }
  return out;
}

HPReal kx_integral_series(long N, long bits) { return kx_integral_partial_sums(N, bits).back(); }

}  // namespace ratgamma
