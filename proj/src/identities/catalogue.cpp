#include <algorithm>
#include <cmath>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/identity_suite.hpp"
#include "ratgamma/oracle.hpp"

namespace ratgamma::identities {

namespace {

double ln(long N) { return std::log(static_cast<double>(N)); }

// Tail of sum_{n>N} C ln^a n / n^{p+1}, leading order: C ln^a N / (p N^p).
std::function<double(long)> tail(double C, double p, double a) {
  return [=](long N) { return C * std::pow(ln(N), a) / (p * std::pow(static_cast<double>(N), p)); };
}

// Tail of sum_{n>N} (1/n^2) int_0^1 x^k n^{-x} / Gamma(1-x) dx, the large-n form
// of (-1)^{n-1}/(n n!) sum_l S1(n,l)/(l+k): (1/N) int_0^1 x^k N^{-x} / ((1+x) Gamma(1-x)) dx.
// Its leading order is k!/(N ln^{k+1} N), but the 1/ln N correction is large for k >= 4.
double stirling_weight_tail(long k, long N) {
  const double L = ln(N);
  const int m = 2000;  // Simpson panels
  const double h = 1.0 / m;
  auto f = [&](double x) {
    return std::pow(x, static_cast<double>(k)) * std::exp(-x * L) / ((1 + x) * std::tgamma(1 - x));
  };
  double s = f(0) + f(1);
  for (int i = 1; i < m; ++i) s += (i % 2 ? 4 : 2) * f(i * h);
  return s * h / 3 / static_cast<double>(N);
}

IdentityCase make(std::string id, std::string description, std::string decay,
                  std::function<std::vector<HPReal>(long, long)> prefix, std::function<HPReal(long)> rhs, double C,
                  double p, double a) {
  IdentityCase c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.decay_class = std::move(decay);
  c.prefix = std::move(prefix);
  c.rhs = std::move(rhs);
  c.tail_estimate = tail(C, p, a);
  c.poly_exponent = -p;
  c.log_exponent = a;
  return c;
}

std::vector<IdentityCase> build() {
  std::vector<IdentityCase> out;

  for (long k = 1; k <= 3; ++k) {
    out.push_back(make("zeta_k" + std::to_string(k), "sum |S1(n,k)|/(n n!) = zeta(k+1)",
                       "ln^" + std::to_string(k - 1) + " n / n^2",
                       [k](long N, long b) { return zeta_from_stirling_prefix(k, N, b); },
                       [k](long b) { return oracle::zeta(k + 1, b); }, 1.0 / std::tgamma(static_cast<double>(k)), 1.0,
                       static_cast<double>(k - 1)));
  }
  out.push_back(make("hurwitz_k1_v2", "sum |S1(n,1)|/(n (2)_n) = zeta(2,2)", "n^-3",
                     [](long N, long b) { return hurwitz_from_stirling_prefix(1, Rational(2), N, b); },
                     [](long b) { return oracle::hurwitz_zeta(HPReal::from_long(2, b), HPReal::from_long(2, b)); },
                     1.0, 2.0, 0.0));
  out.push_back(make("hurwitz_k2_v1/2", "sum |S1(n,2)|/(n (1/2)_n) = zeta(3,1/2)", "ln n / n^1.5",
                     [](long N, long b) { return hurwitz_from_stirling_prefix(2, Rational(1, 2), N, b); },
                     [](long b) {
                       return oracle::hurwitz_zeta(HPReal::from_long(3, b), HPReal::from_long(1, b) / 2);
                     },
                     std::sqrt(M_PI), 0.5, 1.0));

  for (long k = -3; k <= 3; ++k) {
    out.push_back(make("gregory_shifted_" + std::to_string(k), "sum |G_n|/(n+k)", "n^-2 ln^-2 n",
                       [k](long N, long b) { return gregory_shifted_prefix(k, N, b); },
                       [k](long b) { return gregory_shifted_closed(k, b); }, 1.0, 1.0, -2.0));
  }
  out.push_back(make("fontana_unit", "sum |G_n| = 1", "n^-1 ln^-2 n", fontana_unit_prefix,
                     [](long b) { return HPReal::from_long(1, b); }, 1.0, 0.0, -1.0));
  // p = 0: the tail is 1/ln N, so override the generic form.
  out.back().tail_estimate = [](long N) { return 1.0 / ln(N); };
  out.push_back(make("reciprocal_ln2", "1 + sum G_n = 1/ln 2", "alternating n^-1 ln^-2 n", reciprocal_ln2_prefix,
                     [](long b) { return 1 / const_log2(b); }, 1.0, 1.0, -2.0));
  out.back().tail_estimate = [](long N) { return 1.0 / (static_cast<double>(N) * ln(N) * ln(N)); };
  out.push_back(make("lnln2", "sum (-1)^n C2_n/(n n!) = ln ln 2", "alternating n^-1 ln^-1 n", lnln2_prefix,
                     [](long b) { return log(const_log2(b)); }, 1.0, 1.0, -1.0));
  out.back().tail_estimate = [](long N) { return 1.0 / (static_cast<double>(N) * ln(N)); };

  for (long k = 2; k <= 5; ++k) {
    out.push_back(make("sum_l_plus_k" + std::to_string(k), "sum (-1)^{n-1}/(n n!) sum S1(n,l)/(l+k)",
                       "n^-2 ln^-" + std::to_string(k + 1) + " n",
                       [k](long N, long b) { return sum_l_plus_k_prefix(k, N, b); },
                       [k](long b) { return sum_l_plus_k_rhs(k, b); }, std::tgamma(static_cast<double>(k + 1)), 1.0,
                       -static_cast<double>(k + 1)));
    out.back().tail_estimate = [k](long N) { return stirling_weight_tail(k, N); };
  }

  for (auto hc : {HarmonicCase::PI2_6_MINUS_1, HarmonicCase::GAMMA_FROM_PI2_12, HarmonicCase::GAMMA_FROM_PI2_9,
                  HarmonicCase::PSI_LIKE}) {
    out.push_back(make("harmonic_" + to_string(hc), "sum (-1)^{n-1} H_n/(n n!) sum f(l) S1(n,l)", "n^-2 ln^-1 n",
                       [hc](long N, long b) { return harmonic_weighted_prefix(hc, N, b); },
                       [hc](long b) { return harmonic_weighted_rhs(hc, b); }, 1.0, 1.0, -1.0));
  }

  out.push_back(make("alternating_euler", "sum G_n/n = li(2) - gamma", "alternating n^-2 ln^-2 n",
                     alternating_euler_prefix, [](long b) { return oracle::li2(b) - oracle::euler_gamma(b); }, 1.0,
                     2.0, -2.0));
  out.back().tail_estimate = [](long N) {
    const double Nd = static_cast<double>(N);
    return 1.0 / (Nd * Nd * ln(N) * ln(N));
  };
  out.push_back(make("euler_from_cauchy2", "1 - sum C2_n/(n (n+1)!) = gamma", "n^-2 ln^-1 n",
                     euler_from_cauchy2_prefix, [](long b) { return oracle::euler_gamma(b); }, 1.0, 1.0, -1.0));

  out.push_back(make("norlund_plus1_z2", "ln z - 1/z + sum C2_n/(n (z+1)_n) = psi(z), z = 2", "n^-3 ln^-1 n",
                     [](long N, long b) { return norlund_digamma_prefix(Rational(2), N, b, NorlundVariant::PLUS1); },
                     [](long b) { return oracle::polygamma(0, HPReal::from_long(2, b)); }, 2.0, 2.0, -1.0));
  out.push_back(make("norlund_plain_z1", "ln z - 1/(2z) - sum |G_n| (n-1)!/(z)_n = psi(z), z = 1", "n^-2 ln^-2 n",
                     [](long N, long b) { return norlund_digamma_prefix(Rational(1), N, b, NorlundVariant::PLAIN); },
                     [](long b) { return oracle::polygamma(0, HPReal::from_long(1, b)); }, 1.0, 1.0, -2.0));

  out.push_back(make("binet_I_plus1_z3", "Stirling prefix + (1/2) sum I(n)/(n (z+1)_n) = ln Gamma(z), z = 3",
                     "n^-4 ln^-1 n",
                     [](long N, long b) { return binet_lngamma_prefix(Rational(3), N, b, BinetLnVariant::I_PLUS1); },
                     [](long b) { return oracle::lngamma(HPReal::from_long(3, b)); }, 3.0, 3.0, -1.0));
  out.push_back(make("binet_Iprime_plain_z2", "Stirling prefix - (1/2) sum I'(n)/(n (z)_n) = ln Gamma(z), z = 2",
                     "n^-3 ln^-1 n",
                     [](long N, long b) {
                       return binet_lngamma_prefix(Rational(2), N, b, BinetLnVariant::IPRIME_PLAIN);
                     },
                     [](long b) { return oracle::lngamma(HPReal::from_long(2, b)); }, 0.5, 2.0, -1.0));
  out.push_back(make("binet_K_plus1_z1", "ln z - 1/(2z) - (1/2) sum K(n)/(n (z+1)_n) = psi(z), z = 1", "n^-2",
                     [](long N, long b) { return binet_digamma_prefix(Rational(1), N, b, BinetPsiVariant::K_PLUS1); },
                     [](long b) { return oracle::polygamma(0, HPReal::from_long(1, b)); }, 0.5, 1.0, 0.0));
  out.push_back(make("binet_K_diff_z1",
                     "ln z - 1/(2z) - (1/2) sum (K(n) - n K(n-1))/(n (z)_n) = psi(z), z = 1", "n^-2 ln^-2 n",
                     [](long N, long b) { return binet_digamma_prefix(Rational(1), N, b, BinetPsiVariant::K_DIFF); },
                     [](long b) { return oracle::polygamma(0, HPReal::from_long(1, b)); }, 1.0, 1.0, -2.0));

  const double aux_log[] = {0, 0, 1, 0, 1, 2};
  const double aux_c[] = {1, 1, 1, 1, 1, 0.5};
  for (std::size_t i = 0; i < kAuxiliaryCount; ++i) {
    out.push_back(make(auxiliary_sum_id(i), "elementary Stirling sum with a shifted denominator",
                       "ln^a n / n^2", [i](long N, long b) { return auxiliary_sum_prefix(i, N, b); },
                       [i](long b) { return auxiliary_sum_rhs(i, b); }, aux_c[i], 1.0, aux_log[i]));
  }
  return out;
}

}  // namespace

const std::vector<IdentityCase>& catalogue() {
  static const std::vector<IdentityCase> cases = build();
  return cases;
}

const IdentityCase& find_case(const std::string& id) {
  for (const auto& c : catalogue()) {
    if (c.id == id) return c;
  }
  throw DomainError("unknown identity case '" + id + "'");
}

double fit_slope(const std::vector<long>& Ns, const std::vector<double>& errs, const std::vector<double>& shape) {
  if (Ns.size() < 2 || Ns.size() != errs.size() || Ns.size() != shape.size()) {
    throw DomainError("slope fit needs at least two points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(Ns.size());
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    const double x = std::log(static_cast<double>(Ns[i]));
    const double y = std::log(std::max(errs[i], 1e-300)) - std::log(shape[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

CaseResult run_case(const IdentityCase& c, const std::vector<long>& Ns, long bits) {
  if (Ns.empty()) throw DomainError("run_case needs at least one N");
  const long maxN = *std::max_element(Ns.begin(), Ns.end());
  const std::vector<HPReal> prefix = c.prefix(maxN, bits);
  const HPReal rhs = c.rhs(bits);
  CaseResult r;
  r.id = c.id;
  std::vector<double> errs, shape;
  for (long N : Ns) {
    IdentityRow row;
    row.id = c.id;
    row.N = N;
    row.lhs = prefix[static_cast<std::size_t>(N)];
    row.rhs = rhs;
    row.abs_err = abs(row.lhs - rhs);
    row.tail_est = c.tail_estimate(N);
    const double ratio = row.abs_err.to_double() / row.tail_est;
    row.pass = ratio <= kMaxFittedConstant;
    r.fitted_c = std::max(r.fitted_c, ratio);
    errs.push_back(row.abs_err.to_double());
    shape.push_back(row.tail_est / std::pow(static_cast<double>(N), c.poly_exponent));
    r.rows.push_back(std::move(row));
  }
  if (Ns.size() >= 2) {
    r.slope = fit_slope(Ns, errs, shape);
    r.slope_ok = std::fabs(r.slope - c.poly_exponent) <= kSlopeTolerance;
  } else {
    r.slope_ok = true;
  }
  r.pass = r.fitted_c <= kMaxFittedConstant && r.slope_ok;
  return r;
}

}  // namespace ratgamma::identities
