#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ratgamma/core/hpreal.hpp"
#include "ratgamma/core/rational.hpp"

namespace ratgamma::identities {

// Partial sums are indexed by the upper summation index: prefix[N] includes
// every term with n <= N (entries below the first index are zero).

// zeta(k+1) = sum_{n>=k} |S1(n,k)| / (n n!), k >= 1.
HPReal zeta_from_stirling(long k, long N, long bits);
std::vector<HPReal> zeta_from_stirling_prefix(long k, long N, long bits);

// zeta(k+1, v) = sum_{n>=k} |S1(n,k)| / (n (v)_n), k >= 1, v > 0.
HPReal hurwitz_from_stirling(long k, const Rational& v, long N, long bits);
std::vector<HPReal> hurwitz_from_stirling_prefix(long k, const Rational& v, long N, long bits);

// sum |G_n| / (n + k); for k < 0 the sum starts at n = 1 - k. Valid for k >= -3.
HPReal gregory_shifted_sum(long k, long N, long bits);
std::vector<HPReal> gregory_shifted_prefix(long k, long N, long bits);
HPReal gregory_shifted_closed(long k, long bits);

// sum |G_n| -> 1, 1 + sum G_n -> 1/ln 2, sum (-1)^n C2_n/(n n!) -> ln ln 2.
std::vector<HPReal> fontana_unit_prefix(long N, long bits);
std::vector<HPReal> reciprocal_ln2_prefix(long N, long bits);
std::vector<HPReal> lnln2_prefix(long N, long bits);
HPReal fontana_unit(long N, long bits);
HPReal reciprocal_ln2(long N, long bits);
HPReal lnln2(long N, long bits);

// sum (-1)^{n-1}/(n n!) sum_l S1(n,l)/(l+k), k >= 2, with its closed form in
// gamma, ln 2pi, zeta'(2l) and zeta(2l+1).
std::pair<HPReal, HPReal> sum_l_plus_k_closed(long k, long N, long bits);
std::vector<HPReal> sum_l_plus_k_prefix(long k, long N, long bits);
HPReal sum_l_plus_k_rhs(long k, long bits);

// sum (-1)^{n-1} H_n/(n n!) sum_l f(l) S1(n,l) for
//   PI2_6_MINUS_1:     f = 1/(l+1)
//   GAMMA_FROM_PI2_12: f = 1/((l+1)(l+2))
//   GAMMA_FROM_PI2_9:  f = 1/((l+1)(l+3))
//   PSI_LIKE:          f = 1/((l+1)(l+2)(l+3))
enum class HarmonicCase { PI2_6_MINUS_1, GAMMA_FROM_PI2_12, GAMMA_FROM_PI2_9, PSI_LIKE };
std::string to_string(HarmonicCase c);
std::pair<HPReal, HPReal> harmonic_weighted(HarmonicCase c, long N, long bits);
std::vector<HPReal> harmonic_weighted_prefix(HarmonicCase c, long N, long bits);
HPReal harmonic_weighted_rhs(HarmonicCase c, long bits);
// Exact n-th term of the harmonic-weighted sum, n <= kExactMax.
Rational harmonic_weighted_term(HarmonicCase c, long n);

// sum G_n / n -> li(2) - gamma.
std::vector<HPReal> alternating_euler_prefix(long N, long bits);
HPReal alternating_euler(long N, long bits);

// 1 - sum C2_n / (n (n+1)!) -> gamma.
std::vector<HPReal> euler_from_cauchy2_prefix(long N, long bits);
HPReal euler_from_cauchy2(long N, long bits);
// Exact n-th term C2_n / (n (n+1)!).
Rational euler_from_cauchy2_term(long n);

// Digamma: PLUS1 = ln z - 1/z + sum C2_n / (n (z+1)_n);
//          PLAIN = ln z - 1/(2z) - sum_{n>=2} |G_n| (n-1)! / (z)_n.
enum class NorlundVariant { PLUS1, PLAIN };
std::vector<HPReal> norlund_digamma_prefix(const Rational& z, long N, long bits, NorlundVariant v);
HPReal norlund_digamma(const Rational& z, long N, long bits, NorlundVariant v);

// ln Gamma: I_PLUS1 = Stirling prefix + (1/2) sum I(n) / (n (z+1)_n);
//           IPRIME_PLAIN = Stirling prefix - (1/2) sum I'(n) / (n (z)_n).
enum class BinetLnVariant { I_PLUS1, IPRIME_PLAIN };
std::vector<HPReal> binet_lngamma_prefix(const Rational& z, long N, long bits, BinetLnVariant v);
HPReal binet_lngamma(const Rational& z, long N, long bits, BinetLnVariant v);

// Digamma: K_PLUS1 = ln z - 1/(2z) - (1/2) sum_{n>=2} K(n) / (n (z+1)_n);
//          K_DIFF  = ln z - 1/(2z) - (1/2) sum_{n>=2} (K(n) - n K(n-1)) / (n (z)_n).
enum class BinetPsiVariant { K_PLUS1, K_DIFF };
std::vector<HPReal> binet_digamma_prefix(const Rational& z, long N, long bits, BinetPsiVariant v);
HPReal binet_digamma(const Rational& z, long N, long bits, BinetPsiVariant v);

// int_0^1 ln^s(1-x) / x^k dx for integer s > k - 1, k >= 1: closed form in
// zeta values and the same integral by quadrature after x = 1 - e^{-t}.
struct LogPowerIntegral {
  HPReal closed;
  HPReal quadrature;
};
LogPowerIntegral log_power_integral(long s, long k, long bits);

// The six elementary sums used to reduce the negatively shifted Gregory
// series, each as (partial sum to N, closed form).
struct AuxiliarySum {
  std::string id;
  HPReal lhs;
  HPReal rhs;
  double tail_estimate;
};
std::vector<AuxiliarySum> auxiliary_sums(long N, long bits);
inline constexpr std::size_t kAuxiliaryCount = 6;
std::string auxiliary_sum_id(std::size_t index);
std::vector<HPReal> auxiliary_sum_prefix(std::size_t index, long N, long bits);
HPReal auxiliary_sum_rhs(std::size_t index, long bits);

// Declarative catalogue entry.
struct IdentityCase {
  std::string id;
  std::string description;
  std::string decay_class;  // e.g. "n^-2 ln^-2 n" for the terms
  std::function<std::vector<HPReal>(long N, long bits)> prefix;
  std::function<HPReal(long bits)> rhs;
  std::function<double(long N)> tail_estimate;
  // Expected behaviour of |lhs(N) - rhs| ~ N^poly_exponent * (ln N)^log_exponent.
  double poly_exponent = -1.0;
  double log_exponent = 0.0;
};

struct IdentityRow {
  std::string id;
  long N = 0;
  HPReal lhs;
  HPReal rhs;
  HPReal abs_err;
  double tail_est = 0.0;
  bool pass = false;
};

struct CaseResult {
  std::string id;
  std::vector<IdentityRow> rows;
  double fitted_c = 0.0;  // max over N of abs_err / tail_est
  double slope = 0.0;     // fitted exponent of abs_err / (tail_est / N^poly_exponent) against N
  bool slope_ok = false;
  bool pass = false;
};

inline constexpr double kMaxFittedConstant = 10.0;
inline constexpr double kSlopeTolerance = 0.15;

const std::vector<IdentityCase>& catalogue();
const IdentityCase& find_case(const std::string& id);

// Evaluates one case at each N (ascending) from a single prefix computation.
CaseResult run_case(const IdentityCase& c, const std::vector<long>& Ns, long bits);

// Least-squares slope of log(err_i / shape_i) against log N_i, where shape is
// the non-polynomial factor of the tail (ln^a N in the simplest classes).
double fit_slope(const std::vector<long>& Ns, const std::vector<double>& errs, const std::vector<double>& shape);

}  // namespace ratgamma::identities
