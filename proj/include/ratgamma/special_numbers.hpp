#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "ratgamma/core/hpreal.hpp"
#include "ratgamma/core/rational.hpp"

namespace ratgamma {

// Largest index served by the exact (rational) paths.
inline constexpr long kExactMax = 400;
// Largest index served by the float convolution paths; larger indices use quadrature.
inline constexpr long kConvolutionMax = 6000;

// Gregory coefficients G_n = (1/n!) sum_l S1(n,l)/(l+1), n >= 1.
Rational gregory(long n);
// Cauchy numbers of the second kind C2_n = sum_l |S1(n,l)|/(l+1), n >= 1 (C2_0 = 1).
Rational cauchy2(long n);
// Cauchy numbers of the first kind C1_n = n! G_n.
Rational cauchy1(long n);

Rational binet_I(long n);
Rational binet_Iprime(long n);
Rational binet_K(long n);

// sum_l |S1(n,l)|/(l+k) and sum_l S1(n,l)/(l+k).
Rational general_sum_unsigned(long n, long k);
Rational general_sum_signed(long n, long k);

// True iff n C2_{n-1} - C2_n = |G_n| n! for all 1 <= n <= n_max.
bool recurrence_check(long n_max);

HPReal gregory_hp(long n, long bits);
// C2_n / n!.
HPReal cauchy2_ratio_hp(long n, long bits);
// Integral representations used by the two functions above beyond kConvolutionMax.
HPReal gregory_integral(long n, long bits);
HPReal cauchy2_ratio_integral(long n, long bits);

enum class BoundForm { Simple, Full };

// Bounds lo <= |G_n| <= hi. Simple form needs n >= 5, full form n >= 3.
std::pair<HPReal, HPReal> gregory_bounds(long n, BoundForm form, long bits);
// Bounds lo <= C2_n/n! <= hi. Simple form needs n >= 3, full form n >= 2.
std::pair<HPReal, HPReal> cauchy2_bounds(long n, BoundForm form, long bits);

// Truncated large-n expansions, order in {1,2,3}. gregory_asymptotic carries the sign of G_n.
HPReal cauchy2_asymptotic(long n, int order, long bits);
HPReal gregory_asymptotic(long n, int order, long bits);

// MacLaurin coefficients a_0..a_K of 1/Gamma(x) = sum a_k x^k (a_0 = 0, a_1 = 1, a_2 = gamma).
std::vector<HPReal> reciprocal_gamma_coeffs(long K, long bits);
// Same coefficients from a discretized Cauchy integral of sin(pi x) Gamma(x) around x = 1.
std::vector<HPReal> reciprocal_gamma_coeffs_contour(long K, long bits, long nodes = 128);

// Coefficients n = 0..N of sum_l ln^l(1+z)/(l!(l+k)) (signed) or
// sum_l (-ln(1-z))^l/(l!(l+k)) (unsigned); entry n equals
// (1/n!) sum_l S1(n,l)/(l+k) resp. (1/n!) sum_l |S1(n,l)|/(l+k). Cached per (k, bits).
std::shared_ptr<const std::vector<HPReal>> signed_sum_series(long k, long N, long bits);
std::shared_ptr<const std::vector<HPReal>> unsigned_sum_series(long k, long N, long bits);

}  // namespace ratgamma
