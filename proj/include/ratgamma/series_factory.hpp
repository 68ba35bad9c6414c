#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ratgamma/core/hpreal.hpp"
#include "ratgamma/core/rational.hpp"

namespace ratgamma {

enum class CompositeTag {
  COSH_LN,
  SINH_LN,
  COS_LN,
  SIN_LN,
  LN_1P_LN,
  INV_LOG_POW,      // 1/ln^m(1+z), m >= 2
  LOGPOW_OVER_1PZ,  // ln^m(1+z)/(1+z), m >= 0
  ARCTAN_LN,
  ARCTANH_LN,
  ARCTANH_POW,  // arctanh^m(z)/m!, m >= 1
  TAN_LN,
  TANH_LN,
  ARCTAN_ARCTANH,
};

struct CompositeKind {
  CompositeTag tag;
  long m = 0;

  std::string name() const;
  // Accepts names such as "SINH_LN" or "INV_LOG_POW" with m supplied separately.
  static CompositeKind parse(const std::string& name, long m);
};

struct CoeffSeries {
  CompositeKind kind;
  std::vector<Rational> coeffs;  // coeffs[n] multiplies z^n
  HPReal radius;
  // (power, coefficient) pairs for negative powers, most negative first.
  std::vector<std::pair<long, Rational>> laurent_head;

  // Partial sum of the Laurent head plus sum_{n<=N} coeffs[n] z^n.
  HPReal evaluate(const HPReal& z) const;
};

// Exact coefficients up to z^N. Throws DomainError for an invalid m.
CoeffSeries expand(const CompositeKind& kind, long N);

// Radius of convergence of the composite expansion.
HPReal radius(const CompositeKind& kind, long bits = kDefaultBits);

// Direct floating evaluation of the composite function, for cross-checks.
HPReal composite_value(const CompositeKind& kind, const HPReal& z);

// A_0..A_{n_max}: coefficients of x^{2n+1} in arctan(arctanh x), exact double sum.
std::vector<Rational> arctan_arctanh_coeffs(long n_max);
// Same coefficients in floating point from the power series of
// 1/((1-y)(1 + y P(y)^2)), y = x^2, P(y) = sum y^j/(2j+1).
std::vector<HPReal> arctan_arctanh_coeffs_hp(long n_max, long bits);

// Terms (-1)^n C2_n/(n n!) for n = 1..N; their sum tends to ln ln 2.
std::vector<Rational> cayley_lnln_series(long N);

}  // namespace ratgamma
