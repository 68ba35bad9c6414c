#pragma once

#include <mpfr.h>

#include <string>

#include "ratgamma/core/rational.hpp"

namespace ratgamma {

inline constexpr long kDefaultBits = 256;
inline constexpr long kMinBits = 32;

// Binary floating-point value with an explicit significand precision in bits.
// Results of binary operations carry the larger of the operand precisions;
// compound assignment rounds to the precision of the left operand.
class HPReal {
 public:
  HPReal();  // zero at kDefaultBits
  explicit HPReal(long bits);
  HPReal(const HPReal& other);
  HPReal(HPReal&& other) noexcept;
  HPReal& operator=(const HPReal& other);
  HPReal& operator=(HPReal&& other) noexcept;
  ~HPReal();

  static HPReal from_long(long v, long bits);
  static HPReal from_double(double v, long bits);
  static HPReal from_string(const std::string& decimal, long bits);
  static HPReal from_rational(const Rational& r, long bits);
  static HPReal from_bigint(const BigInt& v, long bits);

  long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
  // Change precision, rounding the current value.
  void set_bits(long bits);
  HPReal with_bits(long bits) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Binary exponent e with 0.5 <= |x|/2^e < 1; meaningless for zero.
  long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

  // Scientific notation with the given number of significant digits;
  // digits = 0 selects enough digits for an exact round trip.
  std::string str(int digits = 0) const;

  HPReal operator-() const;
  HPReal& operator+=(const HPReal& o);
  HPReal& operator-=(const HPReal& o);
  HPReal& operator*=(const HPReal& o);
  HPReal& operator/=(const HPReal& o);
  HPReal& operator+=(long o);
  HPReal& operator-=(long o);
  HPReal& operator*=(long o);
  HPReal& operator/=(long o);

  friend HPReal operator+(const HPReal& a, const HPReal& b);
  friend HPReal operator-(const HPReal& a, const HPReal& b);
  friend HPReal operator*(const HPReal& a, const HPReal& b);
  friend HPReal operator/(const HPReal& a, const HPReal& b);
  friend HPReal operator+(const HPReal& a, long b);
  friend HPReal operator-(const HPReal& a, long b);
  friend HPReal operator*(const HPReal& a, long b);
  friend HPReal operator/(const HPReal& a, long b);
  friend HPReal operator+(long a, const HPReal& b);
  friend HPReal operator-(long a, const HPReal& b);
  friend HPReal operator*(long a, const HPReal& b);
  friend HPReal operator/(long a, const HPReal& b);

  friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
  friend bool operator<=(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
  friend bool operator>=(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

 private:
  mpfr_t v_;
};

HPReal to_hp(const Rational& r, long bits);

HPReal abs(const HPReal& x);
HPReal sqrt(const HPReal& x);
HPReal log(const HPReal& x);
HPReal log1p(const HPReal& x);
HPReal exp(const HPReal& x);
HPReal expm1(const HPReal& x);
HPReal sin(const HPReal& x);
HPReal cos(const HPReal& x);
HPReal tan(const HPReal& x);
HPReal atan(const HPReal& x);
HPReal atan2(const HPReal& y, const HPReal& x);
HPReal atanh(const HPReal& x);
HPReal sinh(const HPReal& x);
HPReal cosh(const HPReal& x);
HPReal tanh(const HPReal& x);
HPReal pow(const HPReal& x, const HPReal& y);
HPReal pow(const HPReal& x, long n);
HPReal ldexp(const HPReal& x, long e);
HPReal max(const HPReal& a, const HPReal& b);

HPReal const_pi(long bits);
HPReal const_log2(long bits);

// |a - b| / |b|, or |a| when b is zero.
HPReal relative_error(const HPReal& a, const HPReal& b);

}  // namespace ratgamma
