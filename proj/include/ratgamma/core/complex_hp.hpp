#pragma once

#include <string>

#include "ratgamma/core/hpreal.hpp"

namespace ratgamma {

// Complex value as a pair of HPReal sharing one precision.
struct ComplexHP {
  HPReal re;
  HPReal im;

  ComplexHP() = default;
  explicit ComplexHP(long bits) : re(bits), im(bits) {}
  explicit ComplexHP(const HPReal& real) : re(real), im(real.bits()) {}
  ComplexHP(const HPReal& real, const HPReal& imag);

  static ComplexHP from_rational(const Rational& r, long bits) {
    return ComplexHP(HPReal::from_rational(r, bits));
  }

  long bits() const { return re.bits(); }
  bool is_real() const { return im.is_zero(); }
  std::string str(int digits = 0) const;

  ComplexHP operator-() const { return ComplexHP(-re, -im); }
  ComplexHP& operator+=(const ComplexHP& o);
  ComplexHP& operator-=(const ComplexHP& o);
  ComplexHP& operator*=(const ComplexHP& o);
  ComplexHP& operator*=(const HPReal& o);
  ComplexHP& operator/=(const ComplexHP& o);
};

ComplexHP operator+(const ComplexHP& a, const ComplexHP& b);
ComplexHP operator-(const ComplexHP& a, const ComplexHP& b);
ComplexHP operator*(const ComplexHP& a, const ComplexHP& b);
ComplexHP operator*(const ComplexHP& a, const HPReal& b);
ComplexHP operator*(const HPReal& a, const ComplexHP& b);
ComplexHP operator*(const ComplexHP& a, long b);
ComplexHP operator/(const ComplexHP& a, const ComplexHP& b);
ComplexHP operator/(const ComplexHP& a, const HPReal& b);
ComplexHP operator/(const ComplexHP& a, long b);
ComplexHP operator+(const ComplexHP& a, const HPReal& b);
ComplexHP operator-(const ComplexHP& a, const HPReal& b);
ComplexHP operator+(const ComplexHP& a, long b);

HPReal abs(const ComplexHP& z);
HPReal arg(const ComplexHP& z);
ComplexHP conj(const ComplexHP& z);
ComplexHP reciprocal(const ComplexHP& z);
// Principal branch, arg in (-pi, pi].
ComplexHP log(const ComplexHP& z);
ComplexHP exp(const ComplexHP& z);
ComplexHP pow(const ComplexHP& z, long n);

}  // namespace ratgamma
