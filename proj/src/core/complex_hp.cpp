#include "ratgamma/core/complex_hp.hpp"

#include <algorithm>

#include "ratgamma/core/errors.hpp"

namespace ratgamma {

ComplexHP::ComplexHP(const HPReal& real, const HPReal& imag) : re(real), im(imag) {
  const long b = std::max(real.bits(), imag.bits());
  re.set_bits(b);
  im.set_bits(b);
}

std::string ComplexHP::str(int digits) const {
  if (im.is_zero()) return re.str(digits);
  std::string i = im.str(digits);
  if (i.front() != '-') i = "+" + i;
  return re.str(digits) + i + "i";
}

ComplexHP& ComplexHP::operator+=(const ComplexHP& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexHP& ComplexHP::operator-=(const ComplexHP& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexHP& ComplexHP::operator*=(const ComplexHP& o) {
  *this = *this * o;
  return *this;
}

ComplexHP& ComplexHP::operator*=(const HPReal& o) {
  re *= o;
  im *= o;
  return *this;
}

ComplexHP& ComplexHP::operator/=(const ComplexHP& o) {
  *this = *this / o;
  return *this;
}

ComplexHP operator+(const ComplexHP& a, const ComplexHP& b) { return ComplexHP(a.re + b.re, a.im + b.im); }
ComplexHP operator-(const ComplexHP& a, const ComplexHP& b) { return ComplexHP(a.re - b.re, a.im - b.im); }

ComplexHP operator*(const ComplexHP& a, const ComplexHP& b) {
  if (a.im.is_zero() && b.im.is_zero()) return ComplexHP(a.re * b.re, HPReal(std::max(a.bits(), b.bits())));
  return ComplexHP(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

ComplexHP operator*(const ComplexHP& a, const HPReal& b) { return ComplexHP(a.re * b, a.im * b); }
ComplexHP operator*(const HPReal& a, const ComplexHP& b) { return b * a; }
ComplexHP operator*(const ComplexHP& a, long b) { return ComplexHP(a.re * b, a.im * b); }

ComplexHP operator/(const ComplexHP& a, const ComplexHP& b) {
  if (b.im.is_zero()) return a / b.re;
  // Smith's algorithm keeps the intermediate quotient bounded.
  if (abs(b.re) >= abs(b.im)) {
    HPReal r = b.im / b.re;
    HPReal d = b.re + b.im * r;
    return ComplexHP((a.re + a.im * r) / d, (a.im - a.re * r) / d);
  }
  HPReal r = b.re / b.im;
  HPReal d = b.re * r + b.im;
  return ComplexHP((a.re * r + a.im) / d, (a.im * r - a.re) / d);
}

ComplexHP operator/(const ComplexHP& a, const HPReal& b) { return ComplexHP(a.re / b, a.im / b); }
ComplexHP operator/(const ComplexHP& a, long b) { return ComplexHP(a.re / b, a.im / b); }
ComplexHP operator+(const ComplexHP& a, const HPReal& b) { return ComplexHP(a.re + b, a.im); }
ComplexHP operator-(const ComplexHP& a, const HPReal& b) { return ComplexHP(a.re - b, a.im); }
ComplexHP operator+(const ComplexHP& a, long b) { return ComplexHP(a.re + b, a.im); }

HPReal abs(const ComplexHP& z) {
  HPReal r(z.bits());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

HPReal arg(const ComplexHP& z) { return atan2(z.im, z.re); }

ComplexHP conj(const ComplexHP& z) { return ComplexHP(z.re, -z.im); }

ComplexHP reciprocal(const ComplexHP& z) {
  ComplexHP one(HPReal::from_long(1, z.bits()));
  return one / z;
}

ComplexHP log(const ComplexHP& z) {
  if (z.re.is_zero() && z.im.is_zero()) throw DomainError("log of zero");
  if (z.im.is_zero() && z.re.sign() > 0) return ComplexHP(log(z.re));
  return ComplexHP(log(abs(z)), arg(z));
}

ComplexHP exp(const ComplexHP& z) {
  HPReal m = exp(z.re);
  if (z.im.is_zero()) return ComplexHP(m);
  return ComplexHP(m * cos(z.im), m * sin(z.im));
}

ComplexHP pow(const ComplexHP& z, long n) {
  if (n < 0) return reciprocal(pow(z, -n));
  ComplexHP result(HPReal::from_long(1, z.bits()));
  ComplexHP base = z;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

}  // namespace ratgamma
