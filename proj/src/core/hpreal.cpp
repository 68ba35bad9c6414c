#include "ratgamma/core/hpreal.hpp"

#include <algorithm>
#include <utility>

#include "ratgamma/core/errors.hpp"

namespace ratgamma {

namespace {

mpfr_prec_t checked_prec(long bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
    throw DomainError("invalid precision: " + std::to_string(bits) + " bits");
  }
  return static_cast<mpfr_prec_t>(bits);
}

long wider(const HPReal& a, const HPReal& b) { return std::max(a.bits(), b.bits()); }

template <typename Fn>
HPReal unary(const HPReal& x, Fn fn) {
  HPReal r(x.bits());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

HPReal::HPReal() : HPReal(kDefaultBits) {}

HPReal::HPReal(long bits) {
  mpfr_init2(v_, checked_prec(bits));
  mpfr_set_zero(v_, 1);
}

HPReal::HPReal(const HPReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

HPReal& HPReal::operator=(const HPReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

HPReal::~HPReal() { mpfr_clear(v_); }

HPReal HPReal::from_long(long v, long bits) {
  HPReal r(bits);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

HPReal HPReal::from_double(double v, long bits) {
  HPReal r(bits);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

HPReal HPReal::from_string(const std::string& decimal, long bits) {
  HPReal r(bits);
  if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("malformed real number: " + decimal);
  }
  return r;
}

HPReal HPReal::from_rational(const Rational& q, long bits) {
  HPReal r(bits);
  mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
  return r;
}

HPReal HPReal::from_bigint(const BigInt& v, long bits) {
  HPReal r(bits);
  mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

void HPReal::set_bits(long bits) { mpfr_prec_round(v_, checked_prec(bits), MPFR_RNDN); }

HPReal HPReal::with_bits(long bits) const {
  HPReal r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string HPReal::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  if (digits <= 0) digits = static_cast<int>(mpfr_get_str_ndigits(10, mpfr_get_prec(v_)));
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

HPReal HPReal::operator-() const { return unary(*this, mpfr_neg); }

HPReal& HPReal::operator+=(const HPReal& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
HPReal& HPReal::operator-=(const HPReal& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
HPReal& HPReal::operator*=(const HPReal& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
HPReal& HPReal::operator/=(const HPReal& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
HPReal& HPReal::operator+=(long o) {
  mpfr_add_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
HPReal& HPReal::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
HPReal& HPReal::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
HPReal& HPReal::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

HPReal operator+(const HPReal& a, const HPReal& b) {
  HPReal r(wider(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
HPReal operator-(const HPReal& a, const HPReal& b) {
  HPReal r(wider(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
HPReal operator*(const HPReal& a, const HPReal& b) {
  HPReal r(wider(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
HPReal operator/(const HPReal& a, const HPReal& b) {
  HPReal r(wider(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
HPReal operator+(const HPReal& a, long b) {
  HPReal r(a.bits());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
HPReal operator-(const HPReal& a, long b) {
  HPReal r(a.bits());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
HPReal operator*(const HPReal& a, long b) {
  HPReal r(a.bits());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
HPReal operator/(const HPReal& a, long b) {
  HPReal r(a.bits());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
HPReal operator+(long a, const HPReal& b) { return b + a; }
HPReal operator-(long a, const HPReal& b) {
  HPReal r(b.bits());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
HPReal operator*(long a, const HPReal& b) { return b * a; }
HPReal operator/(long a, const HPReal& b) {
  HPReal r(b.bits());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

HPReal to_hp(const Rational& r, long bits) {
  if (bits < kMinBits) throw DomainError("precision below 32 bits");
  return HPReal::from_rational(r, bits);
}

HPReal abs(const HPReal& x) { return unary(x, mpfr_abs); }
HPReal sqrt(const HPReal& x) { return unary(x, mpfr_sqrt); }
HPReal log(const HPReal& x) { return unary(x, mpfr_log); }
HPReal log1p(const HPReal& x) { return unary(x, mpfr_log1p); }
HPReal exp(const HPReal& x) { return unary(x, mpfr_exp); }
HPReal expm1(const HPReal& x) { return unary(x, mpfr_expm1); }
HPReal sin(const HPReal& x) { return unary(x, mpfr_sin); }
HPReal cos(const HPReal& x) { return unary(x, mpfr_cos); }
HPReal tan(const HPReal& x) { return unary(x, mpfr_tan); }
HPReal atan(const HPReal& x) { return unary(x, mpfr_atan); }
HPReal atanh(const HPReal& x) { return unary(x, mpfr_atanh); }
HPReal sinh(const HPReal& x) { return unary(x, mpfr_sinh); }
HPReal cosh(const HPReal& x) { return unary(x, mpfr_cosh); }
HPReal tanh(const HPReal& x) { return unary(x, mpfr_tanh); }

HPReal atan2(const HPReal& y, const HPReal& x) {
  HPReal r(wider(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

HPReal pow(const HPReal& x, const HPReal& y) {
  HPReal r(wider(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

HPReal pow(const HPReal& x, long n) {
  HPReal r(x.bits());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

HPReal ldexp(const HPReal& x, long e) {
  HPReal r(x.bits());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

HPReal max(const HPReal& a, const HPReal& b) { return a < b ? b : a; }

HPReal const_pi(long bits) {
  HPReal r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

HPReal const_log2(long bits) {
  HPReal r(bits);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

HPReal relative_error(const HPReal& a, const HPReal& b) {
  if (b.is_zero()) return abs(a);
  return abs(a - b) / abs(b);
}

}  // namespace ratgamma
