#include "ratgamma/core/errors.hpp"
#include "ratgamma/gamma_expansions.hpp"

namespace ratgamma {

namespace {

long required_half(Family f) {
  return (f == Family::LNGAMMA_2_SHIFTED || f == Family::PSI_K_2) ? 1 : 0;
}

}  // namespace

RationalTermStream::RationalTermStream(const ExpansionSpec& spec, const ExactArg& z, bool force) : spec_(spec) {
  if (spec.k < 0) throw DomainError("polygamma order must be >= 0");
  if (z.z_half != required_half(spec.family)) {
    throw DomainError("bracket terms of " + spec.name() + " are rational only for z_half = " +
                      std::to_string(required_half(spec.family)) + "; reduce the argument first");
  }
  if (z.z_num.sign() <= 0) throw DomainError("z_num must be positive");
  const Region r = region_for(spec, z.value(128));
  if (r != Region::Converges && !force) {
    throw RegionError(spec.name() + " at z = " + z.str() + ": " + to_string(r));
  }
  // The series variable is a/pi with a = z_num; x = 1/(2 pi z) or 1/(4 pi (z - 1/2)).
  const bool half_weights = spec.family == Family::LNGAMMA_2_HALFSHIFT || spec.family == Family::LNGAMMA_2_SHIFTED ||
                            spec.family == Family::PSI_K_2;
  twofold_ = half_weights;
  x_ = Rational(1) / (Rational(half_weights ? 4 : 2) * z.z_num);
  switch (spec.family) {
    case Family::LNGAMMA_1:
    case Family::LNGAMMA_2_HALFSHIFT:
    case Family::LNGAMMA_2_SHIFTED: s_ = 0; sign_ = 1; break;
    case Family::PSI_K_1: s_ = spec.k + 1; sign_ = (spec.k + 1) % 2 ? -1 : 1; break;
    case Family::PSI_K_2: s_ = spec.k + 1; sign_ = spec.k % 2 ? -1 : 1; break;
  }
  row_ = {BigInt(1)};  // row 0
}

Rational RationalTermStream::next() {
  // Advance to row n+1 of |S1|.
  const long n = n_;
  row_.push_back(BigInt(0));
  for (long k = n + 1; k >= 1; --k) {
    row_[static_cast<std::size_t>(k)] = row_[static_cast<std::size_t>(k - 1)] + n * row_[static_cast<std::size_t>(k)];
  }
  row_[0] = 0;
  ++n_;
  fact_ *= n_;

  // sum_l (-1)^l (2l+s)! g_l |S1(n,2l+1)| x^{2l+e}, e = 0 for ln Gamma, 1 for polygamma.
  const bool poly = spec_.is_polygamma();
  const Rational x2 = x_ * x_;
  Rational xp = poly ? x_ : Rational(1);
  BigInt f = factorial(static_cast<unsigned long>(s_));
  Rational sum = 0;
  for (long l = 0; 2 * l + 1 <= n_; ++l) {
    if (l > 0) {
      f *= (2 * l + s_ - 1);
      f *= (2 * l + s_);
      xp *= x2;
    }
    BigInt w = f * row_[static_cast<std::size_t>(2 * l + 1)];
    if (twofold_) {
      BigInt g;
      mpz_ui_pow_ui(g.get_mpz_t(), 2, static_cast<unsigned long>(2 * l + 1));
      w *= BigInt(g - 1);
    }
    Rational t = Rational(w) * xp;
    if (l % 2) sum -= t;
    else sum += t;
  }
  return sign_ * sum / Rational(BigInt(n_ * fact_));
}

std::vector<Rational> rational_term_stream(const ExpansionSpec& spec, const ExactArg& z, long count, bool force) {
  RationalTermStream s(spec, z, force);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) out.push_back(s.next());
  return out;
}

}  // namespace ratgamma
