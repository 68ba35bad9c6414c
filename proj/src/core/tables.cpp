#include "ratgamma/core/tables.hpp"

#include "ratgamma/core/errors.hpp"

namespace ratgamma {

void BernoulliTable::extend(long n) {
  for (long m = static_cast<long>(b_.size()); m <= n; ++m) {
    if (m >= 3 && m % 2 == 1) {
      b_.emplace_back(0);
      continue;
    }
    // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
    mpq_class acc = 0;
    for (long k = 0; k < m; ++k) {
      if (k >= 3 && k % 2 == 1) continue;
      acc += mpq_class(binomial(m + 1, k)) * b_[k].raw();
    }
    acc /= -(m + 1);
    b_.emplace_back(acc);
  }
}

Rational BernoulliTable::operator()(long n) {
  if (n < 0) throw RangeError("Bernoulli index must be non-negative");
  std::lock_guard<std::mutex> lock(mu_);
  extend(n);
  return b_[n];
}

std::vector<Rational> BernoulliTable::values(long n) {
  if (n < 0) throw RangeError("Bernoulli index must be non-negative");
  std::lock_guard<std::mutex> lock(mu_);
  extend(n);
  return {b_.begin(), b_.begin() + n + 1};
}

BernoulliTable& BernoulliTable::shared() {
  static BernoulliTable table;
  return table;
}

void HarmonicTable::extend(long n) {
  for (long m = static_cast<long>(h1_.size()); m <= n; ++m) {
    h1_.push_back(h1_.back() + Rational(1, m));
    h2_.push_back(h2_.back() + Rational(1, BigInt(m) * m));
  }
}

Rational HarmonicTable::h1(long n) {
  if (n < 0) throw RangeError("harmonic index must be non-negative");
  std::lock_guard<std::mutex> lock(mu_);
  extend(n);
  return h1_[n];
}

Rational HarmonicTable::h2(long n) {
  if (n < 0) throw RangeError("harmonic index must be non-negative");
  std::lock_guard<std::mutex> lock(mu_);
  extend(n);
  return h2_[n];
}

HarmonicTable& HarmonicTable::shared() {
  static HarmonicTable table;
  return table;
}

Rational bernoulli(long n) { return BernoulliTable::shared()(n); }
Rational harmonic(long n) { return HarmonicTable::shared().h1(n); }
Rational harmonic2(long n) { return HarmonicTable::shared().h2(n); }

}  // namespace ratgamma
