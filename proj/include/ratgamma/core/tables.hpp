#pragma once

#include <mutex>
#include <vector>

#include "ratgamma/core/rational.hpp"

namespace ratgamma {

// Exact Bernoulli numbers with B_1 = -1/2, extended on demand by the
// recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0.
class BernoulliTable {
 public:
  Rational operator()(long n);
  // Copies B_0..B_n into out.
  std::vector<Rational> values(long n);
  static BernoulliTable& shared();

 private:
  void extend(long n);
  std::mutex mu_;
  std::vector<Rational> b_{Rational(1)};
};

// Exact harmonic numbers H_n and H_n^(2), extended on demand.
class HarmonicTable {
 public:
  Rational h1(long n);
  Rational h2(long n);
  static HarmonicTable& shared();

 private:
  void extend(long n);
  std::mutex mu_;
  std::vector<Rational> h1_{Rational(0)};
  std::vector<Rational> h2_{Rational(0)};
};

Rational bernoulli(long n);
Rational harmonic(long n);
Rational harmonic2(long n);

}  // namespace ratgamma
