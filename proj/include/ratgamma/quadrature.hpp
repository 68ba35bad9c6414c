#pragma once

#include <functional>

#include "ratgamma/core/hpreal.hpp"

namespace ratgamma::quad {

using Integrand = std::function<HPReal(const HPReal&)>;

struct QuadOptions {
  long bits = kDefaultBits;
  int max_level = 14;
  // Successive levels must agree to 2^(tolerance_shift - bits), relative.
  long tolerance_shift = 16;
};

struct QuadResult {
  HPReal value;
  HPReal level_difference;
  int levels = 0;
  long evaluations = 0;
};

// Double-exponential (tanh-sinh) rule on a finite interval [a, b].
// The integrand may be singular at the endpoints as long as it is integrable;
// it is never evaluated at a or b themselves unless rounding forces it.
QuadResult tanh_sinh(const Integrand& f, const HPReal& a, const HPReal& b, const QuadOptions& opt);

// Double-exponential (exp-sinh) rule on [a, infinity).
QuadResult exp_sinh(const Integrand& f, const HPReal& a, const QuadOptions& opt);

HPReal integrate(const Integrand& f, const HPReal& a, const HPReal& b, long bits);
HPReal integrate_to_infinity(const Integrand& f, const HPReal& a, long bits);

}  // namespace ratgamma::quad
