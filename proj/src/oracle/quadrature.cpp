#include "ratgamma/quadrature.hpp"

#include <cmath>
#include <string>

#include "ratgamma/core/errors.hpp"

namespace ratgamma::quad {

namespace {

constexpr long kGuardBits = 24;

void check_finite(const HPReal& v) {
  if (!v.is_finite()) throw ConvergenceError("integrand returned a non-finite value");
}

HPReal tolerance(const HPReal& value, const QuadOptions& opt, long wp) {
  HPReal scale = abs(value);
  if (scale.is_zero()) scale = HPReal::from_long(1, wp);
  return ldexp(scale, opt.tolerance_shift - opt.bits);
}

}  // namespace

QuadResult tanh_sinh(const Integrand& f, const HPReal& a, const HPReal& b, const QuadOptions& opt) {
  const long wp = opt.bits + kGuardBits;
  const HPReal half_pi = ldexp(const_pi(wp), -1);
  const HPReal c = ldexp(a.with_bits(wp) + b.with_bits(wp), -1);
  const HPReal d = ldexp(b.with_bits(wp) - a.with_bits(wp), -1);
  // Abscissae beyond t_max sit closer to the endpoints than 2^-(2 wp) in
  // relative terms; their weights are negligible for integrable integrands.
  const double t_max = std::asinh(2.0 * static_cast<double>(2 * wp) * std::log(2.0) / M_PI);

  long evaluations = 0;
  // Contribution of the symmetric node pair at parameter t (one node at t = 0).
  auto pair_sum = [&](const HPReal& t, bool centre) {
    HPReal u = half_pi * sinh(t);
    HPReal eu = exp(u);
    HPReal cosh_u = ldexp(eu + 1 / eu, -1);
    HPReal w = d * half_pi * cosh(t) / (cosh_u * cosh_u);
    if (centre) {
      HPReal v = f(c);
      ++evaluations;
      check_finite(v);
      return HPReal(w * v);
    }
    // Distance to the endpoint, computed without cancellation.
    HPReal delta = d * 2 / (eu * eu + 1);
    HPReal left = f(a.with_bits(wp) + delta);
    HPReal right = f(b.with_bits(wp) - delta);
    evaluations += 2;
    check_finite(left);
    check_finite(right);
    return HPReal(w * (left + right));
  };

  QuadResult out;
  HPReal h = HPReal::from_long(1, wp);
  HPReal sum = pair_sum(HPReal(wp), true);
  for (long j = 1; static_cast<double>(j) <= t_max; ++j) sum += pair_sum(HPReal::from_long(j, wp), false);
  HPReal estimate = sum * h;
  HPReal previous = estimate;
  for (int level = 1; level <= opt.max_level; ++level) {
    h = ldexp(h, -1);
    const long count = static_cast<long>(std::ceil(t_max * std::ldexp(1.0, level)));
    for (long j = 1; j <= count; j += 2) sum += pair_sum(h * j, false);
    estimate = sum * h;
    HPReal diff = abs(estimate - previous);
    out.levels = level;
    if (level >= 3 && diff <= tolerance(estimate, opt, wp)) {
      out.value = estimate.with_bits(opt.bits);
      out.level_difference = diff;
      out.evaluations = evaluations;
      return out;
    }
    previous = estimate;
  }
  throw ConvergenceError("tanh-sinh quadrature did not converge in " + std::to_string(opt.max_level) + " levels");
}

QuadResult exp_sinh(const Integrand& f, const HPReal& a, const QuadOptions& opt) {
  const long wp = opt.bits + kGuardBits;
  const HPReal half_pi = ldexp(const_pi(wp), -1);
  const HPReal base = a.with_bits(wp);
  // Left cut: the node offset x - a drops below 2^-(2 wp).
  const double t_min = -std::asinh(2.0 * static_cast<double>(2 * wp) * std::log(2.0) / M_PI);
  long evaluations = 0;

  auto node = [&](const HPReal& t) {
    HPReal e = exp(half_pi * sinh(t));
    HPReal v = f(base + e);
    ++evaluations;
    check_finite(v);
    return HPReal(half_pi * cosh(t) * e * v);
  };

  // Right side runs until the weighted integrand is negligible for several
  // consecutive nodes.
  auto right_sum = [&](const HPReal& h, long start, long step, const HPReal& ref) {
    HPReal s(wp);
    int small = 0;
    for (long j = start;; j += step) {
      HPReal t = h * j;
      HPReal term = node(t);
      s += term;
      HPReal limit = ldexp(max(abs(ref), abs(s)), -wp - 8);
      if (abs(term) <= limit) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
      if (t > 12.0) throw ConvergenceError("exp-sinh integrand does not decay");
    }
    return s;
  };

  QuadResult out;
  HPReal h = HPReal::from_long(1, wp);
  HPReal sum(wp);
  for (long j = -1; static_cast<double>(j) >= t_min; --j) sum += node(HPReal::from_long(j, wp));
  sum += right_sum(h, 0, 1, sum);
  HPReal estimate = sum * h;
  HPReal previous = estimate;
  for (int level = 1; level <= opt.max_level; ++level) {
    h = ldexp(h, -1);
    const long count = static_cast<long>(std::ceil(-t_min * std::ldexp(1.0, level)));
    for (long j = -1; j >= -count; j -= 2) sum += node(h * j);
    sum += right_sum(h, 1, 2, sum);
    estimate = sum * h;
    HPReal diff = abs(estimate - previous);
    out.levels = level;
    if (level >= 3 && diff <= tolerance(estimate, opt, wp)) {
      out.value = estimate.with_bits(opt.bits);
      out.level_difference = diff;
      out.evaluations = evaluations;
      return out;
    }
    previous = estimate;
  }
  throw ConvergenceError("exp-sinh quadrature did not converge in " + std::to_string(opt.max_level) + " levels");
}

HPReal integrate(const Integrand& f, const HPReal& a, const HPReal& b, long bits) {
  QuadOptions opt;
  opt.bits = bits;
  return tanh_sinh(f, a, b, opt).value;
}

HPReal integrate_to_infinity(const Integrand& f, const HPReal& a, long bits) {
  QuadOptions opt;
  opt.bits = bits;
  return exp_sinh(f, a, opt).value;
}

}  // namespace ratgamma::quad
