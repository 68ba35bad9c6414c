#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratgamma/core/complex_hp.hpp"
#include "ratgamma/core/rational.hpp"
#include "ratgamma/gamma_expansions.hpp"

namespace ratgamma::cli {

// z = real_part + pi_part/pi, both exact.
struct ZArg {
  Rational real_part;
  Rational pi_part;

  ComplexHP value(long bits) const;
  // Exact form m/2 + a/pi when 2*real_part is an integer.
  std::optional<ExactArg> exact() const;
  ZArg shifted(long m) const { return {real_part + Rational(m), pi_part}; }
  std::string str() const;
};

// Grammar: a sum of terms separated by '+' or '-', each either a rational
// ("1/2", "3", "0.25") or a rational over pi ("1/pi", "3/4/pi", "1/2pi" meaning 1/(2 pi)).
ZArg parse_z(const std::string& text);

// f(z) = f(target) + correction, where f is the function approximated by spec.
struct Reduction {
  ZArg target;
  long shift = 0;
  ComplexHP correction;
  std::vector<std::string> trail;
};

// Smallest upward shift by the recurrence that lands the series variable in
// the convergence region. Throws PoleError at the poles.
Reduction reduce(const ExpansionSpec& spec, const ZArg& z, long bits);

}  // namespace ratgamma::cli
