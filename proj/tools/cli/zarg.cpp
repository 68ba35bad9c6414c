#include "zarg.hpp"

#include <cctype>

#include "ratgamma/core/errors.hpp"

namespace ratgamma::cli {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void add_term(ZArg& z, const std::string& term, bool negative, const std::string& text) {
  if (term.empty()) throw DomainError("malformed argument '" + text + "'");
  std::string body = term;
  bool over_pi = false;
  if (ends_with(body, "pi")) {
    over_pi = true;
    body.resize(body.size() - 2);
    if (!body.empty() && body.back() == '/') body.pop_back();
    if (body.empty()) throw DomainError("'pi' on its own is not a supported argument term in '" + text + "'");
  }
  Rational r;
  try {
    r = Rational::parse(body);
  } catch (const Error&) {
    throw DomainError("cannot parse '" + term + "' in argument '" + text + "'");
  }
  if (negative) r = -r;
  if (over_pi) z.pi_part += r;
  else z.real_part += r;
}

}  // namespace

ComplexHP ZArg::value(long bits) const {
  const long wp = bits + 16;
  HPReal v = HPReal::from_rational(real_part, wp) + HPReal::from_rational(pi_part, wp) / const_pi(wp);
  return ComplexHP(v.with_bits(bits));
}

std::optional<ExactArg> ZArg::exact() const {
  const Rational twice = real_part * Rational(2);
  if (!twice.is_integer()) return std::nullopt;
  ExactArg e;
  e.z_half = twice.num().get_si();
  e.z_num = pi_part;
  return e;
}

std::string ZArg::str() const {
  std::string out;
  if (!real_part.is_zero() || pi_part.is_zero()) out = real_part.str();
  if (!pi_part.is_zero()) {
    if (!out.empty()) out += pi_part.sign() > 0 ? "+" : "-";
    else if (pi_part.sign() < 0) out += "-";
    out += pi_part.abs().str() + "/pi";
  }
  return out;
}

ZArg parse_z(const std::string& text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw DomainError("empty argument");
  ZArg z;
  std::string term;
  bool negative = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    i = 1;
  }
  for (; i < s.size(); ++i) {
    const char c = s[i];
    // A sign after 'e' belongs to a decimal exponent.
    const bool exponent_sign = !term.empty() && (term.back() == 'e' || term.back() == 'E');
    if ((c == '+' || c == '-') && !exponent_sign) {
      add_term(z, term, negative, text);
      term.clear();
      negative = c == '-';
    } else {
      term.push_back(c);
    }
  }
  add_term(z, term, negative, text);
  return z;
}

Reduction reduce(const ExpansionSpec& spec, const ZArg& z, long bits) {
  Reduction r;
  r.correction = ComplexHP(bits);
  const auto in_region = [&](const ZArg& w) {
    const ComplexHP v = w.value(bits);
    const ComplexHP var = spec.uses_shifted_variable() ? v - ldexp(HPReal::from_long(1, bits), -1) : v;
    if (var.re <= 0.0) return false;
    return region_for(spec, v) == Region::Converges;
  };
  long m = 0;
  while (!in_region(z.shifted(m))) {
    ++m;
    if (m > 1'000'000) throw DomainError("argument too far from the convergence region");
  }
  r.target = z.shifted(m);
  r.shift = m;
  if (m == 0) {
    r.trail.push_back("z = " + z.str() + " already lies in the convergence region");
    return r;
  }
  // For HALFSHIFT the series gives lnGamma(z + 1/2), so its factors are z + 1/2 + j.
  const bool half = spec.family == Family::LNGAMMA_2_HALFSHIFT;
  const ComplexHP base = z.value(bits) + (half ? ldexp(HPReal::from_long(1, bits), -1) : HPReal(bits));
  const std::string arg = half ? "(" + z.str() + ")+1/2" : z.str();
  for (long j = 0; j < m; ++j) {
    const ComplexHP f = base + j;
    if (f.re.is_zero() && f.im.is_zero()) throw PoleError("argument " + z.str() + " is a pole");
    if (spec.is_polygamma()) {
      // psi_k(w) = psi_k(w+1) - (-1)^k k! / w^{k+1}
      HPReal kf = HPReal::from_bigint(factorial(static_cast<unsigned long>(spec.k)), bits);
      ComplexHP t = reciprocal(pow(f, spec.k + 1)) * kf;
      if (spec.k % 2) r.correction += t;
      else r.correction -= t;
    } else {
      r.correction -= log(f);
    }
  }
  const std::string fname = spec.is_polygamma() ? "psi_" + std::to_string(spec.k) : "lnGamma";
  if (spec.is_polygamma()) {
    r.trail.push_back(fname + "(" + arg + ") = " + fname + "(" + arg + "+" + std::to_string(m) + ") - (-1)^" +
                      std::to_string(spec.k) + " " + std::to_string(spec.k) + "! sum_{j=0}^{" +
                      std::to_string(m - 1) + "} (" + arg + "+j)^-" + std::to_string(spec.k + 1));
  } else {
    r.trail.push_back(fname + "(" + arg + ") = " + fname + "(" + arg + "+" + std::to_string(m) + ") - sum_{j=0}^{" +
                      std::to_string(m - 1) + "} ln(" + arg + "+j)");
  }
  r.trail.push_back("series argument " + r.target.str() + ", correction " + r.correction.str(20));
  return r;
}

}  // namespace ratgamma::cli
