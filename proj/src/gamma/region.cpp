#include <cctype>
#include <string>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/gamma_expansions.hpp"

namespace ratgamma {

std::string ExpansionSpec::name() const {
  switch (family) {
    case Family::LNGAMMA_1: return "LNGAMMA_1";
    case Family::LNGAMMA_2_HALFSHIFT: return "LNGAMMA_2_HALFSHIFT";
    case Family::LNGAMMA_2_SHIFTED: return "LNGAMMA_2_SHIFTED";
    case Family::PSI_K_1: return "PSI_K_1(" + std::to_string(k) + ")";
    case Family::PSI_K_2: return "PSI_K_2(" + std::to_string(k) + ")";
  }
  return "?";
}

ExpansionSpec ExpansionSpec::parse(const std::string& family, int k) {
  std::string f;
  for (char c : family) f.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  // Accept "PSI_K_1(2)" as well as a separate k.
  const auto open = f.find('(');
  if (open != std::string::npos && f.back() == ')') {
    k = std::stoi(f.substr(open + 1, f.size() - open - 2));
    f = f.substr(0, open);
  }
  if (k < 0) throw DomainError("polygamma order must be >= 0");
  std::string g;  // separators dropped: "lngamma_1", "LNGAMMA1" and "lngamma-1" coincide
  for (char c : f) {
    if (c != '_' && c != '-') g.push_back(c);
  }
  if (g == "LNGAMMA1" || g == "LNGAMMA") return {Family::LNGAMMA_1, 0};
  if (g == "LNGAMMA2HALFSHIFT" || g == "HALFSHIFT" || g == "LNGAMMA2") return {Family::LNGAMMA_2_HALFSHIFT, 0};
  if (g == "LNGAMMA2SHIFTED" || g == "SHIFTED") return {Family::LNGAMMA_2_SHIFTED, 0};
  if (g == "PSIK1" || g == "PSI1" || g == "V1" || g == "PSI") return {Family::PSI_K_1, k};
  if (g == "PSIK2" || g == "PSI2" || g == "V2") return {Family::PSI_K_2, k};
  throw DomainError("unknown expansion family '" + family + "'");
}

std::string to_string(Region r) {
  switch (r) {
    case Region::Converges: return "converges";
    case Region::Diverges: return "diverges";
    case Region::Boundary: return "boundary";
  }
  return "?";
}

Region in_convergence_region(const ComplexHP& z) {
  if (z.re <= 0.0) throw DomainError("convergence region requires Re z > 0");
  const long bits = z.bits();
  const HPReal x = z.re;
  if (x >= 0.25) return Region::Converges;
  const HPReal sixth = HPReal::from_long(1, bits) / 6;
  if (x < sixth) return Region::Diverges;
  const HPReal pi = const_pi(bits);
  const HPReal lhs = 2 * cos(2 * pi * x);
  const HPReal rhs = exp(-2 * pi * abs(z.im));
  const HPReal diff = lhs - rhs;
  if (abs(diff) <= ldexp(HPReal::from_long(1, bits), -(bits - 8))) return Region::Boundary;
  return diff < 0.0 ? Region::Converges : Region::Diverges;
}

Region region_for(const ExpansionSpec& spec, const ComplexHP& z) {
  if (!spec.uses_shifted_variable()) return in_convergence_region(z);
  ComplexHP y = z - ldexp(HPReal::from_long(1, z.bits()), -1);
  if (y.re <= 0.0) return Region::Diverges;
  return in_convergence_region(y);
}

ComplexHP ExactArg::value(long bits) const {
  HPReal v = HPReal::from_long(z_half, bits) / 2 + HPReal::from_rational(z_num, bits) / const_pi(bits);
  return ComplexHP(v);
}

std::string ExactArg::str() const {
  std::string out;
  if (z_half != 0) out = std::to_string(z_half) + "/2";
  if (!z_num.is_zero()) {
    if (!out.empty()) out += z_num.sign() > 0 ? "+" : "";
    out += "(" + z_num.str() + ")/pi";
  }
  return out.empty() ? "0" : out;
}

}  // namespace ratgamma
