#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratgamma/core/complex_hp.hpp"
#include "ratgamma/core/hpreal.hpp"
#include "ratgamma/core/rational.hpp"

namespace ratgamma {

enum class Family { LNGAMMA_1, LNGAMMA_2_HALFSHIFT, LNGAMMA_2_SHIFTED, PSI_K_1, PSI_K_2 };

struct ExpansionSpec {
  Family family = Family::LNGAMMA_1;
  int k = 0;  // polygamma order for PSI_K_1 / PSI_K_2

  std::string name() const;
  static ExpansionSpec parse(const std::string& family, int k = 0);
  bool is_polygamma() const { return family == Family::PSI_K_1 || family == Family::PSI_K_2; }
  // Families whose series variable is z - 1/2.
  bool uses_shifted_variable() const { return family == Family::LNGAMMA_2_SHIFTED || family == Family::PSI_K_2; }
};

enum class Region { Converges, Diverges, Boundary };
std::string to_string(Region r);

// Convergence region of the Stirling-coefficient series in the variable z:
// Re z >= 1/4, or 1/6 < Re z < 1/4 with 2 cos(2 pi Re z) < exp(-2 pi |Im z|).
// Points on the curve report Boundary. Throws DomainError for Re z <= 0.
Region in_convergence_region(const ComplexHP& z);
// Region of the series variable used by spec (z or z - 1/2).
Region region_for(const ExpansionSpec& spec, const ComplexHP& z);

// z = z_half/2 + z_num/pi.
struct ExactArg {
  long z_half = 0;
  Rational z_num;
  ComplexHP value(long bits) const;
  std::string str() const;
};

struct TermRecord {
  long n = 0;
  std::optional<Rational> bracket_exact;
  ComplexHP bracket;
  ComplexHP term;
  ComplexHP partial_sum;
  std::optional<HPReal> ref_error;  // relative error of partial_sum against the oracle
};

struct ConvergenceTrace {
  ExpansionSpec spec;
  ComplexHP z;
  Region region = Region::Converges;
  bool forced = false;  // evaluated outside the region on request
  long working_bits = 0;
  ComplexHP prefix;
  std::vector<TermRecord> records;
  std::optional<ComplexHP> reference;

  const ComplexHP& value() const { return records.empty() ? prefix : records.back().partial_sum; }
};

struct EvalOptions {
  long bits = kDefaultBits;
  bool with_reference = false;
  bool force = false;  // allow evaluation outside the convergence region
  std::optional<ExactArg> exact;  // fills bracket_exact when set
  long exact_limit = 400;         // largest n with an exact bracket
};

// ln Gamma(z), or ln Gamma(1/2 + z) for HALFSHIFT.
ConvergenceTrace lngamma_series1(const ComplexHP& z, long N, const EvalOptions& opt = {});
enum class Lngamma2Variant { HALFSHIFT, SHIFTED };
ConvergenceTrace lngamma_series2(const ComplexHP& z, long N, Lngamma2Variant variant, const EvalOptions& opt = {});
enum class PolygammaVariant { V1, V2 };
ConvergenceTrace polygamma_series(int k, const ComplexHP& z, long N, PolygammaVariant variant, const EvalOptions& opt = {});

// Evaluates several specs at one z with a single Stirling row sweep.
std::vector<ConvergenceTrace> evaluate_series(const std::vector<ExpansionSpec>& specs, const ComplexHP& z, long N,
                                              const EvalOptions& opt = {});

// Function approximated by the series for spec, from the reference oracle.
ComplexHP reference_value(const ExpansionSpec& spec, const ComplexHP& z, long bits);

// Exact bracket terms for z = z_half/2 + z_num/pi. LNGAMMA_1, PSI_K_1 and
// HALFSHIFT need z_half = 0; SHIFTED and PSI_K_2 need z_half = 1.
class RationalTermStream {
 public:
  RationalTermStream(const ExpansionSpec& spec, const ExactArg& z, bool force = false);
  Rational next();
  long n() const { return n_; }

 private:
  ExpansionSpec spec_;
  long s_ = 0;
  bool twofold_ = false;
  Rational x_;
  Rational sign_;
  long n_ = 0;
  std::vector<BigInt> row_;  // |S1(n,k)|, k = 0..n
  BigInt fact_ = 1;
};

std::vector<Rational> rational_term_stream(const ExpansionSpec& spec, const ExactArg& z, long count, bool force = false);

// alpha(z) = (1/pi) int_0^inf sqrt(sinh t / t) exp(-2 z t) dt, so that the
// n-th general term of the first ln Gamma series is at most alpha/n^2 in modulus.
// Uses Re z; throws DomainError for Re z <= 1/4.
HPReal term_upper_bound(const ComplexHP& z, long bits);

// General term (1/(n n!)) sum_l (-1)^l (2l)! |S1(n,2l+1)| / (2 pi z)^{2l+1}.
ComplexHP general_term(long n, const ComplexHP& z, long bits);

// Large-n form of general_term using `order` MacLaurin coefficients of 1/Gamma.
ComplexHP term_asymptotic(long n, const ComplexHP& z, int order, long bits);

// Partial sums over n <= N of (1/n!) sum_l (-1)^l (2l)! |S1(n,2l+1)| / (2 pi z)^{2l+1}; the limit is pi/2.
ComplexHP pi_over_2_identity(const ComplexHP& z, long N, long bits, bool force = false);

// (1/2) ln pi + (1/pi) sum_{n<N} A_n/(2n+1) with A_n the arctan(arctanh x)
// coefficients; tends to ln Gamma(1/pi) - ln Gamma(1/2 + 1/pi).
HPReal kx_integral_series(long N, long bits);
std::vector<HPReal> kx_integral_partial_sums(long N, long bits);

}  // namespace ratgamma
