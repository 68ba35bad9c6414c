#include <cmath>
#include <memory>
#include <string>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/gamma_expansions.hpp"
#include "ratgamma/oracle.hpp"
#include "sweep.hpp"

namespace ratgamma {

namespace {

// term_n = to_term * bracket_n, bracket_n = to_bracket * inner_n / n.
struct FamilySetup {
  detail::WeightSpec weights;
  ComplexHP to_bracket;
  ComplexHP to_term;
  ComplexHP prefix;
};

double log_abs(const ComplexHP& z) { return std::log(abs(z).to_double()); }

FamilySetup setup_family(const ExpansionSpec& spec, const ComplexHP& z, long wp) {
  if (spec.k < 0) throw DomainError("polygamma order must be >= 0");
  const HPReal pi = const_pi(wp);
  const HPReal one = HPReal::from_long(1, wp);
  const HPReal half = ldexp(one, -1);
  const ComplexHP zz(z.re.with_bits(wp), z.im.with_bits(wp));
  const ComplexHP y = zz - half;
  const ComplexHP half_ln_2pi(ldexp(oracle::ln_2pi(wp), -1));
  FamilySetup f;
  const int k = spec.k;
  switch (spec.family) {
    case Family::LNGAMMA_1: {
      const ComplexHP x = reciprocal(zz * HPReal(2 * pi));
      f.weights = {0, false, x, 0.0, true};
      f.to_bracket = reciprocal(x);
      f.to_term = x / pi;
      f.prefix = (zz - half) * log(zz) - zz + half_ln_2pi;
      break;
    }
    case Family::LNGAMMA_2_HALFSHIFT: {
      const ComplexHP x = reciprocal(zz * HPReal(4 * pi));
      f.weights = {0, true, x, 0.0, true};
      f.to_bracket = reciprocal(x);
      f.to_term = -(x / pi);
      f.prefix = zz * log(zz) - zz + half_ln_2pi;
      break;
    }
    case Family::LNGAMMA_2_SHIFTED: {
      const ComplexHP x = reciprocal(y * HPReal(4 * pi));
      f.weights = {0, true, x, 0.0, true};
      f.to_bracket = reciprocal(x);
      f.to_term = -(x / pi);
      f.prefix = y * log(y) - y + half_ln_2pi;
      break;
    }
    case Family::PSI_K_1: {
      const ComplexHP x = reciprocal(zz * HPReal(2 * pi));
      const long sigma = (k + 1) % 2 ? -1 : 1;
      f.to_bracket = ComplexHP(HPReal::from_long(sigma, wp));
      f.to_term = reciprocal(pow(zz, k + 1) * pi);
      if (k == 0) {
        f.prefix = log(zz) - reciprocal(zz) * half;
      } else {
        const HPReal fk = HPReal::from_bigint(factorial(static_cast<unsigned long>(k)), wp);
        const HPReal fk1 = HPReal::from_bigint(factorial(static_cast<unsigned long>(k - 1)), wp);
        f.prefix = reciprocal(pow(zz, k + 1)) * HPReal(fk * half) + reciprocal(pow(zz, k)) * fk1;
        if (sigma < 0) f.prefix = -f.prefix;
      }
      f.weights = {k + 1, false, x, log_abs(f.to_term), true};
      break;
    }
    case Family::PSI_K_2: {
      const ComplexHP x = reciprocal(y * HPReal(4 * pi));
      const long sigma = k % 2 ? -1 : 1;
      f.to_bracket = ComplexHP(HPReal::from_long(sigma, wp));
      f.to_term = reciprocal(pow(y, k + 1) * pi);
      if (k == 0) {
        f.prefix = log(y);
      } else {
        f.prefix = reciprocal(pow(y, k)) * HPReal::from_bigint(factorial(static_cast<unsigned long>(k - 1)), wp);
        if (k % 2 == 0) f.prefix = -f.prefix;
      }
      f.weights = {k + 1, true, x, log_abs(f.to_term), true};
      break;
    }
  }
  return f;
}

ComplexHP round_to(const ComplexHP& z, long bits) { return ComplexHP(z.re.with_bits(bits), z.im.with_bits(bits)); }

}  // namespace

ComplexHP reference_value(const ExpansionSpec& spec, const ComplexHP& z, long bits) {
  const auto cfg = oracle::default_config(bits);
  switch (spec.family) {
    case Family::LNGAMMA_1:
    case Family::LNGAMMA_2_SHIFTED: return oracle::lngamma(z, cfg);
    case Family::LNGAMMA_2_HALFSHIFT: return oracle::lngamma(z + ldexp(HPReal::from_long(1, bits), -1), cfg);
    case Family::PSI_K_1:
    case Family::PSI_K_2: return oracle::polygamma(spec.k, z, cfg);
  }
  throw DomainError("unknown family");
}

std::vector<ConvergenceTrace> evaluate_series(const std::vector<ExpansionSpec>& specs, const ComplexHP& z, long N,
                                              const EvalOptions& opt) {
  if (N < 1) throw DomainError("number of terms must be >= 1");
  if (opt.bits < kMinBits) throw DomainError("precision below minimum");
  const long bits = opt.bits;
  const long wp = bits + 40;

  std::vector<ConvergenceTrace> traces(specs.size());
  std::vector<FamilySetup> setups;
  std::vector<detail::WeightSpec> weights;
  std::vector<std::unique_ptr<RationalTermStream>> streams;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    auto& t = traces[i];
    t.spec = specs[i];
    t.z = z;
    t.region = region_for(specs[i], z);
    if (t.region != Region::Converges) {
      if (!opt.force) throw RegionError(specs[i].name() + " at z = " + z.str(12) + ": " + to_string(t.region));
      t.forced = true;
    }
    setups.push_back(setup_family(specs[i], z, wp));
    weights.push_back(setups.back().weights);
    t.prefix = round_to(setups.back().prefix, bits);
    if (opt.with_reference) t.reference = reference_value(specs[i], z, bits);
    streams.push_back(opt.exact ? std::make_unique<RationalTermStream>(specs[i], *opt.exact, opt.force) : nullptr);
    t.records.reserve(static_cast<std::size_t>(N));
  }

  const detail::SweepPlan plan = detail::plan_sweep(weights, N, bits);
  std::vector<ComplexHP> sums;
  for (auto& s : setups) {
    ComplexHP p(s.prefix.re.with_bits(plan.bits), s.prefix.im.with_bits(plan.bits));
    sums.push_back(p);
  }
  for (auto& t : traces) t.working_bits = plan.bits;

  detail::run_sweep(weights, N, plan, [&](long n, const std::vector<ComplexHP>& inner) {
    for (std::size_t i = 0; i < specs.size(); ++i) {
      ComplexHP bracket = inner[i] * setups[i].to_bracket / n;
      ComplexHP term = bracket * setups[i].to_term;
      sums[i] += term;
      TermRecord r;
      r.n = n;
      if (streams[i] && n <= opt.exact_limit) r.bracket_exact = streams[i]->next();
      r.bracket = round_to(bracket, bits);
      r.term = round_to(term, bits);
      r.partial_sum = round_to(sums[i], bits);
      if (traces[i].reference) {
        const ComplexHP& ref = *traces[i].reference;
        r.ref_error = HPReal(abs(sums[i] - ref) / abs(ref)).with_bits(bits);
      }
      traces[i].records.push_back(std::move(r));
    }
  });
  return traces;
}

ConvergenceTrace lngamma_series1(const ComplexHP& z, long N, const EvalOptions& opt) {
  return evaluate_series({ExpansionSpec{Family::LNGAMMA_1, 0}}, z, N, opt).front();
}

ConvergenceTrace lngamma_series2(const ComplexHP& z, long N, Lngamma2Variant variant, const EvalOptions& opt) {
  const Family f = variant == Lngamma2Variant::HALFSHIFT ? Family::LNGAMMA_2_HALFSHIFT : Family::LNGAMMA_2_SHIFTED;
  return evaluate_series({ExpansionSpec{f, 0}}, z, N, opt).front();
}

ConvergenceTrace polygamma_series(int k, const ComplexHP& z, long N, PolygammaVariant variant, const EvalOptions& opt) {
  if (k < 0) throw DomainError("polygamma order must be >= 0");
  const Family f = variant == PolygammaVariant::V1 ? Family::PSI_K_1 : Family::PSI_K_2;
  return evaluate_series({ExpansionSpec{f, k}}, z, N, opt).front();
}

}  // namespace ratgamma
