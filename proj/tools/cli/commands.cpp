#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/gamma_expansions.hpp"
#include "ratgamma/identity_suite.hpp"
#include "ratgamma/io.hpp"
#include "ratgamma/oracle.hpp"
#include "ratgamma/series_factory.hpp"
#include "ratgamma/special_numbers.hpp"
#include "ratgamma/stirling.hpp"
#include "zarg.hpp"

namespace ratgamma::cli {

namespace {

struct Global {
  long bits = kDefaultBits;
  bool json = false;
  int digits = 0;
  std::string verify;
};

// Result of one subcommand: the table plus whether its built-in checks held.
struct Outcome {
  io::Table table;
  bool checks_ok = true;
  std::vector<std::string> notes;  // written to the diagnostic stream
};

using Handler = std::function<Outcome(const Global&)>;

std::string fmt(const HPReal& x, int digits) { return x.str(digits); }

// ---- stirling -------------------------------------------------------------

struct StirlingArgs {
  long nmax = 10;
  bool check_explicit = false;
};

Outcome cmd_stirling(const StirlingArgs& a) {
  if (a.nmax < 0) throw DomainError("--nmax must be >= 0");
  const StirlingTriangle t = build_triangle(a.nmax);
  Outcome o;
  o.table.header = {"n", "l", "s1", "abs_s1"};
  long mismatches = 0;
  for (long n = 0; n <= a.nmax; ++n) {
    for (long l = 0; l <= n; ++l) {
      const BigInt s = signed_s1(t, n, l);
      o.table.rows.push_back({std::to_string(n), std::to_string(l), s.get_str(), BigInt(abs(s)).get_str()});
      if (a.check_explicit && l >= 1 && explicit_formula(n, l) != s) ++mismatches;
    }
  }
  if (a.check_explicit) {
    o.checks_ok = mismatches == 0;
    o.notes.push_back("check-explicit: " + std::to_string(mismatches) + " mismatches against the double-sum formula");
  }
  return o;
}

// ---- numbers --------------------------------------------------------------

struct NumbersArgs {
  std::string kind;
  long nmin = 1;
  long nmax = 10;
};

Outcome cmd_numbers(const NumbersArgs& a) {
  std::function<Rational(long)> f;
  if (a.kind == "gregory") f = gregory;
  else if (a.kind == "cauchy2") f = cauchy2;
  else if (a.kind == "cauchy1") f = cauchy1;
  else if (a.kind == "binet-I") f = binet_I;
  else if (a.kind == "binet-Iprime") f = binet_Iprime;
  else if (a.kind == "binet-K") f = binet_K;
  else throw DomainError("unknown --kind '" + a.kind + "'");
  if (a.nmin < 0 || a.nmax < a.nmin) throw DomainError("need 0 <= --nmin <= --nmax");
  Outcome o;
  o.table.header = {"n", "value"};
  for (long n = a.nmin; n <= a.nmax; ++n) o.table.rows.push_back({std::to_string(n), f(n).str()});
  return o;
}

// ---- coeffs ---------------------------------------------------------------

struct CoeffsArgs {
  std::string series;
  long m = 0;
  long nmax = 10;
};

Outcome cmd_coeffs(const CoeffsArgs& a, const Global& g) {
  const CompositeKind kind = CompositeKind::parse(a.series, a.m);
  const CoeffSeries s = expand(kind, a.nmax);
  Outcome o;
  o.table.header = {"power", "coeff"};
  o.table.meta.emplace_back("series", kind.name());
  o.table.meta.emplace_back("radius", fmt(radius(kind, g.bits), g.digits));
  for (const auto& [p, c] : s.laurent_head) o.table.rows.push_back({std::to_string(p), c.str()});
  for (std::size_t n = 0; n < s.coeffs.size(); ++n) o.table.rows.push_back({std::to_string(n), s.coeffs[n].str()});
  return o;
}

// ---- expand / eval --------------------------------------------------------

struct SeriesArgs {
  std::string family;
  int k = 0;
  std::string z;
  long terms = 8;
  bool oracle = false;
  bool force = false;
  bool reduce = false;
  long exact_terms = kExactMax;
  long stride = 1;
};

Outcome cmd_expand(const SeriesArgs& a) {
  const ExpansionSpec spec = ExpansionSpec::parse(a.family, a.k);
  const ZArg z = parse_z(a.z);
  const auto e = z.exact();
  if (!e) throw DomainError("exact terms need an argument of the form m/2 + a/pi");
  if (a.terms < 1) throw DomainError("--terms must be >= 1");
  Outcome o;
  o.table.header = {"n", "bracket"};
  o.table.meta.emplace_back("series", spec.name());
  o.table.meta.emplace_back("z", z.str());
  RationalTermStream stream(spec, *e, a.force);
  for (long n = 1; n <= a.terms; ++n) {
    const Rational r = stream.next();
    o.table.rows.push_back({std::to_string(n), r.str()});
  }
  return o;
}

io::Table trace_rows(const ConvergenceTrace& tr, long stride, int digits) {
  io::Table t = io::trace_table(tr, digits);
  if (stride <= 1) return t;
  std::vector<std::vector<std::string>> kept;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const long n = tr.records[i].n;
    if (n % stride == 0 || n == 1 || i + 1 == t.rows.size()) kept.push_back(std::move(t.rows[i]));
  }
  t.rows = std::move(kept);
  return t;
}

// Adds a constant to the partial sums and reference of a trace.
void shift_trace(ConvergenceTrace& tr, const ComplexHP& c) {
  tr.prefix += c;
  if (tr.reference) *tr.reference += c;
  for (auto& r : tr.records) {
    r.partial_sum += c;
    if (tr.reference) {
      const HPReal den = abs(*tr.reference);
      const HPReal num = abs(r.partial_sum - *tr.reference);
      r.ref_error = den.is_zero() ? num : num / den;
    }
  }
}

Outcome cmd_eval(const SeriesArgs& a, const Global& g) {
  const ExpansionSpec spec = ExpansionSpec::parse(a.family, a.k);
  ZArg z = parse_z(a.z);
  if (a.terms < 1) throw DomainError("--terms must be >= 1");
  if (a.stride < 1) throw DomainError("--stride must be >= 1");
  Outcome o;
  std::optional<Reduction> red;
  if (a.reduce) {
    red = reduce(spec, z, g.bits);
    for (const auto& line : red->trail) o.notes.push_back("reduce: " + line);
    z = red->target;
  }
  EvalOptions opt;
  opt.bits = g.bits;
  opt.with_reference = a.oracle;
  opt.force = a.force;
  opt.exact_limit = a.exact_terms;
  if (const auto e = z.exact(); e && a.exact_terms > 0) {
    const bool want_half = spec.uses_shifted_variable();
    if ((e->z_half == 1) == want_half && (want_half || e->z_half == 0)) opt.exact = e;
  }
  auto traces = evaluate_series({spec}, z.value(g.bits), a.terms, opt);
  ConvergenceTrace& tr = traces.front();
  if (red && red->shift > 0) shift_trace(tr, red->correction);
  if (tr.forced) o.notes.push_back("note: " + spec.name() + " evaluated outside its convergence region on request");
  o.table = trace_rows(tr, a.stride, g.digits);
  if (red) {
    for (const auto& line : red->trail) o.table.meta.emplace_back("reduction", line);
  }
  return o;
}

// ---- identities -----------------------------------------------------------

struct IdentityArgs {
  std::vector<std::string> ids;
  std::vector<long> Ns{100, 1000, 10000};
  bool list = false;
};

Outcome cmd_identities(const IdentityArgs& a, const Global& g) {
  using namespace identities;
  Outcome o;
  if (a.list) {
    o.table.header = {"id", "description", "decay_class"};
    for (const auto& c : catalogue()) o.table.rows.push_back({c.id, c.description, c.decay_class});
    return o;
  }
  std::vector<long> Ns = a.Ns;
  std::sort(Ns.begin(), Ns.end());
  Ns.erase(std::unique(Ns.begin(), Ns.end()), Ns.end());
  if (Ns.empty() || Ns.front() < 4) throw DomainError("--N values must be >= 4");
  std::vector<const IdentityCase*> cases;
  if (a.ids.empty()) {
    for (const auto& c : catalogue()) cases.push_back(&c);
  } else {
    for (const auto& id : a.ids) cases.push_back(&find_case(id));
  }
  std::vector<CaseResult> results;
  for (const auto* c : cases) {
    results.push_back(run_case(*c, Ns, g.bits));
    const auto& r = results.back();
    std::ostringstream line;
    line.precision(3);
    line << r.id << ": fitted_c=" << r.fitted_c;
    if (Ns.size() >= 2) line << " slope=" << r.slope << " (expected " << c->poly_exponent << ")";
    line << (r.pass ? " pass" : " FAIL");
    o.notes.push_back(line.str());
    if (!r.pass) o.checks_ok = false;
  }
  o.table = io::identity_table(results, g.digits);
  return o;
}

// ---- bounds ---------------------------------------------------------------

struct BoundArgs {
  std::string kind;
  long nmin = 0;  // 0 selects the smallest n the bound form supports
  long nmax = 1000;
  bool full = false;
  long stride = 1;
};

Outcome bound_sweep(const BoundArgs& a, const Global& g) {
  const bool greg = a.kind == "gregory";
  if (!greg && a.kind != "cauchy2") throw DomainError("unknown --kind '" + a.kind + "'");
  if (a.stride < 1) throw DomainError("--stride must be >= 1");
  const BoundForm form = a.full ? BoundForm::Full : BoundForm::Simple;
  long nmin = a.nmin;
  if (nmin == 0) nmin = greg ? (a.full ? 3 : 5) : (a.full ? 2 : 3);
  if (a.nmax < nmin) throw DomainError("--nmax below the first supported index");
  Outcome o;
  o.table.header = io::split_header(io::kBoundHeader);
  long violations = 0;
  for (long n = nmin; n <= a.nmax; ++n) {
    const auto [lo, hi] = greg ? gregory_bounds(n, form, g.bits) : cauchy2_bounds(n, form, g.bits);
    const HPReal v = greg ? abs(gregory_hp(n, g.bits)) : cauchy2_ratio_hp(n, g.bits);
    if (v < lo || v > hi) ++violations;
    if ((n - nmin) % a.stride != 0 && n != a.nmax) continue;
    std::string exact;
    if (n <= kExactMax) {
      exact = greg ? gregory(n).abs().str() : (cauchy2(n) / Rational(factorial(static_cast<unsigned long>(n)))).str();
    }
    o.table.rows.push_back({std::to_string(n), exact, fmt(v, g.digits), fmt(lo, g.digits), fmt(hi, g.digits)});
  }
  o.checks_ok = violations == 0;
  o.notes.push_back("bounds: " + std::to_string(violations) + " violations for n in [" + std::to_string(nmin) + ", " +
                    std::to_string(a.nmax) + "]");
  return o;
}

// ---- figure ---------------------------------------------------------------

struct FigureArgs {
  int which = 0;
  long terms = 0;  // 0 selects the figure's default
  long stride = 1;
};

long or_default(long v, long d) { return v > 0 ? v : d; }

Outcome figure_trace(const std::string& family, int k, const std::string& z, long terms, bool force, long stride,
                     const Global& g) {
  SeriesArgs s;
  s.family = family;
  s.k = k;
  s.z = z;
  s.terms = terms;
  s.oracle = true;
  s.force = force;
  s.stride = stride;
  return cmd_eval(s, g);
}

Outcome cmd_figure(const FigureArgs& a, const Global& g) {
  Outcome o;
  switch (a.which) {
    case 1: {
      // Relative error of the arctan(arctanh) series for lnGamma(1/pi) - lnGamma(1/2 + 1/pi).
      const long N = or_default(a.terms, 10000);
      const auto ps = kx_integral_partial_sums(N, g.bits);
      const HPReal x = HPReal::from_long(1, g.bits + 16) / const_pi(g.bits + 16);
      const HPReal ref =
          (oracle::lngamma(x) - oracle::lngamma(x + ldexp(HPReal::from_long(1, g.bits + 16), -1))).with_bits(g.bits);
      o.table.header = {"n", "partial_sum", "ref_value", "rel_error"};
      for (long n = 1; n <= N; ++n) {
        if ((n - 1) % a.stride != 0 && n != N) continue;
        const HPReal& p = ps[static_cast<std::size_t>(n - 1)];
        o.table.rows.push_back({std::to_string(n), fmt(p, g.digits), fmt(ref, g.digits),
                                fmt(relative_error(p, ref), g.digits)});
      }
      return o;
    }
    case 2: {
      // Boundary curves y = +-ln(2 cos 2 pi x)/(2 pi) of the convergence strip 1/6 < x < 1/4.
      const long M = or_default(a.terms, 200);
      const long wp = g.bits;
      const HPReal pi = const_pi(wp);
      const HPReal sixth = HPReal::from_long(1, wp) / 6;
      const HPReal quarter = HPReal::from_long(1, wp) / 4;
      o.table.header = {"x", "y_upper", "y_lower"};
      for (long i = 0; i < M; ++i) {
        const HPReal x = sixth + (quarter - sixth) * HPReal::from_long(i, wp) / M;
        const HPReal c = 2 * cos(2 * pi * x);
        const HPReal y = -log(c) / (2 * pi);
        o.table.rows.push_back({fmt(x, g.digits), fmt(y, g.digits), fmt(-y, g.digits)});
      }
      return o;
    }
    case 3: {
      // Ratio between the integral term bound and the modulus of the general term.
      const long N = or_default(a.terms, 200);
      o.table.header = {"z", "n", "general_term", "bound", "rel_gap"};
      for (const char* zs : {"1/pi", "1/2", "1"}) {
        const ZArg z = parse_z(zs);
        const ComplexHP zv = z.value(g.bits);
        const HPReal alpha = term_upper_bound(zv, g.bits);
        for (long n = 1; n <= N; ++n) {
          if ((n - 1) % a.stride != 0 && n != N) continue;
          const HPReal t = abs(general_term(n, zv, g.bits));
          const HPReal b = alpha / HPReal::from_long(n * n, g.bits);
          o.table.rows.push_back(
              {z.str(), std::to_string(n), fmt(t, g.digits), fmt(b, g.digits), fmt((b - t) / t, g.digits)});
        }
      }
      return o;
    }
    case 4: return figure_trace("LNGAMMA_1", 0, "1/pi", or_default(a.terms, 1000), false, a.stride, g);
    case 5: return figure_trace("LNGAMMA_1", 0, "1/2pi", or_default(a.terms, 120), true, a.stride, g);
    case 6: {
      const long N = or_default(a.terms, 1000);
      EvalOptions opt;
      opt.bits = g.bits;
      opt.with_reference = true;
      const auto traces = evaluate_series({ExpansionSpec{Family::PSI_K_1, 0}, ExpansionSpec{Family::PSI_K_1, 1}},
                                          parse_z("1/pi").value(g.bits), N, opt);
      o.table.header = {"series", "n", "partial_sum", "ref_value", "rel_error"};
      for (const auto& tr : traces) {
        for (const auto& r : tr.records) {
          if ((r.n - 1) % a.stride != 0 && r.n != N) continue;
          o.table.rows.push_back({tr.spec.name(), std::to_string(r.n), r.partial_sum.str(g.digits),
                                  tr.reference->str(g.digits), fmt(*r.ref_error, g.digits)});
        }
      }
      return o;
    }
    case 7:
    case 8: {
      BoundArgs b;
      b.kind = a.which == 7 ? "cauchy2" : "gregory";
      b.nmax = or_default(a.terms, 1000);
      b.stride = a.stride;
      return bound_sweep(b, g);
    }
    default: throw DomainError("--which must be one of 1..8");
  }
}

// ---- verification ---------------------------------------------------------

bool cells_match(const std::string& a, const std::string& b, long bits) {
  if (a == b) return true;
  if (a.empty() || b.empty()) return false;
  try {
    return HPReal::from_string(a, bits) == HPReal::from_string(b, bits);
  } catch (const std::exception&) {
    return false;
  }
}

bool verify_table(const io::Table& fresh, const std::string& path, long bits, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  const io::Table saved = io::read_csv(in);
  if (saved.header != fresh.header) {
    err << "verify: header mismatch\n";
    return false;
  }
  if (saved.rows.size() != fresh.rows.size()) {
    err << "verify: " << saved.rows.size() << " rows saved, " << fresh.rows.size() << " recomputed\n";
    return false;
  }
  for (std::size_t i = 0; i < saved.rows.size(); ++i) {
    for (std::size_t j = 0; j < saved.header.size(); ++j) {
      if (!cells_match(saved.rows[i][j], fresh.rows[i][j], bits)) {
        err << "verify: row " << i + 1 << " column " << saved.header[j] << ": saved " << saved.rows[i][j]
            << ", recomputed " << fresh.rows[i][j] << "\n";
        return false;
      }
    }
  }
  err << "verify: " << saved.rows.size() << " rows match\n";
  return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stirling-number series for ln Gamma, polygamma and related constants", "ratgamma"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--bits", g.bits, "working precision in bits")
      ->envname("RATGAMMA_BITS")
      ->check(CLI::Range(kMinBits, 1L << 20));
  app.add_flag("--json", g.json, "emit JSON instead of CSV");
  app.add_option("--digits", g.digits, "significant digits for floating values (0: round-trip)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--verify", g.verify, "recompute and compare against a CSV written earlier with the same flags");

  Handler handler;

  StirlingArgs st;
  auto* c_st = app.add_subcommand("stirling", "Stirling numbers of the first kind, signed and unsigned");
  c_st->add_option("--nmax", st.nmax, "largest row")->required();
  c_st->add_flag("--check-explicit", st.check_explicit, "compare every entry with the explicit double-sum formula");
  c_st->callback([&] { handler = [&](const Global&) { return cmd_stirling(st); }; });

  NumbersArgs nu;
  auto* c_nu = app.add_subcommand("numbers", "exact Gregory, Cauchy and Binet numbers");
  c_nu->add_option("--kind", nu.kind, "gregory|cauchy2|cauchy1|binet-I|binet-Iprime|binet-K")->required();
  c_nu->add_option("--nmin", nu.nmin, "first index");
  c_nu->add_option("--nmax", nu.nmax, "last index")->required();
  c_nu->callback([&] { handler = [&](const Global&) { return cmd_numbers(nu); }; });

  CoeffsArgs co;
  auto* c_co = app.add_subcommand("coeffs", "MacLaurin coefficients of composite logarithmic functions");
  c_co->add_option("--series", co.series, "e.g. SINH_LN, INV_LOG_POW, ARCTAN_ARCTANH")->required();
  c_co->add_option("--m", co.m, "power parameter for INV_LOG_POW, LOGPOW_OVER_1PZ and ARCTANH_POW");
  c_co->add_option("--nmax", co.nmax, "largest power")->required();
  c_co->callback([&] { handler = [&](const Global& gg) { return cmd_coeffs(co, gg); }; });

  SeriesArgs ex;
  auto* c_ex = app.add_subcommand("expand", "exact rational bracket terms at z = m/2 + a/pi");
  c_ex->add_option("--family", ex.family, "LNGAMMA_1|HALFSHIFT|SHIFTED|PSI_K_1|PSI_K_2")->required();
  c_ex->add_option("--k", ex.k, "polygamma order");
  c_ex->add_option("--z", ex.z, "argument, e.g. 1/pi, 1/2+1/pi")->required();
  c_ex->add_option("--terms", ex.terms, "number of terms");
  c_ex->add_flag("--force-divergent", ex.force, "allow arguments outside the convergence region");
  c_ex->callback([&] { handler = [&](const Global&) { return cmd_expand(ex); }; });

  SeriesArgs ev;
  auto* c_ev = app.add_subcommand("eval", "partial sums of an expansion, optionally against the reference");
  c_ev->add_option("--family", ev.family, "LNGAMMA_1|HALFSHIFT|SHIFTED|PSI_K_1|PSI_K_2")->required();
  c_ev->add_option("--k", ev.k, "polygamma order");
  c_ev->add_option("--z", ev.z, "argument")->required();
  c_ev->add_option("--terms", ev.terms, "number of terms");
  c_ev->add_flag("--oracle", ev.oracle, "add reference values and relative errors");
  c_ev->add_flag("--force-divergent", ev.force, "allow arguments outside the convergence region");
  c_ev->add_flag("--reduce", ev.reduce, "shift the argument into the region by the recurrence");
  c_ev->add_option("--exact-terms", ev.exact_terms, "fill bracket_exact up to this n (0: never)");
  c_ev->add_option("--stride", ev.stride, "print every stride-th term");
  c_ev->callback([&] { handler = [&](const Global& gg) { return cmd_eval(ev, gg); }; });

  IdentityArgs id;
  auto* c_id = app.add_subcommand("identities", "Stirling-number identities against their closed forms");
  c_id->add_option("--id", id.ids, "case id (repeatable); default all");
  c_id->add_option("--N", id.Ns, "truncation points (repeatable)")->delimiter(',');
  c_id->add_flag("--list", id.list, "list the registered cases");
  c_id->callback([&] { handler = [&](const Global& gg) { return cmd_identities(id, gg); }; });

  BoundArgs bo;
  auto* c_bo = app.add_subcommand("bounds", "two-sided bounds for |G_n| or C2_n/n!");
  c_bo->add_option("--kind", bo.kind, "gregory|cauchy2")->required();
  c_bo->add_option("--nmin", bo.nmin, "first index");
  c_bo->add_option("--nmax", bo.nmax, "last index")->required();
  c_bo->add_flag("--full", bo.full, "use the longer, sharper bound form");
  c_bo->add_option("--stride", bo.stride, "print every stride-th index (all are checked)");
  c_bo->callback([&] { handler = [&](const Global& gg) { return bound_sweep(bo, gg); }; });

  FigureArgs fi;
  auto* c_fi = app.add_subcommand("figure", "plot data for the convergence and bound figures");
  c_fi->add_option("--which", fi.which, "1..8")->required();
  c_fi->add_option("--terms", fi.terms, "number of points (figure default if omitted)");
  c_fi->add_option("--stride", fi.stride, "print every stride-th point");
  c_fi->callback([&] { handler = [&](const Global& gg) { return cmd_figure(fi, gg); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Outcome o = handler(g);
    for (const auto& n : o.notes) err << n << "\n";
    if (!g.verify.empty()) {
      const bool same = verify_table(o.table, g.verify, g.bits, err);
      return same && o.checks_ok ? kExitOk : kExitFailedCheck;
    }
    if (g.json) {
      out << io::to_json(o.table) << "\n";
    } else {
      io::write_csv(out, o.table);
    }
    return o.checks_ok ? kExitOk : kExitFailedCheck;
  } catch (const RegionError& e) {
    err << "error: " << e.what() << " (use --force-divergent or --reduce)\n";
    return kExitRegion;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailedCheck;
  }
}

}  // namespace ratgamma::cli
