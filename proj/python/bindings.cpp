#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include <complex>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/gamma_expansions.hpp"
#include "ratgamma/identity_suite.hpp"
#include "ratgamma/oracle.hpp"
#include "ratgamma/series_factory.hpp"
#include "ratgamma/special_numbers.hpp"
#include "ratgamma/stirling.hpp"

namespace py = pybind11;
using namespace ratgamma;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python package turns them into Fractions.
std::vector<std::string> strs(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

ComplexHP to_hp(std::complex<double> z, long bits) {
  return ComplexHP(HPReal::from_double(z.real(), bits), HPReal::from_double(z.imag(), bits));
}

std::complex<double> to_py(const ComplexHP& z) { return {z.re.to_double(), z.im.to_double()}; }

py::dict trace_dict(const ConvergenceTrace& t) {
  std::vector<long> n;
  std::vector<std::complex<double>> partial;
  std::vector<double> rel;
  for (const auto& r : t.records) {
    n.push_back(r.n);
    partial.push_back(to_py(r.partial_sum));
    if (r.ref_error) rel.push_back(r.ref_error->to_double());
  }
  py::dict d;
  d["series"] = t.spec.name();
  d["region"] = to_string(t.region);
  d["forced"] = t.forced;
  d["value"] = to_py(t.value());
  d["value_str"] = t.value().re.str();
  d["n"] = n;
  d["partial_sums"] = partial;
  if (t.reference) {
    d["reference"] = to_py(*t.reference);
    d["rel_error"] = rel;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_ratgamma, m) {
  m.doc() = "ln Gamma and polygamma series with Stirling-number coefficients";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_IndexError);
  py::register_exception<RegionError>(m, "RegionError", PyExc_ArithmeticError);

  m.def("stirling_s1", [](long n, long l) { return explicit_formula(n, l).get_str(); }, py::arg("n"), py::arg("l"),
        "Signed Stirling number of the first kind as a decimal string (l >= 1).");
  m.def("stirling_row", [](long n) {
    const auto t = shared_triangle(n);
    std::vector<std::string> row;
    for (long l = 0; l <= n; ++l) row.push_back(signed_s1(*t, n, l).get_str());
    return row;
  }, py::arg("n"));

  m.def("gregory", [](long n) { return gregory(n).str(); }, py::arg("n"));
  m.def("cauchy2", [](long n) { return cauchy2(n).str(); }, py::arg("n"));
  m.def("binet_I", [](long n) { return binet_I(n).str(); }, py::arg("n"));
  m.def("binet_Iprime", [](long n) { return binet_Iprime(n).str(); }, py::arg("n"));
  m.def("binet_K", [](long n) { return binet_K(n).str(); }, py::arg("n"));

  m.def("term_stream",
        [](const std::string& family, int k, long z_half, const std::string& z_num, long count, bool force) {
          return strs(rational_term_stream(ExpansionSpec::parse(family, k), ExactArg{z_half, Rational::parse(z_num)},
                                           count, force));
        },
        py::arg("family"), py::arg("k") = 0, py::arg("z_half") = 0, py::arg("z_num") = "1", py::arg("count") = 8,
        py::arg("force") = false, "Exact bracket terms at z = z_half/2 + z_num/pi.");

  m.def("region", [](std::complex<double> z) { return to_string(in_convergence_region(to_hp(z, 128))); },
        py::arg("z"));

  m.def("evaluate",
        [](const std::string& family, int k, std::complex<double> z, long N, long bits, bool reference, bool force) {
          EvalOptions opt;
          opt.bits = bits;
          opt.with_reference = reference;
          opt.force = force;
          const ExpansionSpec spec = ExpansionSpec::parse(family, k);
          std::vector<ConvergenceTrace> traces;
          {
            py::gil_scoped_release release;
            traces = evaluate_series({spec}, to_hp(z, bits), N, opt);
          }
          return trace_dict(traces.front());
        },
        py::arg("family"), py::arg("k") = 0, py::arg("z"), py::arg("N") = 100, py::arg("bits") = kDefaultBits,
        py::arg("reference") = true, py::arg("force") = false);

  m.def("lngamma_ref", [](std::complex<double> z, long bits) { return to_py(oracle::lngamma(to_hp(z, bits))); },
        py::arg("z"), py::arg("bits") = kDefaultBits);

  m.def("series_coeffs",
        [](const std::string& kind, long m_arg, long nmax) {
          const auto s = expand(CompositeKind::parse(kind, m_arg), nmax);
          return strs(s.coeffs);
        },
        py::arg("kind"), py::arg("m") = 0, py::arg("nmax") = 10);

  m.def("identity_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : identities::catalogue()) ids.push_back(c.id);
    return ids;
  });
  m.def("run_identity",
        [](const std::string& id, const std::vector<long>& Ns, long bits) {
          const auto r = identities::run_case(identities::find_case(id), Ns, bits);
          py::list rows;
          for (const auto& row : r.rows) {
            py::dict d;
            d["N"] = row.N;
            d["lhs"] = row.lhs.to_double();
            d["rhs"] = row.rhs.to_double();
            d["abs_err"] = row.abs_err.to_double();
            d["tail_est"] = row.tail_est;
            d["pass"] = row.pass;
            rows.append(d);
          }
          py::dict out;
          out["id"] = r.id;
          out["rows"] = rows;
          out["fitted_c"] = r.fitted_c;
          out["slope"] = r.slope;
          out["pass"] = r.pass;
          return out;
        },
        py::arg("id"), py::arg("Ns") = std::vector<long>{100, 1000}, py::arg("bits") = 128);
}
