// Rationals cross the boundary as "p/q" strings; the Python package wraps
// them in fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "radnorm/cli.hpp"
#include "radnorm/combinatorics.hpp"
#include "radnorm/constants.hpp"
#include "radnorm/oracle.hpp"

namespace py = pybind11;
using namespace radnorm;

namespace {

NormKind make_kind(const std::string& kind, const std::string& s) {
  if (kind == "log") return NormKind::logarithm();
  if (kind == "power") return NormKind::power(Rational::parse(s));
  throw std::invalid_argument("kind must be 'power' or 'log'");
}

std::vector<SamplePoint> make_points(const std::vector<std::string>& points) {
  std::vector<SamplePoint> out;
  for (const auto& p : points) out.push_back(SamplePoint::parse(p));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact constants for |grad^k |x|^s|^2 and |grad^k log|x||^2";
  m.attr("__version__") = RADNORM_VERSION;

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  m.def("gamma_closed", [](int n, const std::string& s, int k) {
    return gamma_closed(n, Rational::parse(s), k).to_string();
  });
  m.def("gamma_recursive", [](int n, const std::string& s, int k) {
    return gamma_recursive(n, Rational::parse(s), k).to_string();
  });
  m.def("ell_closed", [](int n, int k) { return ell_closed(n, k).to_string(); });
  m.def("ell_recursive", [](int n, int k) { return ell_recursive(n, k).to_string(); });
  m.def("gamma_special", [](int n, int k) { return gamma_special(n, k).to_string(); });
  m.def("ell2_special", [](int k) { return ell2_special(k).to_string(); });
  m.def("pochhammer", [](const std::string& nu, int k) {
    return pochhammer(Rational::parse(nu), k).to_string();
  });
  m.def("half_identity_check", [](const std::string& nu, int m_) {
    return half_identity_check(Rational::parse(nu), m_);
  });

  m.def(
      "rescaled_norm_sq",
      [](int n, const std::string& kind, int k, const std::string& point, const std::string& s,
         bool weighted) {
        DerivativeTable table(n, make_kind(kind, s));
        return rescaled_norm_sq(table, k, SamplePoint::parse(point), weighted).to_string();
      },
      py::arg("n"), py::arg("kind"), py::arg("k"), py::arg("point"), py::arg("s") = "0",
      py::arg("weighted") = true);

  m.def(
      "tilde_norm_sq",
      [](int n, const std::string& kind, int k, const std::string& point, const std::string& s) {
        const NormKind nk = make_kind(kind, s);
        const auto v = tilde_norm_sq(n, nk, k, SamplePoint::parse(point));
        return v.times_radial_power(Rational(2 * k) - Rational(2) * nk.exponent()).to_string();
      },
      py::arg("n"), py::arg("kind"), py::arg("k"), py::arg("point"), py::arg("s") = "0");

  m.def(
      "dimension_split_check",
      [](int n, const std::string& kind, int k, const std::string& point, const std::string& s) {
        return dimension_split_check(n, make_kind(kind, s), k, SamplePoint::parse(point));
      },
      py::arg("n"), py::arg("kind"), py::arg("k"), py::arg("point"), py::arg("s") = "0");

  m.def(
      "verify",
      [](int n, const std::string& kind, int k, const std::vector<std::string>& points,
         const std::string& s) {
        const auto report = verify_constancy(n, make_kind(kind, s), k, make_points(points));
        py::dict methods;
        for (const auto& v : report.method_values) methods[py::str(to_string(v.method))] = v.value.to_string();
        py::list oracle;
        for (const auto& pv : report.oracle_values) oracle.append(pv.rescaled.to_string());
        py::dict out;
        out["methods"] = methods;
        out["oracle"] = oracle;
        out["constant"] = report.constant;
        out["exact_match"] = report.exact_match;
        return out;
      },
      py::arg("n"), py::arg("kind"), py::arg("k"), py::arg("points"), py::arg("s") = "0");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs the command-line front end and returns (exit_code, stdout, stderr).");
}
