// Python bindings for the clovermath core. Exact rationals cross the
// boundary as fractions.Fraction (built from their canonical "p/q" string),
// so no precision is lost; domain violations surface as ValueError and
// computation failures as RuntimeError via pybind11's standard mapping.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clover/clover.hpp"
#include "clover/cong_gamma.hpp"
#include "clover/moments.hpp"
#include "clover/quadrature.hpp"
#include "clover/rational.hpp"
#include "clover/real_gamma.hpp"
#include "clover/verify.hpp"
#include "clover/wallis.hpp"

namespace py = pybind11;

namespace {

#define CLOVERMATH_STR_IMPL(x) #x
#define CLOVERMATH_STR(x) CLOVERMATH_STR_IMPL(x)

py::object to_fraction(const clover::Rational& r) {
  static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
  return fraction_type(r.to_string());
}

py::object to_py_int(const mpz_class& z) {
  static py::object int_type = py::module_::import("builtins").attr("int");
  return int_type(z.get_str());
}

}  // namespace

PYBIND11_MODULE(clovermath, mod) {
  mod.doc() =
      "Clover curves, clover constants varpi_m, congruence Gamma products, moment "
      "identities, and the generalized Wallis product.";
#ifdef CLOVERMATH_VERSION
  mod.attr("__version__") = CLOVERMATH_STR(CLOVERMATH_VERSION);
#else
  mod.attr("__version__") = "0.0.0";
#endif

  py::enum_<clover::MomentRoute>(mod, "MomentRoute")
      .value("quadrature", clover::MomentRoute::quadrature)
      .value("closed_form", clover::MomentRoute::closed_form)
      .value("recurrence", clover::MomentRoute::recurrence);
  py::enum_<clover::MomentBasis>(mod, "MomentBasis")
      .value("varpi_m", clover::MomentBasis::varpi_m)
      .value("four_over_m", clover::MomentBasis::four_over_m);
  py::enum_<clover::MomentForm>(mod, "MomentForm")
      .value("at_mn", clover::MomentForm::at_mn)
      .value("at_mn_minus_1", clover::MomentForm::at_mn_minus_1);

  py::class_<clover::CloverPoint>(mod, "CloverPoint")
      .def_readonly("radius", &clover::CloverPoint::radius)
      .def_readonly("angle", &clover::CloverPoint::angle)
      .def_readonly("x", &clover::CloverPoint::x)
      .def_readonly("y", &clover::CloverPoint::y)
      .def("__repr__", [](const clover::CloverPoint& p) {
        return "CloverPoint(r=" + std::to_string(p.radius) +
               ", angle=" + std::to_string(p.angle) + ")";
      });

  py::class_<clover::MomentValue>(mod, "MomentValue")
      .def_readonly("m", &clover::MomentValue::m)
      .def_readonly("n", &clover::MomentValue::n)
      .def_readonly("value", &clover::MomentValue::value)
      .def_readonly("route", &clover::MomentValue::route);

  py::class_<clover::ClosedFormMoment>(mod, "ClosedFormMoment")
      .def_readonly("m", &clover::ClosedFormMoment::m)
      .def_readonly("n_index", &clover::ClosedFormMoment::n_index)
      .def_property_readonly(
          "coefficient",
          [](const clover::ClosedFormMoment& c) { return to_fraction(c.coefficient); })
      .def_readonly("basis", &clover::ClosedFormMoment::basis);

  py::class_<clover::SqueezeDiagnostic>(mod, "SqueezeDiagnostic")
      .def_readonly("m", &clover::SqueezeDiagnostic::m)
      .def_readonly("n", &clover::SqueezeDiagnostic::n)
      .def_readonly("ratio", &clover::SqueezeDiagnostic::ratio)
      .def_readonly("lower_bound", &clover::SqueezeDiagnostic::lower_bound)
      .def_readonly("within_bounds", &clover::SqueezeDiagnostic::within_bounds);

  py::class_<clover::PartialProduct>(mod, "PartialProduct")
      .def_readonly("m", &clover::PartialProduct::m)
      .def_readonly("terms", &clover::PartialProduct::terms)
      .def_property_readonly(
          "exact", [](const clover::PartialProduct& p) { return to_fraction(p.exact); })
      .def_readonly("exact_terms", &clover::PartialProduct::exact_terms)
      .def_readonly("approx", &clover::PartialProduct::approx);

  py::class_<clover::VarpiEstimate>(mod, "VarpiEstimate")
      .def_readonly("m", &clover::VarpiEstimate::m)
      .def_readonly("value", &clover::VarpiEstimate::value)
      .def_readonly("terms_used", &clover::VarpiEstimate::terms_used)
      .def_readonly("accelerated", &clover::VarpiEstimate::accelerated)
      .def_readonly("target", &clover::VarpiEstimate::target);

  py::class_<clover::ConvergenceRow>(mod, "ConvergenceRow")
      .def_readonly("terms", &clover::ConvergenceRow::terms)
      .def_readonly("partial", &clover::ConvergenceRow::partial)
      .def_readonly("error", &clover::ConvergenceRow::error)
      .def_readonly("scaled_error", &clover::ConvergenceRow::scaled_error);

  py::class_<clover::CheckRow>(mod, "CheckRow")
      .def_readonly("name", &clover::CheckRow::name)
      .def_readonly("m", &clover::CheckRow::m)
      .def_readonly("n", &clover::CheckRow::n)
      .def_readonly("residual", &clover::CheckRow::residual)
      .def_readonly("tolerance", &clover::CheckRow::tolerance)
      .def_readonly("pass_", &clover::CheckRow::pass);

  py::class_<clover::QuadratureResult>(mod, "QuadratureResult")
      .def_readonly("value", &clover::QuadratureResult::value)
      .def_readonly("error_estimate", &clover::QuadratureResult::error_estimate)
      .def_readonly("evaluations", &clover::QuadratureResult::evaluations)
      .def_readonly("converged", &clover::QuadratureResult::converged);

  mod.def("leaf_count", &clover::leaf_count, py::arg("m"),
          "Number of distinct leaves of the m-clover (m odd -> m, m even -> m/2).");
  mod.def("arc_length", &clover::arc_length, py::arg("m"), py::arg("r"),
          "Arc length along the principal leaf from the origin to radius r.");
  mod.def("varpi", &clover::varpi, py::arg("m"),
          "Leaf arc length varpi_m = 2 * integral_0^1 dt/sqrt(1 - t^m).");
  mod.def("varpi_beta_oracle", &clover::varpi_beta_oracle, py::arg("m"),
          "Independent closed form varpi_m = (2/m) B(1/m, 1/2).");
  mod.def("clover_fn", &clover::clover_fn, py::arg("m"), py::arg("x"),
          "The clover function phi_m(x) on [0, varpi_m].");
  mod.def("clover_fn_derivative", &clover::clover_fn_derivative, py::arg("m"), py::arg("x"),
          "phi_m'(x) = +-sqrt(1 - phi_m(x)^m).");
  mod.def("sample_curve", &clover::sample_curve, py::arg("m"), py::arg("samples"),
          py::arg("principal_only") = false,
          "Sample the m-clover, samples points per leaf.");

  mod.def(
      "cong_gamma",
      [](unsigned long modulus, unsigned long count, unsigned long residue) {
        return to_py_int(clover::cong_gamma(modulus, count, residue));
      },
      py::arg("modulus"), py::arg("count"), py::arg("residue"),
      "Congruence Gamma Gamma_m(n, k): product of the arithmetic progression "
      "k, m+k, ..., m(n-1)+k with any zero factor skipped.");
  mod.def("cong_gamma_closed_form", &clover::cong_gamma_closed_form, py::arg("modulus"),
          py::arg("count"), py::arg("residue"),
          "Floating closed form m^n Gamma(n + k/m) / Gamma(k/m), k >= 1.");
  mod.def("gamma_real", &clover::gamma_real, py::arg("x"), "Gamma(x) for x > 0.");
  mod.def("beta_real", &clover::beta_real, py::arg("a"), py::arg("b"),
          "Beta(a, b) for a, b > 0.");

  mod.def("moment_quadrature", &clover::moment_quadrature, py::arg("m"), py::arg("n"),
          "I_m(n) = 2 * integral_0^1 t^n / sqrt(1 - t^m) dt by tanh-sinh quadrature.");
  mod.def(
      "recurrence_ratio",
      [](int m, int n) { return to_fraction(clover::recurrence_ratio(m, n)); }, py::arg("m"),
      py::arg("n"), "Exact ratio I_m(n+m)/I_m(n) = 2(n+1)/(2(n+1)+m).");
  mod.def("moment_closed_form", &clover::moment_closed_form, py::arg("m"), py::arg("n"),
          py::arg("form"),
          "Exact closed-form coefficient for I_m(m n) or I_m(m n - 1), n >= 1.");
  mod.def("closed_form_value", &clover::closed_form_value, py::arg("moment"),
          "Numeric value of a closed-form moment.");
  mod.def("squeeze_diagnostic", &clover::squeeze_diagnostic, py::arg("m"), py::arg("n"),
          "Bounds check for the measured ratio I_m(n+1)/I_m(n).");

  mod.def(
      "product_term", [](int m, long n) { return to_fraction(clover::product_term(m, n)); },
      py::arg("m"), py::arg("n"),
      "Exact n-th factor 2n(2mn+m+2) / ((2n+1)(2mn+2)) of the Wallis product.");
  mod.def("partial_product", &clover::partial_product, py::arg("m"), py::arg("N"),
          "Partial product P_N, exact through 10^4 terms.");
  mod.def(
      "limit_formula", [](int m, int n) { return to_fraction(clover::limit_formula(m, n)); },
      py::arg("m"), py::arg("n"),
      "Exact finite form (4/m) Gamma_2(n,0) Gamma_{2m}(n,m+2) / "
      "(Gamma_2(n,1) Gamma_{2m}(n,2)); equals partial_product(m, n-1).exact.");
  mod.def("estimate_varpi", &clover::estimate_varpi, py::arg("m"), py::arg("target"),
          "Estimate varpi_m from the product to roughly `target` absolute error.");
  mod.def("convergence_report", &clover::convergence_report, py::arg("m"),
          py::arg("checkpoints"), "Partial-product error table at the given term counts.");

  py::class_<clover::VerifyOptions>(mod, "VerifyOptions")
      .def(py::init<>())
      .def_readwrite("m_lo", &clover::VerifyOptions::m_lo)
      .def_readwrite("m_hi", &clover::VerifyOptions::m_hi)
      .def_readwrite("n_lo", &clover::VerifyOptions::n_lo)
      .def_readwrite("n_hi", &clover::VerifyOptions::n_hi)
      .def_readwrite("default_tol", &clover::VerifyOptions::default_tol);
  mod.def("run_verification", &clover::run_verification,
          py::arg("options") = clover::VerifyOptions{},
          "Run the identity verification suite; returns the sorted check rows.");
}
