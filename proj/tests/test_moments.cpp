#include "clover/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "clover/clover.hpp"
#include "clover/rational.hpp"
#include "doctest.h"

using clover::closed_form_value;
using clover::ClosedFormMoment;
using clover::moment_closed_form;
using clover::moment_quadrature;
using clover::MomentBasis;
using clover::MomentForm;
using clover::MomentRoute;
using clover::Rational;
using clover::recurrence_ratio;
using clover::squeeze_diagnostic;
using clover::SqueezeDiagnostic;
using clover::varpi;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Independent reduction oracle: integrate phi_m(x)^n over [0, varpi_m]
// directly, with phi_m obtained by an RK4 march of phi' = sqrt(1 - phi^m)
// (no quadrature, no root finding) and a 1e5-point trapezoid accumulated
// along the way. By symmetry the full integral is twice the half-leaf one.
double sampled_moment(int m, int n) {
  const int points = 100000;
  const double half = 0.5 * varpi(m);
  const double h = half / (points - 1);
  const auto slope = [m](double phi) {
    const double radicand = 1.0 - std::pow(phi, static_cast<double>(m));
    return radicand > 0.0 ? std::sqrt(radicand) : 0.0;
  };

  double phi = 0.0;
  double sum = 0.5 * std::pow(phi, static_cast<double>(n));
  for (int i = 1; i < points; ++i) {
    const double k1 = slope(phi);
    const double k2 = slope(phi + 0.5 * h * k1);
    const double k3 = slope(phi + 0.5 * h * k2);
    const double k4 = slope(phi + h * k3);
    phi += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double weight = i == points - 1 ? 0.5 : 1.0;
    sum += weight * std::pow(phi, static_cast<double>(n));
  }
  return 2.0 * h * sum;
}
}  // namespace

TEST_CASE("reference moments of the 2-clover") {
  CHECK(std::fabs(moment_quadrature(2, 1).value - 2.0) <= 1e-12);
  CHECK(std::fabs(moment_quadrature(2, 2).value - kPi / 2.0) <= 1e-12);
  CHECK(std::fabs(moment_quadrature(2, 3).value - 4.0 / 3.0) <= 1e-12);
  CHECK(std::fabs(moment_quadrature(2, 4).value - 3.0 * kPi / 8.0) <= 1e-12);
  CHECK(std::fabs(moment_quadrature(1, 1).value - 8.0 / 3.0) <= 1e-12);
}

TEST_CASE("the zeroth moment is the leaf arc length") {
  for (int m = 1; m <= 8; ++m) {
    const clover::MomentValue v = moment_quadrature(m, 0);
    CHECK(v.route == MomentRoute::quadrature);
    CHECK(std::fabs(v.value - varpi(m)) <= 1e-12);
  }
}

TEST_CASE("reduction to the one-dimensional integral, checked by direct sampling") {
  // Trapezoid over 1e5 samples of phi_m itself; agreement bar 1e-6.
  CHECK(std::fabs(sampled_moment(2, 3) - moment_quadrature(2, 3).value) <= 1e-6);
  CHECK(std::fabs(sampled_moment(3, 2) - moment_quadrature(3, 2).value) <= 1e-6);
  // sanity of the oracle itself: for m = 2 the sampled curve is sin
  CHECK(std::fabs(sampled_moment(2, 3) - 4.0 / 3.0) <= 1e-6);
}

TEST_CASE("recurrence ratio value and property") {
  CHECK(recurrence_ratio(2, 2) == Rational(3, 4));
  CHECK(recurrence_ratio(1, 0) == Rational(2, 3));
  CHECK(recurrence_ratio(4, 0) == Rational(1, 3));
  // measured I_2(4)/I_2(2) equals the exact ratio
  const double measured = moment_quadrature(2, 4).value / moment_quadrature(2, 2).value;
  CHECK(std::fabs(measured - 0.75) <= 1e-12);
  for (int m = 1; m <= 6; ++m) {
    for (int n = 0; n <= 12; ++n) {
      const double lhs = moment_quadrature(m, n + m).value;
      const double rhs = recurrence_ratio(m, n).to_double() * moment_quadrature(m, n).value;
      CHECK(std::fabs(lhs - rhs) <= 1e-11);
    }
  }
}

TEST_CASE("closed forms at small indices") {
  const ClosedFormMoment a = moment_closed_form(2, 2, MomentForm::at_mn);
  CHECK(a.m == 2);
  CHECK(a.n_index == 2);
  CHECK(a.basis == MomentBasis::varpi_m);
  CHECK(a.coefficient == Rational(3, 8));
  CHECK(std::fabs(closed_form_value(a) - 3.0 * kPi / 8.0) <= 1e-12);

  const ClosedFormMoment b = moment_closed_form(2, 2, MomentForm::at_mn_minus_1);
  CHECK(b.basis == MomentBasis::four_over_m);
  CHECK(b.coefficient == Rational(2, 3));
  CHECK(std::fabs(closed_form_value(b) - 4.0 / 3.0) <= 1e-12);

  // I_1(1) = (2/3) * varpi_1 = 8/3
  const ClosedFormMoment c = moment_closed_form(1, 1, MomentForm::at_mn);
  CHECK(c.coefficient == Rational(2, 3));
  CHECK(std::fabs(closed_form_value(c) - 8.0 / 3.0) <= 1e-12);
}

TEST_CASE("closed forms equal the telescoped recurrence exactly") {
  for (int m = 1; m <= 12; ++m) {
    for (int n = 1; n <= 12; ++n) {
      Rational tele_mn(1);
      for (int j = 1; j <= n; ++j) {
        tele_mn *= recurrence_ratio(m, m * (j - 1));
      }
      CHECK(moment_closed_form(m, n, MomentForm::at_mn).coefficient == tele_mn);

      Rational tele_mn_m1(1);
      for (int j = 1; j <= n - 1; ++j) {
        tele_mn_m1 *= recurrence_ratio(m, m * j - 1);
      }
      CHECK(moment_closed_form(m, n, MomentForm::at_mn_minus_1).coefficient == tele_mn_m1);
    }
  }
}

TEST_CASE("closed forms match quadrature numerically") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const double q_mn = moment_quadrature(m, m * n).value;
      CHECK(std::fabs(closed_form_value(moment_closed_form(m, n, MomentForm::at_mn)) - q_mn) <=
            1e-11);
      const double q_mn_m1 = moment_quadrature(m, m * n - 1).value;
      CHECK(std::fabs(closed_form_value(moment_closed_form(m, n, MomentForm::at_mn_minus_1)) -
                      q_mn_m1) <= 1e-11);
    }
  }
}

TEST_CASE("moments are positive and non-increasing in n") {
  for (int m : {1, 2, 4, 7}) {
    double prev = moment_quadrature(m, 0).value;
    CHECK(prev > 0.0);
    for (int n = 1; n <= 16; ++n) {
      const double cur = moment_quadrature(m, n).value;
      CHECK(cur > 0.0);
      CHECK(cur <= prev + 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("squeeze diagnostic") {
  const SqueezeDiagnostic s = squeeze_diagnostic(2, 0);
  CHECK(s.m == 2);
  CHECK(s.n == 0);
  CHECK(s.lower_bound == 0.5);
  CHECK(std::fabs(s.ratio - 2.0 / kPi) <= 1e-12);
  CHECK(s.within_bounds);

  for (int m = 1; m <= 6; ++m) {
    for (int n = 0; n <= 12; ++n) {
      const SqueezeDiagnostic d = squeeze_diagnostic(m, n);
      CHECK(d.within_bounds);
      CHECK(d.ratio >= d.lower_bound - 1e-9);
      CHECK(d.ratio <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("high exponents stay sane up to the cap") {
  const double i199 = moment_quadrature(2, 199).value;
  const double i200 = moment_quadrature(2, 200).value;
  CHECK(i200 > 0.0);
  CHECK(i200 < i199);
  // asymptotically I_2(n) ~ sqrt(2 pi / n); loose two-sided sanity bound
  CHECK(i200 < 0.25);
  CHECK(i200 > 0.1);
}

TEST_CASE("domain rejections") {
  CHECK_THROWS_AS(moment_quadrature(0, 1), std::domain_error);
  CHECK_THROWS_AS(moment_quadrature(2, -1), std::domain_error);
  CHECK_THROWS_AS(moment_quadrature(2, 201), std::domain_error);
  CHECK_THROWS_AS(recurrence_ratio(2, -1), std::domain_error);
  CHECK_THROWS_AS(recurrence_ratio(65, 0), std::domain_error);
  CHECK_THROWS_AS(moment_closed_form(2, 0, MomentForm::at_mn), std::domain_error);
  CHECK_THROWS_AS(moment_closed_form(2, -2, MomentForm::at_mn_minus_1), std::domain_error);
  CHECK_THROWS_AS(squeeze_diagnostic(2, 200), std::domain_error);
  CHECK_THROWS_AS(squeeze_diagnostic(2, -1), std::domain_error);
}
