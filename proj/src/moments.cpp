#include "clover/moments.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "clover/clover.hpp"
#include "clover/cong_gamma.hpp"
#include "clover/quadrature.hpp"

namespace clover {
namespace {

constexpr int kMaxQuadratureExponent = 200;

// Shared kernels for the moment integrand on [0, 1]. u is the exact t - 1
// recovered from the quadrature's signed endpoint distance; both factors
// switch to log1p/expm1 forms where the naive ones would cancel.
double one_minus_tm(double t, double u, int m) {
  if (t < 0.5) return 1.0 - std::pow(t, static_cast<double>(m));
  return -std::expm1(static_cast<double>(m) * std::log1p(u));
}

double t_power(double t, double u, int n) {
  if (n == 0) return 1.0;
  if (t < 0.5) return std::pow(t, static_cast<double>(n));
  return std::exp(static_cast<double>(n) * std::log1p(u));
}

}  // namespace

MomentValue moment_quadrature(int m, int n) {
  detail::require_clover_index(m);
  if (n < 0 || n > kMaxQuadratureExponent) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "moment exponent n = %d is outside [0, %d]", n,
                  kMaxQuadratureExponent);
    throw std::domain_error(buf);
  }
  const auto integrand = [m, n](double t, double s) {
    const double u = s < 0.0 ? s : s - 1.0;  // interval is [0, 1], so t - 1 = s on the top side
    return t_power(t, u, n) / std::sqrt(one_minus_tm(t, u, m));
  };
  const QuadratureResult q =
      integrate_singular(std::function<double(double, double)>(integrand), 0.0, 1.0);
  if (!q.converged) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "moment quadrature did not converge for m = %d, n = %d", m,
                  n);
    throw QuadratureError(buf);
  }
  return {m, n, 2.0 * q.value, MomentRoute::quadrature};
}

Rational recurrence_ratio(int m, int n) {
  detail::require_clover_index(m);
  if (n < 0) throw std::domain_error("recurrence_ratio requires n >= 0");
  const long two_np1 = 2L * (n + 1);
  return Rational(two_np1, two_np1 + m);
}

ClosedFormMoment moment_closed_form(int m, int n, MomentForm form) {
  detail::require_clover_index(m);
  if (n < 1) {
    throw std::domain_error("moment_closed_form requires n >= 1 (the telescoping starts there)");
  }
  const auto count = static_cast<unsigned long>(n);
  const auto mu = static_cast<unsigned long>(m);
  if (form == MomentForm::at_mn) {
    // I_m(m*n) = [Gamma_{2m}(n, 2) / Gamma_{2m}(n, m+2)] * varpi_m
    Rational coeff(detail::cong_gamma_product(2 * mu, count, 2),
                   detail::cong_gamma_product(2 * mu, count, mu + 2));
    return {m, n, coeff, MomentBasis::varpi_m};
  }
  // I_m(m*n - 1) = [Gamma_2(n, 0) / Gamma_2(n, 1)] * (4/m)
  Rational coeff(detail::cong_gamma_product(2, count, 0),
                 detail::cong_gamma_product(2, count, 1));
  return {m, n, coeff, MomentBasis::four_over_m};
}

double closed_form_value(const ClosedFormMoment& moment) {
  const double basis =
      moment.basis == MomentBasis::varpi_m ? varpi(moment.m) : 4.0 / moment.m;
  return moment.coefficient.to_double() * basis;
}

SqueezeDiagnostic squeeze_diagnostic(int m, int n) {
  detail::require_clover_index(m);
  if (n < 0 || n > kMaxQuadratureExponent - 1) {
    throw std::domain_error("squeeze_diagnostic requires n in [0, 199]");
  }
  const double ratio = moment_quadrature(m, n + 1).value / moment_quadrature(m, n).value;
  const double lower = recurrence_ratio(m, n).to_double();
  const bool within = ratio >= lower - 1e-9 && ratio <= 1.0 + 1e-9;
  return {m, n, ratio, lower, within};
}

}  // namespace clover
