#pragma once

#include "clover/rational.hpp"

namespace clover {

// How a moment value was produced.
enum class MomentRoute { quadrature, closed_form, recurrence };

// Constant a closed-form moment coefficient multiplies: the leaf arc length
// varpi_m, or the elementary value 4/m.
enum class MomentBasis { varpi_m, four_over_m };

// Exponent form a closed-form moment covers: I_m(m*n) or I_m(m*n - 1).
enum class MomentForm { at_mn, at_mn_minus_1 };

struct MomentValue {
  int m = 0;
  int n = 0;  // the moment exponent itself
  double value = 0.0;
  MomentRoute route = MomentRoute::quadrature;
};

// Exact coefficient c with I_m(exponent) = c * basis, where the exponent is
// m*n_index or m*n_index - 1 according to the form it was requested for.
struct ClosedFormMoment {
  int m = 0;
  int n_index = 0;
  Rational coefficient;
  MomentBasis basis = MomentBasis::varpi_m;
};

// One step of the sandwich I_m(n+1) <= I_m(n) with the recurrence ratio as
// the lower bound for I_m(n+1)/I_m(n): the ratio 2(n+1)/(2(n+1)+m) bounds
// the measured ratio from below, and 1 bounds it from above.
struct SqueezeDiagnostic {
  int m = 0;
  int n = 0;
  double ratio = 0.0;
  double lower_bound = 0.0;
  bool within_bounds = false;
};

/**
 * Moments of the clover integrand,
 *
 *   I_m(n) = 2 * integral_0^1 t^n / sqrt(1 - t^m) dt,   n >= 0.
 *
 * I_m(0) = varpi_m and I_m(m) relates back through the recurrence
 * I_m(n + m) = [2(n+1) / (2(n+1) + m)] * I_m(n).
 */

// Direct tanh-sinh evaluation. Exponents above 200 are refused: the
// integrand concentrates into an O(1/n) sliver at t = 1 and the requested
// accuracy is no longer certifiable there.
MomentValue moment_quadrature(int m, int n);

// The exact recurrence ratio I_m(n + m) / I_m(n) = 2(n+1) / (2(n+1) + m).
Rational recurrence_ratio(int m, int n);

// Telescoped closed form for n >= 1. For at_mn the coefficient multiplies
// varpi_m; for at_mn_minus_1 it multiplies 4/m (seeded at I_m(m-1) = 4/m,
// which the n >= 1 requirement keeps inside the telescope).
ClosedFormMoment moment_closed_form(int m, int n, MomentForm form);

// Numeric value of a closed-form moment: coefficient times its basis.
double closed_form_value(const ClosedFormMoment& moment);

// Measures I_m(n+1)/I_m(n) by quadrature and checks it against its exact
// bounds (a slack of 1e-9 absorbs quadrature noise). Requires n <= 199.
SqueezeDiagnostic squeeze_diagnostic(int m, int n);

}  // namespace clover
