#pragma once

#include <vector>

#include "clover/rational.hpp"

namespace clover {

// Exact partial products are kept as big rationals up to this many terms;
// beyond it only the floating continuation is carried.
inline constexpr long kExactProductCap = 10000;

// Hard ceiling on the total number of product terms any one call may
// consume; estimate_varpi throws rather than march past it.
inline constexpr long kProductTermBudget = 100000000;

/**
 * The clover Wallis product
 *
 *   varpi_m = [2(m+2)/m] * prod_{n>=1} 2n(2mn + m + 2) / ((2n+1)(2mn + 2)).
 *
 * Every factor lies in (0, 1) (numerator = denominator - 2), so the partial
 * products decrease monotonically to varpi_m with error O(1/N). At m = 2
 * the factor reduces to the classical 4n(n+1)/(2n+1)^2 and the product
 * converges to pi.
 */

// The n-th product factor as an exact rational, n >= 1.
Rational product_term(int m, long n);

struct PartialProduct {
  int m = 0;
  long terms = 0;        // N: how many factors the product includes
  Rational exact;        // exact value through exact_terms factors
  long exact_terms = 0;  // min(terms, kExactProductCap)
  double approx = 0.0;   // floating value of the full N-term partial product
};

// P_N through N factors (N >= 0). Exact up to kExactProductCap terms; for
// larger N the tail is continued in extended precision.
PartialProduct partial_product(int m, long N);

// The telescoped finite form the partial products equal term for term:
// limit_formula(m, n) = partial_product(m, n - 1).exact for every n >= 1.
Rational limit_formula(int m, int n);

struct VarpiEstimate {
  int m = 0;
  double value = 0.0;
  long terms_used = 0;
  bool accelerated = false;  // true when Richardson/Aitken refinement kicked in
  double target = 0.0;
};

/**
 * Estimate varpi_m from the product alone to roughly `target` absolute
 * error (target in [1e-10, 1]). Loose targets are met by marching the plain
 * product under a C/N error model; tight ones switch to Aitken
 * delta-squared extrapolation across term-doubling checkpoints, which
 * cancels the leading 1/N error term. Throws if kProductTermBudget would be
 * exceeded first.
 */
VarpiEstimate estimate_varpi(int m, double target);

struct ConvergenceRow {
  long terms = 0;
  double partial = 0.0;       // P_N
  double error = 0.0;         // P_N - varpi_m, always positive
  double scaled_error = 0.0;  // N * (P_N - varpi_m), approaching a constant
};

// Partial-product snapshots at the requested term counts (sorted, deduped),
// with errors against the quadrature value of varpi_m. The near-constant
// scaled_error column exhibits the O(1/N) convergence rate.
std::vector<ConvergenceRow> convergence_report(int m, const std::vector<long>& checkpoints);

}  // namespace clover
