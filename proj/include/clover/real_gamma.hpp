#pragma once

namespace clover {

// Log-Gamma on the positive real axis, good to at least 13 significant
// digits on (0, 400). Deliberately independent of the exact congruence
// products in cong_gamma.hpp so the two can cross-check each other.
double lgamma_real(double x);

// Gamma itself; overflows to +inf past x ~ 171.6 in double.
double gamma_real(double x);

// Beta function B(a, b) via the log-Gamma identity.
double beta_real(double a, double b);

namespace detail {
long double lgamma_core(long double x);
}

}  // namespace clover
