#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace clover {

struct Tolerance {
  double absolute = 1e-13;  // level-to-level convergence target, in [1e-15, 1e-3]
  int max_levels = 12;      // node-density doublings to attempt, in [2, 14]
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // last level-to-level difference (floored at |value|*eps)
  std::size_t evaluations = 0;
  bool converged = false;
};

// Raised when an integrand sample comes back non-finite.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
QuadratureResult integrate_core(const std::function<double(double, double)>& f, double lower,
                                double upper, Tolerance tol, bool skip_rounded_endpoints);
}

/**
 * Tanh-sinh (double-exponential) quadrature on [lower, upper], built for
 * integrands with inverse-square-root endpoint singularities.
 *
 * Two integrand forms are accepted:
 *
 *   f(x)    — for integrands finite at both endpoints. Nodes whose abscissa
 *             rounds onto an endpoint are skipped (their weights are far
 *             below any representable contribution for bounded integrands).
 *
 *   f(x, s) — s is the signed distance from x to the nearest endpoint,
 *             exact even when x itself has rounded onto that endpoint:
 *             s >= 0 means x = lower + s, s < 0 means x = upper + s.
 *             Singular endpoint factors must be computed from s (for
 *             example 1 - t^m = -expm1(m*log1p(u)) with u = t-1 rebuilt
 *             from s); only this form reaches the stated tolerances on
 *             integrands that are actually singular at an endpoint.
 *
 * Node density doubles per level until the level-to-level difference is at
 * most tol.absolute or tol.max_levels is exhausted. The result reports the
 * last difference as error_estimate and sets converged accordingly; no
 * exception is thrown for non-convergence, only for invalid arguments or a
 * non-finite sample. Identical inputs produce bit-identical results.
 */
inline QuadratureResult integrate_singular(const std::function<double(double, double)>& f,
                                           double lower, double upper, Tolerance tol = {}) {
  return detail::integrate_core(f, lower, upper, tol, /*skip_rounded_endpoints=*/false);
}

template <typename F>
  requires std::is_invocable_r_v<double, F&, double> &&
           (!std::is_invocable_r_v<double, F&, double, double>)
QuadratureResult integrate_singular(F&& f, double lower, double upper, Tolerance tol = {}) {
  auto wrapped = [g = std::forward<F>(f)](double x, double) mutable { return g(x); };
  return detail::integrate_core(std::function<double(double, double)>(std::move(wrapped)), lower,
                                upper, tol, /*skip_rounded_endpoints=*/true);
}

}  // namespace clover
