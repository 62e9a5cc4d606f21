#include "clover/wallis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "clover/clover.hpp"
#include "clover/cong_gamma.hpp"

namespace clover {
namespace {

// Numerator and denominator of the n-th factor as exact 64-bit integers.
// Largest case (m = 64, n = 1e8): 2n * (2mn + m + 2) < 2^62, no overflow.
struct TermParts {
  unsigned long num;
  unsigned long den;
};

TermParts term_parts(int m, long n) {
  const auto mm = static_cast<unsigned long>(m);
  const auto nn = static_cast<unsigned long>(n);
  return {2 * nn * (2 * mm * nn + mm + 2), (2 * nn + 1) * (2 * mm * nn + 2)};
}

void require_term_index(long n) {
  if (n < 1 || n > kProductTermBudget) {
    throw std::domain_error("product term index must lie in [1, term budget]");
  }
}

long double term_ld(int m, long n) {
  const TermParts t = term_parts(m, n);
  return static_cast<long double>(t.num) / static_cast<long double>(t.den);
}

// Aitken delta-squared extrapolation of three successive checkpoints.
long double aitken(long double x0, long double x1, long double x2) {
  const long double d1 = x1 - x0;
  const long double d2 = x2 - x1;
  const long double denom = d2 - d1;
  if (denom == 0.0L) return x2;
  return x2 - d2 * d2 / denom;
}

}  // namespace

Rational product_term(int m, long n) {
  detail::require_clover_index(m);
  require_term_index(n);
  const TermParts t = term_parts(m, n);
  return Rational(mpz_class(t.num), mpz_class(t.den));
}

PartialProduct partial_product(int m, long N) {
  detail::require_clover_index(m);
  if (N < 0 || N > kProductTermBudget) {
    throw std::domain_error("partial_product requires N in [0, term budget]");
  }

  const long exact_terms = std::min(N, kExactProductCap);
  mpz_class num = 2 * (m + 2);
  mpz_class den = m;
  for (long n = 1; n <= exact_terms; ++n) {
    const TermParts t = term_parts(m, n);
    num *= t.num;
    den *= t.den;
  }
  Rational exact(num, den);

  double approx;
  if (N <= kExactProductCap) {
    approx = exact.to_double();
  } else {
    long double p = exact.to_double();
    for (long n = exact_terms + 1; n <= N; ++n) {
      p *= term_ld(m, n);
    }
    approx = static_cast<double>(p);
  }
  return {m, N, std::move(exact), exact_terms, approx};
}

Rational limit_formula(int m, int n) {
  detail::require_clover_index(m);
  if (n < 1) throw std::domain_error("limit_formula requires n >= 1");
  const auto count = static_cast<unsigned long>(n);
  const auto mu = static_cast<unsigned long>(m);
  mpz_class num = 4 * detail::cong_gamma_product(2, count, 0) *
                  detail::cong_gamma_product(2 * mu, count, mu + 2);
  mpz_class den = mu * detail::cong_gamma_product(2, count, 1) *
                  detail::cong_gamma_product(2 * mu, count, 2);
  return Rational(num, den);
}

VarpiEstimate estimate_varpi(int m, double target) {
  detail::require_clover_index(m);
  if (!(target >= 1e-10 && target <= 1.0)) {
    throw std::domain_error("estimate_varpi requires target in [1e-10, 1]");
  }

  constexpr long kPlainLimit = 65536;
  long double p = 2.0L * (m + 2) / m;
  long double prev = p;
  long n = 0;

  // Plain phase: the error behaves like C/n, and C is observable from one
  // step as (P_{n-1} - P_n) * n(n-1). Stop once the modeled error is small
  // enough; n >= 8 keeps the model out of the pre-asymptotic regime.
  while (n < kPlainLimit) {
    ++n;
    prev = p;
    p *= term_ld(m, n);
    if (n >= 8) {
      const long double c = (prev - p) * static_cast<long double>(n) *
                            static_cast<long double>(n - 1);
      if (c / static_cast<long double>(n) <= static_cast<long double>(target)) {
        return {m, static_cast<double>(p), n, false, target};
      }
    }
  }

  // Accelerated phase: partial products at term-doubling checkpoints have
  // errors shrinking by almost exactly 1/2, the regime where Aitken's
  // delta-squared is stable and cancels the whole 1/n term.
  long double x0 = 0.0L;
  long double x1 = 0.0L;
  long double x2 = p;  // checkpoint at n = kPlainLimit
  int checkpoints = 1;
  long double prev_accel = 0.0L;
  bool have_prev_accel = false;

  for (;;) {
    if (2 * n > kProductTermBudget) {
      throw std::runtime_error("estimate_varpi exhausted its term budget before convergence");
    }
    const long next = 2 * n;
    while (n < next) {
      ++n;
      p *= term_ld(m, n);
    }
    x0 = x1;
    x1 = x2;
    x2 = p;
    ++checkpoints;
    if (checkpoints < 3) continue;
    const long double accel = aitken(x0, x1, x2);
    if (have_prev_accel &&
        std::fabs(static_cast<double>(accel - prev_accel)) <= target) {
      return {m, static_cast<double>(accel), n, true, target};
    }
    prev_accel = accel;
    have_prev_accel = true;
  }
}

std::vector<ConvergenceRow> convergence_report(int m, const std::vector<long>& checkpoints) {
  detail::require_clover_index(m);
  if (checkpoints.empty()) {
    throw std::domain_error("convergence_report requires at least one checkpoint");
  }
  std::vector<long> sorted = checkpoints;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (long N : sorted) require_term_index(N);

  const double limit = varpi(m);
  std::vector<ConvergenceRow> rows;
  rows.reserve(sorted.size());

  long double p = 2.0L * (m + 2) / m;
  long n = 0;
  for (long N : sorted) {
    while (n < N) {
      ++n;
      p *= term_ld(m, n);
    }
    const double partial = static_cast<double>(p);
    const double error = partial - limit;
    rows.push_back({N, partial, error, static_cast<double>(N) * error});
  }
  return rows;
}

}  // namespace clover
