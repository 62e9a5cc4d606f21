#include "clover/quadrature.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <vector>

namespace clover {
namespace {

constexpr long double kPiHalf = 1.57079632679489661923132169163975144L;

// Abscissas stop where 1-|x| bottoms out near the smallest normal double;
// contributions past this point are below any representable tolerance.
constexpr long double kTMax = 6.1L;
constexpr int kTableLevels = 15;  // levels 0..14, h = 2^-level

struct RawNode {
  double delta;   // 1 - |x| for the standard abscissa x = tanh((pi/2) sinh t)
  double weight;  // (pi/2) cosh(t) / cosh^2((pi/2) sinh t)
};

// Level 0 holds t = 0, 1, 2, ...; level L >= 1 holds only the odd multiples
// of 2^-L (the nodes new to that level).
const std::array<std::vector<RawNode>, kTableLevels>& node_tables() {
  static const auto tables = [] {
    std::array<std::vector<RawNode>, kTableLevels> out;
    for (int level = 0; level < kTableLevels; ++level) {
      const long double h = ldexpl(1.0L, -level);
      const long long step = level == 0 ? 1 : 2;
      for (long long k = level == 0 ? 0 : 1;; k += step) {
        const long double t = static_cast<long double>(k) * h;
        if (t > kTMax) break;
        const long double u = kPiHalf * sinhl(t);
        const long double e2 = expl(-2.0L * u);
        const long double denom = 1.0L + e2;
        out[level].push_back(
            {static_cast<double>(2.0L * e2 / denom),
             static_cast<double>(kPiHalf * coshl(t) * 4.0L * e2 / (denom * denom))});
      }
    }
    return out;
  }();
  return tables;
}

[[noreturn]] void throw_non_finite(double x) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "integrand returned a non-finite value at x = %.17g", x);
  throw QuadratureError(buf);
}

}  // namespace

namespace detail {

QuadratureResult integrate_core(const std::function<double(double, double)>& f, double lower,
                                double upper, Tolerance tol, bool skip_rounded_endpoints) {
  if (!std::isfinite(lower) || !std::isfinite(upper)) {
    throw std::invalid_argument("integration bounds must be finite");
  }
  if (lower > upper) {
    throw std::invalid_argument("integration requires lower <= upper");
  }
  if (!(tol.absolute >= 1e-15 && tol.absolute <= 1e-3)) {
    throw std::invalid_argument("Tolerance.absolute must lie in [1e-15, 1e-3]");
  }
  if (tol.max_levels < 2 || tol.max_levels > 14) {
    throw std::invalid_argument("Tolerance.max_levels must lie in [2, 14]");
  }
  if (lower == upper) {
    return {0.0, 0.0, 0, true};
  }

  const auto& tables = node_tables();
  const double half = 0.5 * (upper - lower);

  long double running_sum = 0.0L;  // weighted samples from every level so far
  std::size_t evaluations = 0;
  double value = 0.0;
  double previous = 0.0;
  double diff = 0.0;
  bool converged = false;

  for (int level = 0; level <= tol.max_levels; ++level) {
    const auto& nodes = tables[static_cast<std::size_t>(level)];
    long double level_sum = 0.0L;
    std::size_t start = 0;

    if (level == 0) {
      // The t = 0 node is its own mirror image; sample it once.
      const double d = half * nodes[0].delta;
      const double x = lower + d;
      if (!(skip_rounded_endpoints && (x == lower || x == upper))) {
        const double fx = f(x, d);
        if (!std::isfinite(fx)) throw_non_finite(x);
        level_sum += static_cast<long double>(nodes[0].weight) * fx;
        ++evaluations;
      }
      start = 1;
    }

    for (std::size_t i = start; i < nodes.size(); ++i) {
      const double d = half * nodes[i].delta;
      long double pair = 0.0L;

      const double xl = lower + d;
      if (!(skip_rounded_endpoints && (xl == lower || xl == upper))) {
        const double fl = f(xl, d);
        if (!std::isfinite(fl)) throw_non_finite(xl);
        pair += fl;
        ++evaluations;
      }

      const double xu = upper - d;
      if (!(skip_rounded_endpoints && (xu == lower || xu == upper))) {
        const double fu = f(xu, -d);
        if (!std::isfinite(fu)) throw_non_finite(xu);
        pair += fu;
        ++evaluations;
      }

      level_sum += static_cast<long double>(nodes[i].weight) * pair;
    }

    running_sum += level_sum;
    value = static_cast<double>(static_cast<long double>(half) * ldexpl(1.0L, -level) *
                                running_sum);

    if (level >= 1) {
      diff = std::fabs(value - previous);
      if (level >= 2 && diff <= tol.absolute) {
        converged = true;
        break;
      }
    }
    previous = value;
  }

  const double floor = std::fabs(value) * DBL_EPSILON;
  return {value, diff < floor ? floor : diff, evaluations, converged};
}

}  // namespace detail
}  // namespace clover
