#include "clover/clover.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>

#include "clover/quadrature.hpp"
#include "clover/real_gamma.hpp"

namespace clover {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kResidualTol = 1e-13;  // Newton stops once |l_m(r) - x| is below this
constexpr int kMaxNewtonIterations = 200;

// 1 - t^m with the deviation of t from 1 supplied exactly by the caller.
// Near t = 1 the naive difference loses every significant digit; routing
// through expm1/log1p keeps full relative accuracy, which the arc-length
// integrand needs right where it is singular.
double one_minus_pow_exact(double t, double t_minus_1, int m) {
  if (t < 0.5) {
    return 1.0 - std::pow(t, static_cast<double>(m));
  }
  return -std::expm1(static_cast<double>(m) * std::log1p(t_minus_1));
}

double arc_length_unchecked(int m, double r) {
  if (r == 0.0) return 0.0;
  const auto integrand = [m, r](double t, double s) {
    // s < 0 means t = r + s, so t - 1 = (r - 1) + s with no cancellation
    // (both terms are <= 0); s >= 0 means t = s and t - 1 = s - 1.
    const double u = s < 0.0 ? (r - 1.0) + s : s - 1.0;
    return 1.0 / std::sqrt(one_minus_pow_exact(t, u, m));
  };
  const QuadratureResult q =
      integrate_singular(std::function<double(double, double)>(integrand), 0.0, r);
  if (!q.converged) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "arc length quadrature did not converge for m = %d, r = %.17g", m, r);
    throw QuadratureError(buf);
  }
  return q.value;
}

}  // namespace

namespace detail {

void require_clover_index(int m) {
  if (m < 1 || m > kMaxCloverIndex) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "clover index m = %d is outside [1, %d]", m,
                  kMaxCloverIndex);
    throw std::domain_error(buf);
  }
}

double one_minus_pow(double t, int m) { return one_minus_pow_exact(t, t - 1.0, m); }

}  // namespace detail

int leaf_count(int m) {
  detail::require_clover_index(m);
  return m % 2 == 0 ? m / 2 : m;
}

double arc_length(int m, double r) {
  detail::require_clover_index(m);
  if (!(r >= 0.0 && r <= 1.0)) {
    throw std::domain_error("arc_length requires r in [0, 1]");
  }
  return arc_length_unchecked(m, r);
}

double varpi(int m) {
  detail::require_clover_index(m);
  static std::array<double, kMaxCloverIndex + 1> cache{};
  static std::array<std::once_flag, kMaxCloverIndex + 1> flags;
  const auto idx = static_cast<std::size_t>(m);
  std::call_once(flags[idx], [&] { cache[idx] = 2.0 * arc_length_unchecked(m, 1.0); });
  return cache[idx];
}

double varpi_beta_oracle(int m) {
  detail::require_clover_index(m);
  return (2.0 / m) * beta_real(1.0 / m, 0.5);
}

double clover_fn(int m, double x) {
  detail::require_clover_index(m);
  const double w = varpi(m);
  if (!(x >= 0.0 && x <= w)) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "clover_fn requires x in [0, varpi_%d] = [0, %.17g]; got %.17g", m, w, x);
    throw std::domain_error(buf);
  }

  // Fold onto the rising half via the reflection symmetry. Callers past the
  // midpoint get the bit-identical value of the mirrored argument.
  const double half = 0.5 * w;
  const double y = x > half ? w - x : x;
  if (y <= 0.0) return 0.0;
  if (y >= half) return 1.0;

  // Safeguarded Newton on g(r) = l_m(r) - y over the bracket [0, 1].
  // g'(r) = 1 / sqrt(1 - r^m), so the Newton step is r - g * sqrt(1 - r^m);
  // any step leaving the bracket falls back to bisection. The sin-power
  // initial guess is exact for m = 2 and lands within a few percent for all
  // supported m.
  double lo = 0.0;
  double hi = 1.0;
  double r = std::pow(std::sin(kPi * y / w), 2.0 / m);
  if (!(r > lo && r < hi)) r = 0.5;

  for (int iter = 0; iter < kMaxNewtonIterations; ++iter) {
    const double g = arc_length_unchecked(m, r) - y;
    if (std::fabs(g) <= kResidualTol) return r;
    if (g > 0.0) {
      hi = r;
    } else {
      lo = r;
    }
    double next = r - g * std::sqrt(detail::one_minus_pow(r, m));
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (next == r || hi - lo <= 4.0 * (hi * 2.220446049250313e-16)) {
      return next;  // bracket exhausted at double precision
    }
    r = next;
  }
  throw std::runtime_error("clover_fn: Newton iteration failed to converge");
}

double clover_fn_derivative(int m, double x) {
  const double phi = clover_fn(m, x);  // validates m and x
  const double inner = detail::one_minus_pow(phi, m);
  const double root = std::sqrt(inner > 0.0 ? inner : 0.0);
  return x <= 0.5 * varpi(m) ? root : -root;
}

std::vector<CloverPoint> sample_curve(int m, int samples, bool principal_only) {
  detail::require_clover_index(m);
  if (samples < 2 || samples > 1000000) {
    throw std::domain_error("sample_curve requires samples in [2, 1000000]");
  }

  const int leaves = principal_only ? 1 : leaf_count(m);
  std::vector<CloverPoint> points;
  points.reserve(static_cast<std::size_t>(leaves) * static_cast<std::size_t>(samples));

  for (int j = 0; j < leaves; ++j) {
    const double rotation = 4.0 * kPi * j / m;
    for (int i = 0; i < samples; ++i) {
      const double frac = -1.0 + 2.0 * i / (samples - 1);
      const double theta = frac * kPi / m;
      double radius = 0.0;
      if (i != 0 && i != samples - 1) {
        // radius^(m/2) = cos(m * theta / 2); the endpoints are pinned to the
        // origin exactly rather than through cos of a rounded +-pi/2.
        const double c = std::cos(frac * kPi / 2.0);
        radius = c <= 0.0 ? 0.0 : std::pow(c, 2.0 / m);
      }
      const double angle = theta + rotation;
      points.push_back({radius, angle, radius * std::cos(angle), radius * std::sin(angle)});
    }
  }
  return points;
}

}  // namespace clover
