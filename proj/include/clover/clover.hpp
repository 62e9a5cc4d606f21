#pragma once

#include <vector>

namespace clover {

// Largest curve index the library accepts; costs grow mildly with m and the
// numerics below are validated across this whole range.
inline constexpr int kMaxCloverIndex = 64;

// One sampled point of an m-clover, in both polar and Cartesian form. The
// angle is the principal-leaf polar angle plus the leaf's rotation and is
// deliberately not reduced mod 2*pi: for odd m the rotations live mod 4*pi
// and reducing them would break the defining polar relation
// radius^(m/2) = cos(m * angle / 2).
struct CloverPoint {
  double radius;
  double angle;
  double x;
  double y;
};

// Number of distinct leaves of the m-clover: m when m is odd, m/2 when even
// (antipodal parameter angles trace the same leaf for even m).
int leaf_count(int m);

/**
 * Arc length of the m-clover's principal leaf from the origin to radius r,
 *
 *   l_m(r) = integral_0^r dt / sqrt(1 - t^m),   0 <= r <= 1.
 *
 * The integrand's inverse-square-root singularity at t = 1 is handled by the
 * tanh-sinh engine's signed-distance form, so full accuracy holds all the
 * way to r = 1. Throws QuadratureError if the quadrature fails to converge.
 */
double arc_length(int m, double r);

// Total arc length of one leaf: varpi_m = 2 * l_m(1). Memoized per m.
// varpi_1 = 4, varpi_2 = pi.
double varpi(int m);

// Independent closed form varpi_m = (2/m) * B(1/m, 1/2), used to cross-check
// the quadrature route.
double varpi_beta_oracle(int m);

/**
 * The clover function phi_m: the inverse of l_m on [0, varpi_m/2], extended
 * to [0, varpi_m] by the reflection phi_m(varpi_m - x) = phi_m(x). It gives
 * the radius of the point reached after arc length x along the leaf, and
 * satisfies phi_m^m + (phi_m')^2 = 1. phi_2 = sin. Inputs outside
 * [0, varpi_m] are rejected.
 */
double clover_fn(int m, double x);

// phi_m'(x) = +sqrt(1 - phi_m(x)^m) for x <= varpi_m/2, negated past the
// midpoint (the radius grows along the first half-leaf and shrinks after).
double clover_fn_derivative(int m, double x);

/**
 * Sample the m-clover with `samples` points per leaf, evenly spaced in the
 * polar angle of the principal leaf, theta in [-pi/m, pi/m]. Endpoints land
 * exactly at the origin. Leaf j is the principal leaf rotated by 4*pi*j/m,
 * which preserves radius^(m/2) = cos(m * angle / 2) term by term. With
 * principal_only the result holds one leaf, otherwise leaf_count(m) leaves
 * concatenated leaf by leaf.
 */
std::vector<CloverPoint> sample_curve(int m, int samples, bool principal_only = false);

namespace detail {
// Rejects curve indices outside [1, kMaxCloverIndex].
void require_clover_index(int m);
// 1 - t^m for t in [0, 1], stable against cancellation as t -> 1.
double one_minus_pow(double t, int m);
}  // namespace detail

}  // namespace clover
