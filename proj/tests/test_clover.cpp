#include "clover/clover.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using clover::arc_length;
using clover::clover_fn;
using clover::clover_fn_derivative;
using clover::CloverPoint;
using clover::leaf_count;
using clover::sample_curve;
using clover::varpi;
using clover::varpi_beta_oracle;

namespace {
constexpr double kPi = 3.14159265358979323846;

// High-precision references for varpi_m, m = 1..8 (independently computed
// and frozen; varpi_1 = 4 and varpi_2 = pi exactly).
constexpr double kVarpiRef[9] = {0.0,
                                 4.0,
                                 3.1415926535897932,
                                 2.8043642106509085,
                                 2.6220575542921198,
                                 2.5074612496344145,
                                 2.4286506478875816,
                                 2.3710880612035139,
                                 2.3271851424365388};
}  // namespace

TEST_CASE("leaf counts") {
  CHECK(leaf_count(1) == 1);
  CHECK(leaf_count(2) == 1);
  CHECK(leaf_count(3) == 3);
  CHECK(leaf_count(4) == 2);
  CHECK(leaf_count(5) == 5);
  CHECK(leaf_count(6) == 3);
  CHECK(leaf_count(7) == 7);
  CHECK(leaf_count(8) == 4);
  CHECK(leaf_count(9) == 9);
  CHECK(leaf_count(64) == 32);
}

TEST_CASE("arc length closed forms") {
  // l_1(r) = 2(1 - sqrt(1 - r)), l_2(r) = asin(r)
  for (double r : {0.1, 0.5, 0.9, 0.99, 1.0}) {
    CHECK(std::fabs(arc_length(1, r) - 2.0 * (1.0 - std::sqrt(1.0 - r))) <= 1e-13);
    CHECK(std::fabs(arc_length(2, r) - std::asin(r)) <= 1e-13);
  }
  CHECK(arc_length(3, 0.0) == 0.0);
  for (int m : {1, 2, 3, 5, 8}) {
    CHECK(std::fabs(2.0 * arc_length(m, 1.0) - varpi(m)) <= 1e-14);
  }
}

TEST_CASE("varpi anchors and frozen references") {
  CHECK(std::fabs(varpi(1) - 4.0) <= 1e-13);
  CHECK(std::fabs(varpi(2) - kPi) <= 1e-13);
  for (int m = 1; m <= 8; ++m) {
    CHECK(std::fabs(varpi(m) - kVarpiRef[m]) <= 1e-12);
  }
}

TEST_CASE("varpi agrees with the Beta-function route for every supported m") {
  for (int m = 1; m <= clover::kMaxCloverIndex; ++m) {
    CHECK(std::fabs(varpi(m) - varpi_beta_oracle(m)) <= 1e-12);
  }
}

TEST_CASE("varpi decreases strictly in m toward 2") {
  for (int m = 2; m <= clover::kMaxCloverIndex; ++m) {
    CHECK(varpi(m) < varpi(m - 1));
    CHECK(varpi(m) > 2.0);
  }
}

TEST_CASE("clover function anchors") {
  for (int m : {1, 2, 3, 4, 6, 8}) {
    const double w = varpi(m);
    CHECK(clover_fn(m, 0.0) == 0.0);
    CHECK(clover_fn(m, w) == 0.0);
    CHECK(clover_fn(m, 0.5 * w) == 1.0);
  }
  // phi_2 = sin, phi_1(x) = x - x^2/4
  for (double x : {0.1, 0.3, 1.0, 1.4}) {
    CHECK(std::fabs(clover_fn(2, x) - std::sin(x)) <= 1e-12);
  }
  CHECK(std::fabs(clover_fn(1, 1.0) - 0.75) <= 1e-12);
  for (double x : {0.2, 0.8, 1.5, 1.9}) {
    CHECK(std::fabs(clover_fn(1, x) - (x - 0.25 * x * x)) <= 1e-12);
  }
}

TEST_CASE("reflection symmetry is bit exact") {
  for (int m : {1, 2, 3, 5, 8}) {
    const double w = varpi(m);
    for (double f : {0.55, 0.7, 0.9, 0.99}) {
      const double x = f * w;
      CHECK(clover_fn(m, x) == clover_fn(m, w - x));
    }
  }
}

TEST_CASE("inverse round trip l_m(phi_m(y)) = y") {
  for (int m : {1, 2, 3, 4, 6, 8}) {
    const double w = varpi(m);
    for (int i = 1; i <= 9; ++i) {
      const double y = 0.5 * w * i / 10.0;
      CHECK(std::fabs(arc_length(m, clover_fn(m, y)) - y) <= 1e-12);
    }
  }
}

TEST_CASE("derivative endpoints and sign") {
  for (int m : {1, 2, 3, 5, 8}) {
    const double w = varpi(m);
    CHECK(clover_fn_derivative(m, 0.0) == 1.0);
    CHECK(clover_fn_derivative(m, w) == -1.0);
    CHECK(clover_fn_derivative(m, 0.5 * w) == 0.0);
    CHECK(clover_fn_derivative(m, 0.25 * w) > 0.0);
    CHECK(clover_fn_derivative(m, 0.75 * w) < 0.0);
  }
  for (double x : {0.2, 0.7, 1.2, 2.6}) {
    CHECK(std::fabs(clover_fn_derivative(2, x) - std::cos(x)) <= 1e-12);
  }
}

TEST_CASE("derivative matches a central finite difference") {
  const double h = 1e-6;
  for (int m : {1, 2, 3, 4, 6, 8}) {
    const double w = varpi(m);
    for (double f : {0.15, 0.35, 0.6, 0.85}) {
      const double x = f * w;
      const double fd = (clover_fn(m, x + h) - clover_fn(m, x - h)) / (2.0 * h);
      CHECK(std::fabs(fd - clover_fn_derivative(m, x)) <= 1e-5);
    }
  }
}

TEST_CASE("pythagorean-style identity phi^m + (phi')^2 = 1") {
  for (int m = 1; m <= 8; ++m) {
    const double w = varpi(m);
    for (int i = 1; i <= 15; ++i) {
      const double x = w * i / 16.0;
      const double phi = clover_fn(m, x);
      const double dphi = clover_fn_derivative(m, x);
      CHECK(std::fabs(std::pow(phi, m) + dphi * dphi - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("sample_curve pins endpoints and the leaf tip") {
  for (int m : {1, 2, 3, 4, 7}) {
    const auto pts = sample_curve(m, 9, true);
    REQUIRE(pts.size() == 9);
    CHECK(pts.front().radius == 0.0);
    CHECK(pts.front().x == 0.0);
    CHECK(pts.front().y == 0.0);
    CHECK(pts.back().radius == 0.0);
    // middle sample of an odd count sits at theta = 0: the leaf tip (1, 0)
    CHECK(pts[4].radius == 1.0);
    CHECK(pts[4].angle == 0.0);
    CHECK(pts[4].x == 1.0);
    CHECK(pts[4].y == 0.0);
  }
}

TEST_CASE("sample_curve leaf structure") {
  for (int m = 1; m <= 9; ++m) {
    const auto all = sample_curve(m, 7, false);
    CHECK(all.size() == static_cast<std::size_t>(leaf_count(m)) * 7);
    const auto one = sample_curve(m, 7, true);
    CHECK(one.size() == 7);
    // the principal leaf is the first chunk of the full sweep
    for (int i = 0; i < 7; ++i) {
      CHECK(all[static_cast<std::size_t>(i)].x == one[static_cast<std::size_t>(i)].x);
      CHECK(all[static_cast<std::size_t>(i)].y == one[static_cast<std::size_t>(i)].y);
    }
  }
}

TEST_CASE("sampled points satisfy the defining polar relation") {
  for (int m = 1; m <= 6; ++m) {
    for (const CloverPoint& p : sample_curve(m, 33, false)) {
      if (p.radius <= 0.0) continue;
      const double lhs = std::pow(p.radius, m / 2.0);
      const double rhs = std::cos(m * p.angle / 2.0);
      CHECK(std::fabs(lhs - rhs) <= 1e-12);
      // recomputing r*cos / r*sin here may differ by an ulp from the stored
      // coordinates (the library's paired sin/cos calls fuse into sincos)
      CHECK(std::fabs(p.x - p.radius * std::cos(p.angle)) <= 1e-15);
      CHECK(std::fabs(p.y - p.radius * std::sin(p.angle)) <= 1e-15);
    }
  }
}

TEST_CASE("the 2-clover is the circle (x - 1/2)^2 + y^2 = 1/4") {
  for (const CloverPoint& p : sample_curve(2, 360, false)) {
    const double dx = p.x - 0.5;
    CHECK(std::fabs(dx * dx + p.y * p.y - 0.25) <= 1e-12);
  }
}

TEST_CASE("domain rejections") {
  CHECK_THROWS_AS(leaf_count(0), std::domain_error);
  CHECK_THROWS_AS(leaf_count(65), std::domain_error);
  CHECK_THROWS_AS(varpi(0), std::domain_error);
  CHECK_THROWS_AS(varpi(-3), std::domain_error);
  CHECK_THROWS_AS(arc_length(2, -0.1), std::domain_error);
  CHECK_THROWS_AS(arc_length(2, 1.5), std::domain_error);
  CHECK_THROWS_AS(arc_length(2, std::nan("")), std::domain_error);
  CHECK_THROWS_AS(clover_fn(2, -0.1), std::domain_error);
  CHECK_THROWS_AS(clover_fn(2, varpi(2) + 0.1), std::domain_error);
  CHECK_THROWS_AS(sample_curve(2, 1), std::domain_error);
  CHECK_THROWS_AS(sample_curve(2, 1000001), std::domain_error);
}
