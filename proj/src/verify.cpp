#include "clover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "clover/clover.hpp"
#include "clover/cong_gamma.hpp"
#include "clover/moments.hpp"
#include "clover/quadrature.hpp"
#include "clover/rational.hpp"
#include "clover/real_gamma.hpp"
#include "clover/wallis.hpp"

namespace clover {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Independently computed 17-digit values of varpi_m (Beta closed form in
// 40-digit arithmetic), used as fixed references for m = 1..6.
constexpr double kVarpiReference[7] = {0.0,
                                       4.0,
                                       3.1415926535897932,
                                       2.8043642106509085,
                                       2.6220575542921198,
                                       2.5074612496344145,
                                       2.4286506478875816};

// 1/sqrt(1 - t) over [lo, hi] in the signed-distance form, exact against
// cancellation at t = 1 when hi = 1.
std::function<double(double, double)> inv_sqrt_one_minus_t(double lo, double hi) {
  return [lo, hi](double t, double s) {
    (void)t;
    const double one_minus = s < 0.0 ? (1.0 - hi) - s : (1.0 - lo) - s;
    return 1.0 / std::sqrt(one_minus);
  };
}

std::function<double(double, double)> inv_sqrt_one_minus_pow(int m) {
  return [m](double t, double s) {
    const double u = s < 0.0 ? s : s - 1.0;  // t - 1 on [0, 1]
    const double one_minus = t < 0.5
                                 ? 1.0 - std::pow(t, static_cast<double>(m))
                                 : -std::expm1(static_cast<double>(m) * std::log1p(u));
    return 1.0 / std::sqrt(one_minus);
  };
}

struct Ctx {
  VerifyOptions opt;
  std::vector<CheckRow> rows;
  std::map<std::pair<int, int>, double> moment_cache;

  void add(std::string name, int m, int n, double residual, double tolerance) {
    rows.push_back({std::move(name), m, n, residual, tolerance, residual <= tolerance});
  }

  double moment(int m, int n) {
    const auto key = std::make_pair(m, n);
    auto it = moment_cache.find(key);
    if (it != moment_cache.end()) return it->second;
    const double value = moment_quadrature(m, n).value;
    moment_cache.emplace(key, value);
    return value;
  }
};

void check_cong_gamma(Ctx& c) {
  const auto& o = c.opt;
  for (int m = o.m_lo; m <= o.m_hi; ++m) {
    const auto mu = static_cast<unsigned long>(m);

    // Recursion unroll: Gamma_m(n+1, k) = (m n + k) Gamma_m(n, k), except
    // at (n, k) = (0, 0) where the zero factor is skipped by definition.
    double bad = 0.0;
    for (int n = std::max(o.n_lo, 0); n <= o.n_hi; ++n) {
      for (int k = 0; k < m; ++k) {
        if (n == 0 && k == 0) continue;
        const mpz_class lhs = cong_gamma(mu, static_cast<unsigned long>(n + 1),
                                         static_cast<unsigned long>(k));
        const mpz_class rhs = cong_gamma(mu, static_cast<unsigned long>(n),
                                         static_cast<unsigned long>(k)) *
                              static_cast<unsigned long>(m * n + k);
        if (lhs != rhs) bad += 1.0;
      }
    }
    c.add("cong_gamma/recursion", m, -1, bad, 0.0);

    // Real-Gamma closed form, including residues at and above the modulus.
    double worst = 0.0;
    bool any = false;
    for (int n = std::max(o.n_lo, 0); n <= o.n_hi; ++n) {
      for (int k = 1; k <= m + 2; ++k) {
        if (m * n + k > 300) continue;
        const double cf = cong_gamma_closed_form(mu, static_cast<unsigned long>(n),
                                                 static_cast<unsigned long>(k));
        const double exact = detail::cong_gamma_product(mu, static_cast<unsigned long>(n),
                                                        static_cast<unsigned long>(k))
                                 .get_d();
        worst = std::max(worst, std::fabs(cf / exact - 1.0));
        any = true;
      }
    }
    if (any) c.add("cong_gamma/closed_form", m, -1, worst, 1e-12);

    // Non-decreasing in n for n >= 1, strictly once the recursion factor
    // m n + k reaches 2 (a factor of exactly 1 yields a flat step).
    bad = 0.0;
    for (int n = std::max(o.n_lo, 1); n < o.n_hi; ++n) {
      for (int k = 0; k < m; ++k) {
        const mpz_class a =
            cong_gamma(mu, static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        const mpz_class b = cong_gamma(mu, static_cast<unsigned long>(n + 1),
                                       static_cast<unsigned long>(k));
        if (b < a) bad += 1.0;
        if (m * n + k >= 2 && b <= a) bad += 1.0;
      }
    }
    c.add("cong_gamma/monotonic", m, -1, bad, 0.0);
  }

  if (o.m_lo <= 1) {
    // At modulus 1 the skip-zero product is a shifted factorial.
    double bad = 0.0;
    for (int n = std::max(o.n_lo, 1); n <= o.n_hi; ++n) {
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n - 1));
      if (cong_gamma(1, static_cast<unsigned long>(n), 0) != fact) bad += 1.0;
    }
    c.add("cong_gamma/factorial", 1, -1, bad, 0.0);
  }

  if (o.m_lo <= 2 && 2 <= o.m_hi) {
    // Pins the m^n scaling of the closed form: without it the real-Gamma
    // ratio at (m, n, k) = (2, 1, 1) evaluates to 1/4, not Gamma_2(1,1) = 1.
    const double unscaled = gamma_real(1.5) / (2.0 * gamma_real(0.5));
    c.add("cong_gamma/closed_form_normalization", 2, 1, std::fabs(unscaled - 0.25), 1e-15);
  }
}

void check_quadrature(Ctx& c) {
  // Reference values: l_m(1) = varpi_m / 2 for m = 1, 2, 4, with the m = 4
  // reference taken from the independent Beta route.
  {
    const double v1 = integrate_singular(inv_sqrt_one_minus_t(0.0, 1.0), 0.0, 1.0).value;
    c.add("quadrature/reference", 1, -1, std::fabs(v1 - 2.0), 1e-13);
    const double v2 = integrate_singular(inv_sqrt_one_minus_pow(2), 0.0, 1.0).value;
    c.add("quadrature/reference", 2, -1, std::fabs(v2 - kPi / 2.0), 1e-13);
    const double v4 = integrate_singular(inv_sqrt_one_minus_pow(4), 0.0, 1.0).value;
    c.add("quadrature/reference", 4, -1, std::fabs(v4 - varpi_beta_oracle(4) / 2.0), 1e-13);
  }

  {
    // Linearity against a smooth second integrand.
    const auto g = [](double t, double) { return t * t; };
    const double i_f = integrate_singular(inv_sqrt_one_minus_t(0.0, 1.0), 0.0, 1.0).value;
    const double i_g = integrate_singular(std::function<double(double, double)>(g), 0.0, 1.0).value;
    const auto combined = [](double t, double s) {
      const double one_minus = s < 0.0 ? -s : 1.0 - s;
      return 2.0 / std::sqrt(one_minus) + 3.0 * t * t;
    };
    const double i_c =
        integrate_singular(std::function<double(double, double)>(combined), 0.0, 1.0).value;
    c.add("quadrature/linearity", -1, -1, std::fabs(i_c - (2.0 * i_f + 3.0 * i_g)), 1e-12);
  }

  {
    // Interval additivity across an interior split of a singular integrand.
    const double whole = integrate_singular(inv_sqrt_one_minus_t(0.0, 1.0), 0.0, 1.0).value;
    const double left = integrate_singular(inv_sqrt_one_minus_t(0.0, 0.3), 0.0, 0.3).value;
    const double right = integrate_singular(inv_sqrt_one_minus_t(0.3, 1.0), 0.3, 1.0).value;
    c.add("quadrature/additivity", -1, -1, std::fabs(whole - (left + right)), 1e-12);
  }

  {
    const double a = integrate_singular(inv_sqrt_one_minus_pow(2), 0.0, 1.0).value;
    const double b = integrate_singular(inv_sqrt_one_minus_pow(2), 0.0, 1.0).value;
    c.add("quadrature/determinism", -1, -1, std::fabs(a - b), 0.0);
  }

  {
    const QuadratureResult q = integrate_singular(inv_sqrt_one_minus_pow(2), 0.0, 1.0);
    const double actual = std::fabs(q.value - kPi / 2.0);
    c.add("quadrature/error_estimate", 2, -1, actual,
          std::max(10.0 * q.error_estimate, 1e-14));
  }
}

void check_clover(Ctx& c) {
  const auto& o = c.opt;
  constexpr int kGrid = 16;
  constexpr int kFdGrid = 8;

  for (int m = o.m_lo; m <= o.m_hi; ++m) {
    const double w = varpi(m);
    const double half = 0.5 * w;

    double worst = 0.0;
    for (int i = 1; i <= kGrid; ++i) {
      const double x = w * i / (kGrid + 1);
      const double phi = clover_fn(m, x);
      const double dphi = clover_fn_derivative(m, x);
      worst = std::max(worst,
                       std::fabs(std::pow(phi, static_cast<double>(m)) + dphi * dphi - 1.0));
    }
    c.add("clover/pythagorean_analytic", m, -1, worst, 1e-10);

    // Central difference vs the analytic derivative.
    const double h1 = 1e-6;
    worst = 0.0;
    for (int i = 1; i <= kFdGrid; ++i) {
      const double x = h1 + (w - 2.0 * h1) * i / (kFdGrid + 1);
      const double fd = (clover_fn(m, x + h1) - clover_fn(m, x - h1)) / (2.0 * h1);
      worst = std::max(worst, std::fabs(fd - clover_fn_derivative(m, x)));
    }
    c.add("clover/pythagorean_fd", m, -1, worst, 1e-5);

    // Second difference vs phi'' = -(m/2) phi^(m-1). The wider step trades
    // truncation error for the roundoff that h = 1e-6 would amplify; the
    // quartic derivative grows like m^3, so this stays meaningful for the
    // small m it runs at.
    if (m <= 12) {
      const double h2 = 1e-3;
      worst = 0.0;
      for (int i = 1; i <= kFdGrid; ++i) {
        const double x = h2 + (w - 2.0 * h2) * i / (kFdGrid + 1);
        const double phi = clover_fn(m, x);
        const double fd2 =
            (clover_fn(m, x + h2) - 2.0 * phi + clover_fn(m, x - h2)) / (h2 * h2);
        worst = std::max(
            worst, std::fabs(fd2 + 0.5 * m * std::pow(phi, static_cast<double>(m - 1))));
      }
      c.add("clover/second_derivative", m, -1, worst, 1e-4);
    }

    worst = 0.0;
    for (int i = 1; i <= kFdGrid; ++i) {
      const double y = half * i / (kFdGrid + 1);
      worst = std::max(worst, std::fabs(arc_length(m, clover_fn(m, y)) - y));
    }
    c.add("clover/inverse_roundtrip", m, -1, worst, 1e-12);

    // Reflection symmetry, approached from above the midpoint where the
    // fold makes the two evaluations bitwise identical.
    worst = 0.0;
    for (int i = 1; i <= kFdGrid; ++i) {
      const double x = half + half * i / (kFdGrid + 2);
      worst = std::max(worst, std::fabs(clover_fn(m, x) - clover_fn(m, w - x)));
    }
    c.add("clover/symmetry", m, -1, worst, 0.0);

    worst = 0.0;
    for (const CloverPoint& p : sample_curve(m, 33, false)) {
      worst = std::max(worst, std::fabs(std::pow(p.radius, 0.5 * m) -
                                        std::cos(0.5 * m * p.angle)));
    }
    c.add("clover/polar_identity", m, -1, worst, 1e-12);

    // Quadrature, Beta closed form, and the product limit must agree.
    const double target = std::max(1e-10, o.default_tol / 10.0);
    const double v_quad = varpi(m);
    const double v_beta = varpi_beta_oracle(m);
    const double v_prod = estimate_varpi(m, target).value;
    const double spread = std::max({std::fabs(v_quad - v_beta), std::fabs(v_quad - v_prod),
                                    std::fabs(v_beta - v_prod)});
    c.add("clover/varpi_routes", m, -1, spread, o.default_tol);

    if (m <= 6) {
      c.add("clover/varpi_reference", m, -1, std::fabs(w - kVarpiReference[m]), 1e-10);
    }
  }

  if (o.m_lo <= 2 && 2 <= o.m_hi) {
    c.add("clover/varpi_two_is_pi", 2, -1, std::fabs(varpi(2) - kPi), 1e-12);
  }
}

void check_moments(Ctx& c) {
  const auto& o = c.opt;
  for (int m = o.m_lo; m <= o.m_hi; ++m) {
    double worst = 0.0;
    bool any = false;
    for (int n = o.n_lo; n <= o.n_hi && n + m <= 200; ++n) {
      const double lhs = c.moment(m, n + m);
      const double rhs = recurrence_ratio(m, n).to_double() * c.moment(m, n);
      worst = std::max(worst, std::fabs(lhs - rhs));
      any = true;
    }
    if (any) c.add("moments/recurrence", m, -1, worst, o.default_tol);

    worst = 0.0;
    any = false;
    for (int n = o.n_lo; n < o.n_hi && n + 1 <= 200; ++n) {
      worst = std::max(worst, c.moment(m, n + 1) - c.moment(m, n));
      any = true;
    }
    if (any) c.add("moments/monotonic", m, -1, std::max(worst, 0.0), 1e-12);

    if (m <= 8) {
      const double w = varpi(m);
      const double a = std::fabs(c.moment(m, 0) - w);
      const double b = std::fabs(c.moment(m, m - 1) - 4.0 / m);
      const double d = std::fabs(c.moment(m, m) - 2.0 * w / (m + 2));
      c.add("moments/reference", m, -1, std::max({a, b, d}), 1e-10);
    }

    // Telescoped recurrence ratios must reproduce the closed-form
    // coefficients exactly, in both exponent families.
    double bad = 0.0;
    bool saw = false;
    for (int n = std::max(o.n_lo, 1); n <= std::min(o.n_hi, 20); ++n) {
      Rational tele_mn(1);
      for (int j = 1; j <= n; ++j) tele_mn *= recurrence_ratio(m, m * (j - 1));
      if (moment_closed_form(m, n, MomentForm::at_mn).coefficient != tele_mn) bad += 1.0;

      Rational tele_mn1(1);
      for (int j = 1; j <= n - 1; ++j) tele_mn1 *= recurrence_ratio(m, m * j - 1);
      if (moment_closed_form(m, n, MomentForm::at_mn_minus_1).coefficient != tele_mn1) {
        bad += 1.0;
      }
      saw = true;
    }
    if (saw) c.add("moments/closed_form_vs_recurrence", m, -1, bad, 0.0);

    worst = 0.0;
    any = false;
    for (int n = o.n_lo; n <= std::min(o.n_hi, 199); ++n) {
      const SqueezeDiagnostic d = squeeze_diagnostic(m, n);
      const double breach =
          std::max({d.lower_bound - d.ratio, d.ratio - 1.0, 0.0});
      worst = std::max(worst, breach);
      any = true;
    }
    if (any) c.add("moments/squeeze", m, -1, worst, o.default_tol);
  }
}

void check_wallis(Ctx& c) {
  const auto& o = c.opt;
  for (int m = o.m_lo; m <= o.m_hi; ++m) {
    // The finite limit formula telescopes onto the partial products.
    if (m <= 10) {
      double bad = 0.0;
      bool any = false;
      for (int n = std::max(o.n_lo, 1); n <= std::min(o.n_hi, 50); ++n) {
        if (limit_formula(m, n) != partial_product(m, n - 1).exact) bad += 1.0;
        any = true;
      }
      if (any) c.add("wallis/limit_formula_telescopes", m, -1, bad, 0.0);
    }

    double bad = 0.0;
    Rational prev = partial_product(m, 0).exact;
    for (int n = 1; n <= std::min(o.n_hi, 16); ++n) {
      const Rational cur = partial_product(m, n).exact;
      if (!(cur < prev)) bad += 1.0;
      prev = cur;
    }
    c.add("wallis/monotone_decreasing", m, -1, bad, 0.0);

    bad = 0.0;
    for (int n = std::max(o.n_lo, 1); n <= std::max(o.n_hi, 8); ++n) {
      const Rational t = product_term(m, n);
      if (!(t > Rational(0) && t < Rational(1))) bad += 1.0;
      // The un-reduced factor is 2n(2mn+m+2) over (2n+1)(2mn+2); the gap of
      // exactly 2 is what makes every factor fall just short of 1.
      const auto nn = static_cast<unsigned long>(n);
      const auto mm = static_cast<unsigned long>(m);
      const unsigned long raw_num = 2 * nn * (2 * mm * nn + mm + 2);
      const unsigned long raw_den = (2 * nn + 1) * (2 * mm * nn + 2);
      if (raw_den - raw_num != 2) bad += 1.0;
      if (t != Rational(mpz_class(static_cast<unsigned long>(raw_num)),
                        mpz_class(static_cast<unsigned long>(raw_den)))) {
        bad += 1.0;
      }
    }
    c.add("wallis/factor_gap", m, -1, bad, 0.0);

    const double p = partial_product(m, 4096).approx;
    c.add("wallis/bounded_below", m, -1, std::max(varpi(m) - p, 0.0), 1e-12);

    const double t = std::max(1e-8, o.default_tol);
    const VarpiEstimate est = estimate_varpi(m, t);
    c.add("wallis/estimate_accuracy", m, -1, std::fabs(est.value - varpi(m)), 10.0 * t);

    if (m == 1 || m == 2 || m == 4) {
      const auto rows = convergence_report(m, {1000, 2000, 4000, 8000});
      double lo = rows[0].scaled_error;
      double hi = lo;
      double sum = 0.0;
      for (const ConvergenceRow& r : rows) {
        lo = std::min(lo, r.scaled_error);
        hi = std::max(hi, r.scaled_error);
        sum += r.scaled_error;
      }
      const double mean = sum / static_cast<double>(rows.size());
      c.add("wallis/convergence_model", m, -1, (hi - lo) / mean, 0.2);
    }
  }

  if (o.m_lo <= 2 && 2 <= o.m_hi) {
    // Exact bridge to the classical product: P_N at m = 2 equals
    // [4(N+1)/(2N+1)] * prod_{n<=N} 4n^2/(4n^2 - 1).
    const long N = 200;
    mpz_class cnum = 1;
    mpz_class cden = 1;
    for (long n = 1; n <= N; ++n) {
      const auto nn = static_cast<unsigned long>(n);
      cnum *= 4 * nn * nn;
      cden *= (2 * nn - 1) * (2 * nn + 1);
    }
    const Rational rhs =
        Rational(cnum * 4 * (N + 1), cden * (2 * N + 1));
    const double bad = partial_product(2, N).exact == rhs ? 0.0 : 1.0;
    c.add("wallis/classical_two", 2, -1, bad, 0.0);
  }
}

}  // namespace

std::vector<CheckRow> run_verification(const VerifyOptions& options) {
  if (options.m_lo < 1 || options.m_hi > kMaxCloverIndex || options.m_lo > options.m_hi) {
    throw std::domain_error("verification requires 1 <= m_lo <= m_hi <= 64");
  }
  if (options.n_lo < 0 || options.n_hi > 200 || options.n_lo > options.n_hi) {
    throw std::domain_error("verification requires 0 <= n_lo <= n_hi <= 200");
  }
  if (!(options.default_tol >= 1e-15 && options.default_tol <= 1e-3)) {
    throw std::domain_error("verification tolerance must lie in [1e-15, 1e-3]");
  }

  Ctx c{options, {}, {}};
  check_cong_gamma(c);
  check_quadrature(c);
  check_clover(c);
  check_moments(c);
  check_wallis(c);

  std::sort(c.rows.begin(), c.rows.end(), [](const CheckRow& a, const CheckRow& b) {
    if (a.name != b.name) return a.name < b.name;
    if (a.m != b.m) return a.m < b.m;
    return a.n < b.n;
  });
  return c.rows;
}

}  // namespace clover
