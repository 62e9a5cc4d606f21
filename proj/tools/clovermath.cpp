// clovermath: command-line front-end for the clover constants, the clover
// function, moment identities, and the generalized Wallis product.
//
// Subcommands: varpi | product | clover | moments | verify | report.
// Global flags: --format {human,json,csv} (svg additionally for clover
// --render), --tol FLOAT, --seedless (reserved; always rejected, there is no
// randomness anywhere). Exit codes: 0 success, 1 tolerance or computation
// failure, 2 usage error. Output is byte-deterministic: no timestamps, no
// locale dependence, fixed key and row ordering.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "clover/clover.hpp"
#include "clover/moments.hpp"
#include "clover/quadrature.hpp"
#include "clover/rational.hpp"
#include "clover/verify.hpp"
#include "clover/wallis.hpp"

namespace {

using nlohmann::json;

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

struct RangePair {
  int lo;
  int hi;
};

RangePair parse_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    throw std::domain_error(std::string(flag) + " expects LO:HI");
  }
  try {
    const int lo = std::stoi(text.substr(0, colon));
    const int hi = std::stoi(text.substr(colon + 1));
    if (lo > hi) throw std::domain_error(std::string(flag) + " requires LO <= HI");
    return {lo, hi};
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::domain_error(std::string(flag) + " expects integers LO:HI");
  }
}

std::vector<long> parse_checkpoints(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw std::domain_error("--checkpoints expects comma-separated integers");
    }
  }
  if (out.empty()) throw std::domain_error("--checkpoints expects at least one value");
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) {
      throw std::domain_error("--checkpoints must be strictly ascending");
    }
  }
  return out;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << payload;
  if (!f) throw std::runtime_error("failed to write output file: " + out_path);
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- varpi ---

int cmd_varpi(int m, const std::string& method, double tol, const std::string& fmt) {
  if (fmt == "svg") throw std::domain_error("--format svg is only valid for clover --render");

  std::map<std::string, double> values;
  long product_terms = -1;
  bool product_accelerated = false;

  const auto run = [&](const char* name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string("method ") + name + " failed: " + e.what());
    }
  };
  if (method == "quadrature" || method == "all") {
    run("quadrature", [&] { values["quadrature"] = clover::varpi(m); });
  }
  if (method == "beta" || method == "all") {
    run("beta", [&] { values["beta"] = clover::varpi_beta_oracle(m); });
  }
  if (method == "product" || method == "all") {
    run("product", [&] {
      const clover::VarpiEstimate est =
          clover::estimate_varpi(m, std::max(1e-10, tol / 10.0));
      values["product"] = est.value;
      product_terms = est.terms_used;
      product_accelerated = est.accelerated;
    });
  }

  double max_discrepancy = 0.0;
  for (const auto& [ka, va] : values) {
    for (const auto& [kb, vb] : values) {
      (void)ka;
      (void)kb;
      max_discrepancy = std::max(max_discrepancy, std::fabs(va - vb));
    }
  }
  const bool all = method == "all";
  const bool within = max_discrepancy <= tol;

  std::string payload;
  if (fmt == "json") {
    json j;
    j["command"] = "varpi";
    j["m"] = m;
    j["method"] = method;
    j["tol"] = tol;
    json vals;
    for (const auto& [k, v] : values) vals[k] = v;
    j["values"] = vals;
    if (product_terms >= 0) {
      j["product_terms"] = product_terms;
      j["product_accelerated"] = product_accelerated;
    }
    if (all) {
      j["max_discrepancy"] = max_discrepancy;
      j["within_tol"] = within;
    }
    payload = dump_json(j);
  } else if (fmt == "csv") {
    payload = "method,value\n";
    for (const auto& [k, v] : values) payload += k + "," + format_double(v) + "\n";
    if (all) payload += "max_discrepancy," + format_double(max_discrepancy) + "\n";
  } else {
    std::ostringstream os;
    os << "varpi_" << m << "\n";
    for (const auto& [k, v] : values) {
      os << "  " << k << " = " << format_double(v);
      if (k == "product") {
        os << " (terms=" << product_terms
           << (product_accelerated ? ", accelerated" : ", plain") << ")";
      }
      os << "\n";
    }
    if (all) {
      os << "  max pairwise discrepancy = " << format_double(max_discrepancy) << " (tol "
         << format_double(tol) << ") -> " << (within ? "OK" : "FAIL") << "\n";
    }
    payload = os.str();
  }
  emit(payload, "");
  return all && !within ? 1 : 0;
}

// -------------------------------------------------------------- product ---

int cmd_product(int m, long terms, bool exact, const std::string& fmt) {
  if (fmt == "svg") throw std::domain_error("--format svg is only valid for clover --render");
  if (exact && terms > clover::kExactProductCap) {
    throw std::domain_error(
        "--exact supports at most 10000 terms; rerun with --terms <= 10000 or drop --exact");
  }
  const clover::PartialProduct pp = clover::partial_product(m, terms);

  std::string payload;
  if (fmt == "json") {
    json j;
    j["command"] = "product";
    j["m"] = pp.m;
    j["terms"] = pp.terms;
    j["exact_terms"] = pp.exact_terms;
    j["approx"] = pp.approx;
    if (exact) j["exact"] = pp.exact.to_string();
    payload = dump_json(j);
  } else if (fmt == "csv") {
    payload = "m,terms,approx,exact\n";
    payload += std::to_string(pp.m) + "," + std::to_string(pp.terms) + "," +
               format_double(pp.approx) + "," + (exact ? pp.exact.to_string() : "") + "\n";
  } else {
    std::ostringstream os;
    os << "m: " << pp.m << "\n";
    os << "terms: " << pp.terms << "\n";
    os << "approx: " << format_double(pp.approx) << "\n";
    if (exact) os << "exact: " << pp.exact.to_string() << "\n";
    payload = os.str();
  }
  emit(payload, "");
  return 0;
}

// --------------------------------------------------------------- clover ---

std::string svg_payload(const std::vector<clover::CloverPoint>& pts, int samples) {
  std::string s =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
  for (std::size_t start = 0; start < pts.size(); start += static_cast<std::size_t>(samples)) {
    s += "  <path d=\"";
    for (int i = 0; i < samples; ++i) {
      const clover::CloverPoint& p = pts[start + static_cast<std::size_t>(i)];
      s += (i == 0 ? "M " : " L ");
      // SVG's y axis points down; mirror it so the curve renders upright.
      s += format_double(p.x) + " " + format_double(-p.y);
    }
    s += "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.01\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

int cmd_clover(int m, std::optional<double> eval_x, bool render, int samples, bool all_leaves,
               const std::string& out, const std::string& fmt) {
  if (eval_x.has_value() == render) {
    throw std::domain_error("clover requires exactly one of --eval X or --render");
  }
  if (eval_x) {
    if (fmt == "svg") {
      throw std::domain_error("--format svg is only valid for clover --render");
    }
    const double x = *eval_x;
    const double phi = clover::clover_fn(m, x);
    const double dphi = clover::clover_fn_derivative(m, x);
    std::string payload;
    if (fmt == "json") {
      json j;
      j["command"] = "clover";
      j["mode"] = "eval";
      j["m"] = m;
      j["x"] = x;
      j["phi"] = phi;
      j["phi_prime"] = dphi;
      payload = dump_json(j);
    } else if (fmt == "csv") {
      payload = "x,phi,phi_prime\n" + format_double(x) + "," + format_double(phi) + "," +
                format_double(dphi) + "\n";
    } else {
      payload = "phi_" + std::to_string(m) + "(" + format_double(x) +
                ") = " + format_double(phi) + "\nphi_" + std::to_string(m) + "'(" +
                format_double(x) + ") = " + format_double(dphi) + "\n";
    }
    emit(payload, out);
    return 0;
  }

  // Render: SVG by default (also under --format svg), CSV under --format csv.
  if (fmt == "json") {
    throw std::domain_error("clover --render emits svg or csv; --format json is not valid");
  }
  const auto pts = clover::sample_curve(m, samples, !all_leaves);
  std::string payload;
  if (fmt == "csv") {
    payload = "theta,r,x,y\n";
    for (const clover::CloverPoint& p : pts) {
      payload += format_double(p.angle) + "," + format_double(p.radius) + "," +
                 format_double(p.x) + "," + format_double(p.y) + "\n";
    }
  } else {
    payload = svg_payload(pts, samples);
  }
  emit(payload, out);
  return 0;
}

// -------------------------------------------------------------- moments ---

struct MomentRow {
  int n;
  double quadrature;
  std::optional<clover::ClosedFormMoment> closed;
  std::optional<clover::SqueezeDiagnostic> squeeze;
};

int cmd_moments(int m, const std::vector<int>& exponents, const std::string& fmt) {
  if (fmt == "svg") throw std::domain_error("--format svg is only valid for clover --render");

  std::vector<MomentRow> rows;
  bool all_within = true;
  for (int n : exponents) {
    MomentRow row{n, clover::moment_quadrature(m, n).value, std::nullopt, std::nullopt};
    if (n >= 1 && n % m == 0) {
      row.closed = clover::moment_closed_form(m, n / m, clover::MomentForm::at_mn);
    } else if (n >= 1 && (n + 1) % m == 0) {
      row.closed =
          clover::moment_closed_form(m, (n + 1) / m, clover::MomentForm::at_mn_minus_1);
    }
    if (n <= 199) {
      row.squeeze = clover::squeeze_diagnostic(m, n);
      if (!row.squeeze->within_bounds) all_within = false;
    }
    rows.push_back(std::move(row));
  }

  const auto basis_name = [](clover::MomentBasis b) {
    return b == clover::MomentBasis::varpi_m ? "varpi_m" : "four_over_m";
  };

  std::string payload;
  if (fmt == "json") {
    json j;
    j["command"] = "moments";
    j["m"] = m;
    j["all_within"] = all_within;
    json arr = json::array();
    for (const MomentRow& r : rows) {
      json e;
      e["n"] = r.n;
      e["quadrature"] = r.quadrature;
      if (r.closed) {
        e["closed_form"] = r.closed->coefficient.to_string();
        e["basis"] = basis_name(r.closed->basis);
        e["closed_form_value"] = clover::closed_form_value(*r.closed);
      }
      if (r.squeeze) {
        e["ratio_next"] = r.squeeze->ratio;
        e["lower_bound"] = r.squeeze->lower_bound;
        e["within_bounds"] = r.squeeze->within_bounds;
      }
      arr.push_back(std::move(e));
    }
    j["rows"] = std::move(arr);
    payload = dump_json(j);
  } else if (fmt == "csv") {
    payload = "m,n,quadrature,closed_form,basis,ratio_next,lower_bound,within_bounds\n";
    for (const MomentRow& r : rows) {
      payload += std::to_string(m) + "," + std::to_string(r.n) + "," +
                 format_double(r.quadrature) + ",";
      payload += (r.closed ? r.closed->coefficient.to_string() : "") + ",";
      payload += (r.closed ? basis_name(r.closed->basis) : "") + std::string(",");
      if (r.squeeze) {
        payload += format_double(r.squeeze->ratio) + "," +
                   format_double(r.squeeze->lower_bound) + "," +
                   (r.squeeze->within_bounds ? "true" : "false");
      } else {
        payload += ",,";
      }
      payload += "\n";
    }
  } else {
    std::ostringstream os;
    for (const MomentRow& r : rows) {
      os << "I_" << m << "(" << r.n << ") = " << format_double(r.quadrature);
      if (r.closed) {
        os << "  closed_form = " << r.closed->coefficient.to_string() << " * "
           << (r.closed->basis == clover::MomentBasis::varpi_m ? "varpi_m" : "(4/m)")
           << " = " << format_double(clover::closed_form_value(*r.closed));
      }
      if (r.squeeze) {
        os << "  ratio_next = " << format_double(r.squeeze->ratio) << " >= "
           << format_double(r.squeeze->lower_bound)
           << (r.squeeze->within_bounds ? " (ok)" : " (VIOLATED)");
      }
      os << "\n";
    }
    payload = os.str();
  }
  emit(payload, "");
  return all_within ? 0 : 1;
}

// --------------------------------------------------------------- verify ---

int cmd_verify(const std::string& m_range, const std::string& n_range, double tol,
               const std::string& fmt) {
  if (fmt == "svg") throw std::domain_error("--format svg is only valid for clover --render");
  const RangePair mr = parse_range(m_range, "--m-range");
  const RangePair nr = parse_range(n_range, "--n-range");
  clover::VerifyOptions opts;
  opts.m_lo = mr.lo;
  opts.m_hi = mr.hi;
  opts.n_lo = nr.lo;
  opts.n_hi = nr.hi;
  opts.default_tol = tol;

  const std::vector<clover::CheckRow> rows = clover::run_verification(opts);
  long failures = 0;
  const clover::CheckRow* first_fail = nullptr;
  for (const clover::CheckRow& r : rows) {
    if (!r.pass) {
      ++failures;
      if (first_fail == nullptr) first_fail = &r;
    }
  }

  std::string payload;
  if (fmt == "json") {
    json j;
    j["command"] = "verify";
    j["m_lo"] = opts.m_lo;
    j["m_hi"] = opts.m_hi;
    j["n_lo"] = opts.n_lo;
    j["n_hi"] = opts.n_hi;
    j["tol"] = opts.default_tol;
    j["all_pass"] = failures == 0;
    j["failures"] = failures;
    json arr = json::array();
    for (const clover::CheckRow& r : rows) {
      json e;
      e["name"] = r.name;
      e["m"] = r.m;
      e["n"] = r.n;
      e["residual"] = r.residual;
      e["tolerance"] = r.tolerance;
      e["pass"] = r.pass;
      arr.push_back(std::move(e));
    }
    j["rows"] = std::move(arr);
    payload = dump_json(j);
  } else if (fmt == "csv") {
    payload = "name,m,n,residual,tolerance,pass\n";
    for (const clover::CheckRow& r : rows) {
      payload += r.name + "," + std::to_string(r.m) + "," + std::to_string(r.n) + "," +
                 format_double(r.residual) + "," + format_double(r.tolerance) + "," +
                 (r.pass ? "true" : "false") + "\n";
    }
  } else {
    std::ostringstream os;
    for (const clover::CheckRow& r : rows) {
      os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
      if (r.m >= 0) os << " m=" << r.m;
      if (r.n >= 0) os << " n=" << r.n;
      os << " residual=" << format_double(r.residual)
         << " tol=" << format_double(r.tolerance) << "\n";
    }
    os << (failures == 0 ? "all checks passed" : "checks FAILED") << " (" << rows.size()
       << " rows, " << failures << " failures)\n";
    payload = os.str();
  }
  emit(payload, "");
  if (failures > 0) {
    std::cerr << "first failing check: " << first_fail->name << " (m=" << first_fail->m
              << ", n=" << first_fail->n << ")\n";
    return 1;
  }
  return 0;
}

// --------------------------------------------------------------- report ---

int cmd_report(int m, const std::string& checkpoints, const std::string& fmt) {
  if (fmt == "svg") throw std::domain_error("--format svg is only valid for clover --render");
  const std::vector<long> cps = parse_checkpoints(checkpoints);
  const auto rows = clover::convergence_report(m, cps);

  std::string payload;
  if (fmt == "json") {
    json j;
    j["command"] = "report";
    j["m"] = m;
    json arr = json::array();
    for (const clover::ConvergenceRow& r : rows) {
      json e;
      e["N"] = r.terms;
      e["P_N"] = r.partial;
      e["error"] = r.error;
      e["N_error"] = r.scaled_error;
      arr.push_back(std::move(e));
    }
    j["rows"] = std::move(arr);
    payload = dump_json(j);
  } else if (fmt == "csv") {
    payload = "N,P_N,error,N_error\n";
    for (const clover::ConvergenceRow& r : rows) {
      payload += std::to_string(r.terms) + "," + format_double(r.partial) + "," +
                 format_double(r.error) + "," + format_double(r.scaled_error) + "\n";
    }
  } else {
    std::ostringstream os;
    for (const clover::ConvergenceRow& r : rows) {
      os << "N=" << r.terms << "  P_N=" << format_double(r.partial)
         << "  error=" << format_double(r.error)
         << "  N*error=" << format_double(r.scaled_error) << "\n";
    }
    payload = os.str();
  }
  emit(payload, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clovermath: clover curves, clover constants, and a generalized Wallis product"};
  app.require_subcommand(1);

  std::string format = "human";
  double tol = 1e-9;
  bool seedless = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv", "svg"}));
  app.add_option("--tol", tol, "Comparison tolerance for cross-route checks")
      ->check(CLI::Range(1e-15, 1e-3));
  app.add_flag("--seedless", seedless,
               "Reserved. Every command is deterministic; there is no RNG to seed.");

  // varpi
  auto* sub_varpi = app.add_subcommand("varpi", "Compute the clover constant varpi_m");
  int varpi_m = 2;
  std::string varpi_method = "all";
  sub_varpi->add_option("--m", varpi_m, "Clover index")->required()->check(CLI::Range(1, 64));
  sub_varpi->add_option("--method", varpi_method, "quadrature | beta | product | all")
      ->check(CLI::IsMember({"quadrature", "beta", "product", "all"}));
  sub_varpi->fallthrough();

  // product
  auto* sub_product = app.add_subcommand("product", "Partial Wallis product P_N");
  int product_m = 2;
  long product_terms = 0;
  bool product_exact = false;
  sub_product->add_option("--m", product_m, "Clover index")
      ->required()
      ->check(CLI::Range(1, 64));
  sub_product->add_option("--terms", product_terms, "Number of product factors N")
      ->required()
      ->check(CLI::Range(0L, clover::kProductTermBudget));
  sub_product->add_flag("--exact", product_exact, "Also print the exact reduced fraction");
  sub_product->fallthrough();

  // clover
  auto* sub_clover = app.add_subcommand("clover", "Evaluate phi_m or render the m-clover");
  int clover_m = 2;
  double clover_x = 0.0;
  bool clover_render = false;
  int clover_samples = 512;
  bool clover_all_leaves = false;
  std::string clover_out;
  sub_clover->add_option("--m", clover_m, "Clover index")->required()->check(CLI::Range(1, 64));
  auto* opt_eval =
      sub_clover->add_option("--eval", clover_x, "Evaluate phi_m and phi_m' at arc length X");
  auto* opt_render =
      sub_clover->add_flag("--render", clover_render, "Emit the sampled curve (svg or csv)");
  opt_eval->excludes(opt_render);
  sub_clover->add_option("--samples", clover_samples, "Samples per leaf")
      ->check(CLI::Range(2, 1000000));
  sub_clover->add_flag("--all-leaves", clover_all_leaves, "Render every leaf, not just one");
  sub_clover->add_option("--out", clover_out, "Write the payload to a file instead of stdout");
  sub_clover->fallthrough();

  // moments
  auto* sub_moments = app.add_subcommand("moments", "Moment values, closed forms, and bounds");
  int moments_m = 2;
  int moments_n = -1;
  std::string moments_range;
  sub_moments->add_option("--m", moments_m, "Clover index")->required()->check(CLI::Range(1, 64));
  auto* opt_n = sub_moments->add_option("--n", moments_n, "Single moment exponent")
                    ->check(CLI::Range(0, 200));
  auto* opt_nr = sub_moments->add_option("--n-range", moments_range, "Exponent range LO:HI");
  opt_n->excludes(opt_nr);
  sub_moments->fallthrough();

  // verify
  auto* sub_verify = app.add_subcommand("verify", "Run the identity verification suite");
  std::string verify_m_range = "1:6";
  std::string verify_n_range = "0:12";
  sub_verify->add_option("--m-range", verify_m_range, "Clover index range LO:HI");
  sub_verify->add_option("--n-range", verify_n_range, "Index range LO:HI");
  sub_verify->fallthrough();

  // report
  auto* sub_report = app.add_subcommand("report", "Partial-product convergence table");
  int report_m = 2;
  std::string report_checkpoints = "1000,10000,100000";
  sub_report->add_option("--m", report_m, "Clover index")->required()->check(CLI::Range(1, 64));
  sub_report->add_option("--checkpoints", report_checkpoints,
                         "Comma-separated ascending term counts");
  sub_report->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (seedless) {
    std::cerr << "error: --seedless is reserved and not accepted: every clovermath command "
                 "is deterministic by construction (there is no RNG to seed)\n";
    return 2;
  }

  try {
    if (sub_varpi->parsed()) {
      return cmd_varpi(varpi_m, varpi_method, tol, format);
    }
    if (sub_product->parsed()) {
      return cmd_product(product_m, product_terms, product_exact, format);
    }
    if (sub_clover->parsed()) {
      std::optional<double> eval_x;
      if (opt_eval->count() > 0) eval_x = clover_x;
      return cmd_clover(clover_m, eval_x, clover_render, clover_samples, clover_all_leaves,
                        clover_out, format);
    }
    if (sub_moments->parsed()) {
      std::vector<int> exponents;
      if (opt_n->count() > 0) {
        exponents.push_back(moments_n);
      } else {
        const RangePair nr =
            parse_range(moments_range.empty() ? "0:12" : moments_range, "--n-range");
        if (nr.lo < 0 || nr.hi > 200) {
          throw std::domain_error("--n-range must lie within 0:200");
        }
        for (int n = nr.lo; n <= nr.hi; ++n) exponents.push_back(n);
      }
      return cmd_moments(moments_m, exponents, format);
    }
    if (sub_verify->parsed()) {
      return cmd_verify(verify_m_range, verify_n_range, tol, format);
    }
    if (sub_report->parsed()) {
      return cmd_report(report_m, report_checkpoints, format);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
