#pragma once

#include <string>
#include <vector>

namespace clover {

// One verification check. Checks that aggregate over a parameter sweep
// report the worst residual seen; m and n are -1 where not applicable.
// Exact (integer or bitwise) checks use residual 0 or 1 with tolerance 0.
struct CheckRow {
  std::string name;
  int m = -1;
  int n = -1;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  int m_lo = 1;
  int m_hi = 6;
  int n_lo = 0;
  int n_hi = 12;
  // Tolerance for the floating cross-route comparisons (the rows that
  // default to 1e-9). Structural tolerances are pinned per check and do not
  // move with this knob.
  double default_tol = 1e-9;
};

// Runs the full self-consistency suite over the requested ranges and
// returns the rows sorted by (name, m, n). Row names are stable identifiers
// of the check families.
std::vector<CheckRow> run_verification(const VerifyOptions& options = {});

}  // namespace clover
