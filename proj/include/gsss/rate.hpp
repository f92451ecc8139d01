#pragma once

#include <iosfwd>
#include <vector>

namespace gsss {

/// Upper bound on the Wasserstein contraction rate of the constant-target
/// geodesic walk in dimension d:
///
///   rho(d) = (1/2pi) * integral_0^{2pi} sqrt(cos^2 w + sin^2 w / (d-1)) dw.
///
/// Evaluated with the periodic trapezoidal rule, 4096 base nodes, doubled
/// until two consecutive levels agree to 1e-13. The integrand is analytic and
/// 2pi-periodic for d >= 3, so the base level is already exact to machine
/// precision for all d below ~1e5; the refinement only engages for larger d,
/// where the analyticity strip shrinks like 1/sqrt(d). Returns exactly 1 for
/// d = 2, values in (2/pi, 1) otherwise.
double rate_bound(int d);

/// Large-d limit of rate_bound: (1/2pi) * integral |cos| = 2/pi.
double rate_bound_asymptote();

/// 1 - rho; valid for rho in [0, 1], else OutOfRangeError.
double spectral_gap_lower_bound(double rho);

struct RateRow {
  int d;
  double rho;
  double gap_lower;         // 1 - rho
  double asymptote_excess;  // rho - 2/pi
};

struct RateTable {
  std::vector<RateRow> rows;

  /// One row per dimension in [d_min, d_max]; requires
  /// 2 <= d_min <= d_max <= 1e5.
  static RateTable compute(int d_min, int d_max);

  /// CSV with header d,rho,gap_lower,asymptote_excess.
  void write_csv(std::ostream& os) const;
  /// JSON object with the asymptote 2/pi in the metadata and one entry per row.
  void write_json(std::ostream& os) const;
};

}  // namespace gsss
