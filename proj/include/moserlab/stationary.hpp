#pragma once

#include <optional>
#include <vector>

#include "moserlab/rs_core.hpp"
#include "moserlab/zeros.hpp"

namespace moserlab {

/// A root t0 of Z' inside the gap (gamma_lo, gamma_hi) of consecutive zeros.
struct StationaryPoint {
  double t0 = 0.0;
  double gamma_lo = 0.0;
  double gamma_hi = 0.0;
  double z_value = 0.0;
  double z2_value = 0.0;
  double delta = 0.0;  // min(t0 - gamma_lo, gamma_hi - t0)
};

struct GapCount {
  double gamma_lo = 0.0;
  double gamma_hi = 0.0;
  int stationary_points = 0;
  int grid_points = 0;
};

struct StationaryScan {
  std::vector<StationaryPoint> points;  // ordered by t0
  std::vector<GapCount> gaps;           // one entry per scanned gap
  std::vector<GapCount> faults;         // gaps with no stationary point
  int condition_b_failures = 0;         // |Z'(t0)| >= 1e-8 max(1, |Z(t0)|)
};

StationaryPoint make_stationary_point(double t0, double gamma_lo, double gamma_hi,
                                      double z_value, double z2_value);

/// Every gap of `table` lying inside [t_lo, t_hi] is gridded (32 points,
/// doubled up to twice when the count is not 1) and each sign change of Z'
/// is refined by Brent's method.
StationaryScan scan_stationary(const ZeroTable& table, double t_lo, double t_hi,
                               const PrecisionPolicy& policy = {});

/// Points with |Z(t0)| > t0^-alpha, order preserved.
std::vector<StationaryPoint> filter_tilde(const std::vector<StationaryPoint>& points,
                                          double alpha);

/// delta * gamma_lo^alpha.
double theorem1_margin(const StationaryPoint& p, double alpha);

struct GapEntry {
  double gamma_lo = 0.0;
  double gamma_hi = 0.0;
  double size = 0.0;
  std::optional<double> littlewood_ratio;  // size * lnlnln(gamma_lo), gamma_lo > e^e
};

struct GapStatistics {
  std::vector<GapEntry> gaps;
  double max_gap = 0.0;
  double max_gap_at = 0.0;
  double max_littlewood_ratio = 0.0;
  double mean_gap = 0.0;
};

GapStatistics gap_statistics(const ZeroTable& table);

struct PeakEntry {
  double t0 = 0.0;
  double abs_z = 0.0;
  double running_max = 0.0;
  double omega_ratio = 0.0;  // |Z| / exp(ln^beta t0)
};

struct PeakTrendRow {
  double t_end = 0.0;
  double running_max = 0.0;
  double max_omega_ratio = 0.0;
};

struct PeakStatistics {
  double beta = 0.0;
  std::vector<PeakEntry> entries;
  std::vector<PeakTrendRow> trend;  // one row per doubling of t0
};

PeakStatistics peak_statistics(const std::vector<StationaryPoint>& points, double beta);

}  // namespace moserlab
