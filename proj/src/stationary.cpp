#include "moserlab/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "moserlab/errors.hpp"
#include "moserlab/numeric.hpp"

namespace moserlab {

namespace {

constexpr int kBaseGrid = 32;
constexpr int kGridDoublings = 2;

struct GapResult {
  std::vector<StationaryPoint> points;
  GapCount count;
  int condition_b_failures = 0;
};

GapResult scan_gap(double lo, double hi, const PrecisionPolicy& policy) {
  const auto derivs = [&](double t) {
    return detail::z_with_derivatives(t, detail::plan_for(t, policy), policy);
  };
  const auto slope = [&](double t) { return derivs(t).first; };
  GapResult out;
  int grid = kBaseGrid;
  for (int attempt = 0; attempt <= kGridDoublings; ++attempt, grid *= 2) {
    out.points.clear();
    out.condition_b_failures = 0;
    const double step = (hi - lo) / (grid + 1);
    double t_prev = lo + step;
    double s_prev = slope(t_prev);
    for (int j = 2; j <= grid; ++j) {
      const double t = lo + j * step;
      const double s = slope(t);
      if ((s_prev > 0.0) != (s > 0.0)) {
        const double t0 = brent_root(slope, t_prev, t, s_prev, s, 1e-13);
        const ZDerivatives d = derivs(t0);
        if (!(std::abs(d.first) < 1e-8 * std::max(1.0, std::abs(d.value)))) {
          ++out.condition_b_failures;
        }
        out.points.push_back(make_stationary_point(t0, lo, hi, d.value, d.second));
      }
      t_prev = t;
      s_prev = s;
    }
    if (out.points.size() == 1) break;
  }
  out.count = {lo, hi, static_cast<int>(out.points.size()), std::min(grid, kBaseGrid << kGridDoublings)};
  return out;
}

}  // namespace

StationaryPoint make_stationary_point(double t0, double gamma_lo, double gamma_hi,
                                      double z_value, double z2_value) {
  return {t0, gamma_lo, gamma_hi, z_value, z2_value, std::min(t0 - gamma_lo, gamma_hi - t0)};
}

StationaryScan scan_stationary(const ZeroTable& table, double t_lo, double t_hi,
                               const PrecisionPolicy& policy) {
  const OrdinateRange r = table.range();
  if (!(t_lo < t_hi) || t_lo < r.lo - 1e-9 || t_hi > r.hi + 1e-9) {
    throw DomainError("scan_stationary: [" + std::to_string(t_lo) + ", " + std::to_string(t_hi) +
                      "] not inside the table range");
  }
  policy.validate();
  const auto ord = table.ordinates();
  std::vector<std::size_t> gaps;
  for (std::size_t i = 0; i + 1 < ord.size(); ++i) {
    if (ord[i] >= t_lo && ord[i + 1] <= t_hi) gaps.push_back(i);
  }
  std::vector<GapResult> results(gaps.size());
  parallel_for(gaps.size(), [&](std::size_t g) {
    results[g] = scan_gap(ord[gaps[g]], ord[gaps[g] + 1], policy);
  });

  StationaryScan scan;
  for (auto& res : results) {
    scan.points.insert(scan.points.end(), res.points.begin(), res.points.end());
    scan.gaps.push_back(res.count);
    if (res.count.stationary_points == 0) scan.faults.push_back(res.count);
    scan.condition_b_failures += res.condition_b_failures;
  }
  return scan;
}

std::vector<StationaryPoint> filter_tilde(const std::vector<StationaryPoint>& points,
                                          double alpha) {
  if (!(alpha > 0.0)) throw DomainError("filter_tilde: alpha must be positive");
  std::vector<StationaryPoint> kept;
  for (const auto& p : points) {
    if (std::abs(p.z_value) > std::pow(p.t0, -alpha)) kept.push_back(p);
  }
  return kept;
}

double theorem1_margin(const StationaryPoint& p, double alpha) {
  return p.delta * std::pow(p.gamma_lo, alpha);
}

GapStatistics gap_statistics(const ZeroTable& table) {
  if (table.empty()) throw DomainError("gap_statistics: empty table");
  GapStatistics st;
  const auto ord = table.ordinates();
  CompensatedSum total;
  for (std::size_t i = 0; i + 1 < ord.size(); ++i) {
    GapEntry e{ord[i], ord[i + 1], ord[i + 1] - ord[i], std::nullopt};
    if (ord[i] > std::exp(std::numbers::e)) {
      e.littlewood_ratio = e.size * std::log(std::log(std::log(ord[i])));
      st.max_littlewood_ratio = std::max(st.max_littlewood_ratio, *e.littlewood_ratio);
    }
    if (e.size > st.max_gap) {
      st.max_gap = e.size;
      st.max_gap_at = e.gamma_lo;
    }
    total.add(e.size);
    st.gaps.push_back(e);
  }
  if (!st.gaps.empty()) st.mean_gap = total.value() / static_cast<double>(st.gaps.size());
  return st;
}

PeakStatistics peak_statistics(const std::vector<StationaryPoint>& points, double beta) {
  if (!(beta > 0.0 && beta < 0.5)) throw DomainError("peak_statistics: need 0 < beta < 1/2");
  PeakStatistics st;
  st.beta = beta;
  double running = 0.0;
  double t_end = 10.0;
  PeakTrendRow row{t_end, 0.0, 0.0};
  for (const auto& p : points) {
    while (p.t0 > t_end) {
      if (running > 0.0) st.trend.push_back(row);
      t_end *= 2.0;
      row = {t_end, running, 0.0};
    }
    const double a = std::abs(p.z_value);
    running = std::max(running, a);
    const double ratio = a / std::exp(std::pow(std::log(p.t0), beta));
    st.entries.push_back({p.t0, a, running, ratio});
    row.running_max = running;
    row.max_omega_ratio = std::max(row.max_omega_ratio, ratio);
  }
  if (!st.entries.empty()) st.trend.push_back(row);
  return st;
}

}  // namespace moserlab
