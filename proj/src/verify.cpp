#include "moserlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <string_view>

#include "moserlab/errors.hpp"
#include "moserlab/numeric.hpp"

namespace moserlab {

namespace {

constexpr double kExclusionFraction = 0.1;

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double mean_of(std::span<const double> v) {
  CompensatedSum s;
  for (double x : v) s.add(x);
  return v.empty() ? std::numeric_limits<double>::quiet_NaN() : s.value() / static_cast<double>(v.size());
}

double stddev_of(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  CompensatedSum s;
  for (double x : v) s.add((x - m) * (x - m));
  return std::sqrt(s.value() / static_cast<double>(v.size() - 1));
}

SumProvider table_sum(Kernel k, const ZeroTable& table, double factor) {
  return [k, table, factor](double t) {
    return spectral_sum(k, t, table, default_truncation(t, factor)).total;
  };
}

void require_table_past(const ZeroTable& table, double t, double factor) {
  const double need = default_truncation(t, factor);
  if (table.empty() || !table.covers_origin() || table.range().hi < need) {
    throw IncompleteTable("table must be complete up to " + fmt(need));
  }
}

}  // namespace

bool evaluate_pass(const std::map<std::string, double>& statistics) {
  static constexpr std::string_view kSuffixes[] = {".le", ".lt", ".ge", ".gt"};
  for (const auto& [key, limit] : statistics) {
    for (std::string_view suf : kSuffixes) {
      if (!ends_with(key, suf)) continue;
      const auto it = statistics.find(key.substr(0, key.size() - suf.size()));
      if (it == statistics.end() || !std::isfinite(it->second)) return false;
      const double v = it->second;
      bool ok = false;
      if (suf == ".le") ok = v <= limit;
      else if (suf == ".lt") ok = v < limit;
      else if (suf == ".ge") ok = v >= limit;
      else ok = v > limit;
      if (!ok) return false;
    }
  }
  return true;
}

void VerificationReport::finalize() { pass = evaluate_pass(statistics); }

Model hardy_z_model(const PrecisionPolicy& policy) {
  return [policy](double t) {
    const ZDerivatives d = z_derivatives(t, policy);
    return ModelPoint{d.value, d.first, d.second};
  };
}

Model polynomial_model(std::vector<double> roots) {
  return [roots = std::move(roots)](double t) {
    // product rule on (p, p', p'')
    double p = 1.0, d1 = 0.0, d2 = 0.0;
    for (double r : roots) {
      const double u = t - r;
      d2 = d2 * u + 2.0 * d1;
      d1 = d1 * u + p;
      p *= u;
    }
    return ModelPoint{p, d1, d2};
  };
}

bool in_exclusion_window(std::span<const double> roots, double t) {
  if (roots.size() < 2 || t <= roots.front() || t >= roots.back()) return true;
  const auto it = std::upper_bound(roots.begin(), roots.end(), t);
  const double hi = *it;
  const double lo = *(it - 1);
  const double w = kExclusionFraction * (hi - lo);
  return t - lo < w || hi - t < w;
}

std::vector<double> sample_gap_interiors(std::span<const double> roots, double t_lo,
                                         double t_hi, std::size_t n, std::uint64_t seed) {
  if (!(t_lo < t_hi)) throw DomainError("sample range must satisfy t_lo < t_hi");
  std::vector<double> out;
  out.reserve(n);
  UniformStream rng(seed);
  const std::size_t max_draws = 1000 * n + 1000;
  for (std::size_t draw = 0; out.size() < n; ++draw) {
    if (draw >= max_draws) throw DomainError("no admissible sample points in range");
    const double t = t_lo + (t_hi - t_lo) * rng.next();
    if (!in_exclusion_window(roots, t)) out.push_back(t);
  }
  return out;
}

Formula1Sample formula1_sample(const Model& model, const SumProvider& sum, double t) {
  const ModelPoint m = model(t);
  if (m.value == 0.0) throw PoleError("model vanishes at t = " + fmt(t));
  const double r1 = m.first / m.value;
  Formula1Sample s;
  s.t = t;
  s.lhs = sum(t);
  s.rhs = r1 * r1 - m.second / m.value;
  s.residual = std::abs(s.lhs - s.rhs);
  return s;
}

VerificationReport verify_formula1(const ZeroTable& table, double t_lo, double t_hi,
                                   std::size_t n_samples, std::uint64_t seed,
                                   const PrecisionPolicy& policy, double truncation_factor) {
  require_table_past(table, t_hi, truncation_factor);
  const auto ts = sample_gap_interiors(table.ordinates(), t_lo, t_hi, n_samples, seed);
  const Model model = hardy_z_model(policy);
  const SumProvider sum = table_sum(Kernel::inv_sq_shift, table, truncation_factor);

  std::vector<Formula1Sample> samples(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) { samples[i] = formula1_sample(model, sum, ts[i]); });

  VerificationReport rep;
  rep.name = "formula1";
  rep.samples = static_cast<std::int64_t>(samples.size());
  std::vector<double> scaled(samples.size());
  double worst = -1.0, worst_t = 0.0;
  std::size_t excluded = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    scaled[i] = samples[i].residual * samples[i].t;
    if (scaled[i] > worst) {
      worst = scaled[i];
      worst_t = samples[i].t;
    }
    if (in_exclusion_window(table.ordinates(), samples[i].t)) ++excluded;
  }
  std::vector<double> sorted = scaled;
  std::sort(sorted.begin(), sorted.end());
  rep.set("t_lo", t_lo);
  rep.set("t_hi", t_hi);
  rep.set("seed", static_cast<double>(seed));
  rep.set("truncation_factor", truncation_factor);
  rep.set("median_rt", quantile(sorted, 0.5));
  rep.set("p95_rt", quantile(sorted, 0.95));
  rep.set("max_rt", worst);
  rep.set("worst_t", worst_t);
  rep.set("excluded_samples", static_cast<double>(excluded));
  rep.require_le("median_rt", 10.0);
  rep.require_le("p95_rt", 100.0);
  rep.require_le("excluded_samples", 0.0);
  rep.finalize();
  return rep;
}

VerificationReport verify_formula1_surrogate(std::vector<double> roots, double t_lo,
                                             double t_hi, std::size_t n_samples,
                                             std::uint64_t seed) {
  std::sort(roots.begin(), roots.end());
  const Model model = polynomial_model(roots);
  const SumProvider sum = [&roots](double t) {
    CompensatedSum s;
    for (double r : roots) s.add(1.0 / ((t - r) * (t - r)));
    return s.value();
  };
  const auto ts = sample_gap_interiors(roots, t_lo, t_hi, n_samples, seed);
  VerificationReport rep;
  rep.name = "formula1_surrogate";
  rep.samples = static_cast<std::int64_t>(ts.size());
  double worst = 0.0, worst_t = 0.0;
  for (double t : ts) {
    const Formula1Sample s = formula1_sample(model, sum, t);
    const double rel = s.residual / std::max(1.0, std::abs(s.lhs));
    if (rel > worst) {
      worst = rel;
      worst_t = t;
    }
  }
  rep.set("roots", static_cast<double>(roots.size()));
  rep.set("max_rel_residual", worst);
  rep.set("worst_t", worst_t);
  rep.require_le("max_rel_residual", 1e-12);
  rep.finalize();
  return rep;
}

Eq34Components eq34_components(const ModelPoint& m, const ThetaDerivatives& theta, double sum) {
  const double r1 = m.first / m.value;
  const double r2 = m.second / m.value;
  const double tp = theta.first;
  Eq34Components c;
  c.from_z = {-r2 + tp * tp, theta.second + 2.0 * tp * r1};
  c.from_zeros = {sum + tp * tp - r1 * r1, 2.0 * tp * r1};
  c.residual = c.from_z - c.from_zeros;
  return c;
}

namespace {

struct Eq34Point {
  double t = 0.0;
  double residual_t = 0.0;
  double real_t = 0.0;
  double imag_t = 0.0;
  double imag_vs_theta2 = 0.0;
  double route_gap = 0.0;  // |zeta_second_ratio - from_z|
};

Eq34Point eq34_point(double t, const ZeroTable& table, const PrecisionPolicy& policy,
                     double factor) {
  const ZDerivatives d = z_derivatives(t, policy);
  if (std::abs(d.value) <= 0.1) throw PoleError("|Z(" + fmt(t) + ")| <= 0.1");
  const ThetaDerivatives td = theta_derivatives(t);
  const double sum = spectral_sum(Kernel::inv_sq_shift, t, table, default_truncation(t, factor)).total;
  const Eq34Components c = eq34_components({d.value, d.first, d.second}, td, sum);
  const std::complex<double> direct = zeta_second_ratio(t, policy).value;
  const std::complex<double> res = direct - c.from_zeros;
  Eq34Point p;
  p.t = t;
  p.residual_t = std::abs(res) * t;
  p.real_t = res.real() * t;
  p.imag_t = res.imag() * t;
  p.imag_vs_theta2 = std::abs(res.imag() - td.second);
  p.route_gap = std::abs(direct - c.from_z);
  return p;
}

}  // namespace

VerificationReport verify_eq34_consistency(double t, const ZeroTable& table,
                                           const PrecisionPolicy& policy,
                                           double truncation_factor) {
  require_table_past(table, t, truncation_factor);
  const Eq34Point p = eq34_point(t, table, policy, truncation_factor);
  VerificationReport rep;
  rep.name = "eq34";
  rep.samples = 1;
  rep.set("t", t);
  rep.set("residual_t", p.residual_t);
  rep.set("real_residual_t", p.real_t);
  rep.set("imag_residual_t", p.imag_t);
  rep.set("imag_minus_theta2", p.imag_vs_theta2);
  rep.set("route_gap", p.route_gap);
  rep.require_le("residual_t", 10.0);
  rep.require_le("imag_minus_theta2", 1e-9);
  rep.finalize();
  return rep;
}

VerificationReport verify_eq34_sweep(const ZeroTable& table, double t_lo, double t_hi,
                                     std::size_t n_samples, std::uint64_t seed,
                                     const PrecisionPolicy& policy, double truncation_factor) {
  require_table_past(table, t_hi, truncation_factor);
  if (!(t_lo < t_hi)) throw DomainError("sample range must satisfy t_lo < t_hi");
  std::vector<double> ts;
  UniformStream rng(seed);
  const std::size_t max_draws = 1000 * n_samples + 1000;
  for (std::size_t draw = 0; ts.size() < n_samples; ++draw) {
    if (draw >= max_draws) throw DomainError("no admissible sample points in range");
    const double t = t_lo + (t_hi - t_lo) * rng.next();
    if (in_exclusion_window(table.ordinates(), t)) continue;
    if (std::abs(z(t, policy).value) <= 0.1) continue;
    ts.push_back(t);
  }
  std::vector<Eq34Point> pts(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) {
    pts[i] = eq34_point(ts[i], table, policy, truncation_factor);
  });
  std::vector<double> rt(pts.size()), imag(pts.size());
  double max_imag_dev = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    rt[i] = pts[i].residual_t;
    imag[i] = pts[i].imag_t;
    max_imag_dev = std::max(max_imag_dev, pts[i].imag_vs_theta2);
  }
  std::vector<double> sorted = rt;
  std::sort(sorted.begin(), sorted.end());
  VerificationReport rep;
  rep.name = "eq34";
  rep.samples = static_cast<std::int64_t>(pts.size());
  rep.set("t_lo", t_lo);
  rep.set("t_hi", t_hi);
  rep.set("seed", static_cast<double>(seed));
  rep.set("median_residual_t", quantile(sorted, 0.5));
  rep.set("p95_residual_t", quantile(sorted, 0.95));
  rep.set("max_residual_t", sorted.empty() ? 0.0 : sorted.back());
  rep.set("mean_imag_residual_t", mean_of(imag));
  rep.set("max_imag_minus_theta2", max_imag_dev);
  rep.require_le("median_residual_t", 10.0);
  rep.require_le("max_imag_minus_theta2", 1e-9);
  rep.finalize();
  return rep;
}

GapCheck check_gap(const Model& model, double lo, double hi, int grid,
                   const std::function<ThetaDerivatives(double)>& theta) {
  GapCheck g;
  if (grid < 2) throw DomainError("grid needs at least 2 points");
  std::vector<ModelPoint> m(static_cast<std::size_t>(grid));
  const double h = (hi - lo) / (grid + 1);
  g.min_abs_zeta2 = theta ? std::numeric_limits<double>::infinity() : 0.0;
  for (int j = 0; j < grid; ++j) {
    const double t = lo + h * (j + 1);
    m[j] = model(t);
    g.max_abs_z = std::max(g.max_abs_z, std::abs(m[j].value));
    if (theta) {
      const ThetaDerivatives td = theta(t);
      const std::complex<double> zz(-m[j].second + td.first * td.first * m[j].value,
                                    td.second * m[j].value + 2.0 * td.first * m[j].first);
      g.min_abs_zeta2 = std::min(g.min_abs_zeta2, std::abs(zz));
    }
  }
  for (int j = 0; j + 1 < grid; ++j) {
    const double a = m[j].first / m[j].value;
    const double b = m[j + 1].first / m[j + 1].value;
    if (!(b - a < 0.0)) g.decreasing = false;
    if ((m[j].first > 0.0) != (m[j + 1].first > 0.0)) ++g.extrema;
  }
  const bool positive = m[grid / 2].value > 0.0;
  // a maximum has Z' going from + to -, a minimum the reverse
  const bool shape = positive ? (m.front().first > 0.0 && m.back().first < 0.0)
                              : (m.front().first < 0.0 && m.back().first > 0.0);
  g.pattern_ok = g.extrema == 1 && shape;
  return g;
}

VerificationReport verify_corollaries(const ZeroTable& table, double t_lo, double t_hi,
                                      const PrecisionPolicy& policy) {
  const OrdinateRange r = table.range();
  if (table.empty() || t_lo < r.lo || t_hi > r.hi) {
    throw IncompleteTable("range [" + fmt(t_lo) + ", " + fmt(t_hi) + "] not covered by table");
  }
  const StationaryScan scan = scan_stationary(table, t_lo, t_hi, policy);
  const Model model = hardy_z_model(policy);
  const auto theta = [](double t) { return theta_derivatives(t); };

  std::vector<GapCheck> checks(scan.gaps.size());
  parallel_for(scan.gaps.size(), [&](std::size_t i) {
    checks[i] = check_gap(model, scan.gaps[i].gamma_lo, scan.gaps[i].gamma_hi, 64, theta);
  });

  VerificationReport rep;
  rep.name = "corollaries";
  rep.samples = static_cast<std::int64_t>(scan.gaps.size());
  double count_bad = 0, decreasing_bad = 0, pattern_bad = 0, c2_bad = 0;
  double min_zeta2 = std::numeric_limits<double>::infinity();
  double min_z2_rel = std::numeric_limits<double>::infinity();
  std::size_t pi = 0;
  for (std::size_t i = 0; i < scan.gaps.size(); ++i) {
    const GapCount& gc = scan.gaps[i];
    const GapCheck& ch = checks[i];
    if (gc.stationary_points != 1) {
      ++count_bad;
      rep.notes.push_back("gap (" + fmt(gc.gamma_lo) + ", " + fmt(gc.gamma_hi) + ") has " +
                          std::to_string(gc.stationary_points) + " stationary points");
    }
    if (!ch.decreasing) {
      ++decreasing_bad;
      rep.notes.push_back("Z'/Z not decreasing on gap (" + fmt(gc.gamma_lo) + ", " +
                          fmt(gc.gamma_hi) + ")");
    }
    if (!ch.pattern_ok) {
      ++pattern_bad;
      rep.notes.push_back("extremum pattern fails on gap (" + fmt(gc.gamma_lo) + ", " +
                          fmt(gc.gamma_hi) + ")");
    }
    min_zeta2 = std::min(min_zeta2, ch.min_abs_zeta2);
    while (pi < scan.points.size() && scan.points[pi].gamma_lo < gc.gamma_lo) ++pi;
    for (std::size_t k = pi; k < scan.points.size() && scan.points[k].gamma_lo == gc.gamma_lo; ++k) {
      const double rel = std::abs(scan.points[k].z2_value) / ch.max_abs_z;
      min_z2_rel = std::min(min_z2_rel, rel);
      if (!(rel > 1e-6)) {
        ++c2_bad;
        rep.notes.push_back("Z and Z'' both small at t0 = " + fmt(scan.points[k].t0));
      }
    }
  }
  rep.set("t_lo", t_lo);
  rep.set("t_hi", t_hi);
  rep.set("gaps", static_cast<double>(scan.gaps.size()));
  rep.set("stationary_points", static_cast<double>(scan.points.size()));
  rep.set("gaps_count_not_one", count_bad);
  rep.set("decreasing_failures", decreasing_bad);
  rep.set("pattern_failures", pattern_bad);
  rep.set("corollary2_failures", c2_bad);
  rep.set("min_z2_over_gap_max", min_z2_rel);
  rep.set("min_zeta2_ratio_times_z", min_zeta2);
  rep.require_le("gaps_count_not_one", 0);
  rep.require_le("decreasing_failures", 0);
  rep.require_le("pattern_failures", 0);
  rep.require_le("corollary2_failures", 0);
  rep.require_gt("min_zeta2_ratio_times_z", 1e-6);
  rep.require_ge("gaps", 1);
  rep.finalize();
  return rep;
}

namespace {

constexpr double kAsymptoticFrom = 1e3;
constexpr double kBandLo = 4e3;
constexpr double kBandHi = 1e4;
constexpr std::size_t kWindow = 500;

std::vector<double> eq9_ratios(const std::vector<StationaryPoint>& points, const ZeroTable& table,
                               double factor) {
  std::vector<double> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const double t0 = points[i].t0;
    const double s = spectral_sum(Kernel::inv_diff, t0, table, default_truncation(t0, factor)).total;
    out[i] = s * 4.0 * t0 / std::numbers::pi;
  });
  return out;
}

std::vector<double> select(const std::vector<StationaryPoint>& points,
                           const std::vector<double>& values, double lo, double hi) {
  std::vector<double> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].t0 >= lo && points[i].t0 <= hi) out.push_back(values[i]);
  }
  return out;
}

}  // namespace

VerificationReport verify_eq9(const std::vector<StationaryPoint>& points, const ZeroTable& table,
                              double truncation_factor) {
  if (points.empty()) throw DomainError("verify_eq9 needs at least one stationary point");
  double t_max = 0.0;
  for (const auto& p : points) t_max = std::max(t_max, p.t0);
  require_table_past(table, t_max, truncation_factor);
  const std::vector<double> ratio = eq9_ratios(points, table, truncation_factor);

  VerificationReport rep;
  rep.name = "eq9";
  rep.samples = static_cast<std::int64_t>(points.size());
  rep.set("mean_ratio", mean_of(ratio));
  rep.set("spread_ratio", stddev_of(ratio));

  // sliding windows of kWindow points, half overlapping
  const std::size_t n = points.size();
  const std::size_t w = std::min(kWindow, n);
  const std::size_t stride = std::max<std::size_t>(1, w / 2);
  double win_min = std::numeric_limits<double>::infinity();
  double win_max = -std::numeric_limits<double>::infinity();
  int index = 0;
  for (std::size_t start = 0; start + w <= n; start += stride, ++index) {
    const std::span<const double> seg(ratio.data() + start, w);
    const double mid = 0.5 * (points[start].t0 + points[start + w - 1].t0);
    const double m = mean_of(seg);
    char key[32];
    std::snprintf(key, sizeof key, "window_%03d", index);
    rep.set(std::string(key) + "_t0_mid", mid);
    rep.set(std::string(key) + "_mean", m);
    rep.set(std::string(key) + "_spread", stddev_of(seg));
    if (points[start].t0 >= kAsymptoticFrom) {
      win_min = std::min(win_min, m);
      win_max = std::max(win_max, m);
    }
    if (start + w == n) break;
  }
  if (std::isfinite(win_min)) {
    rep.set("min_window_mean_asymptotic", win_min);
    rep.set("max_window_mean_asymptotic", win_max);
    rep.require_ge("min_window_mean_asymptotic", 0.8);
    rep.require_le("max_window_mean_asymptotic", 1.2);
  } else {
    rep.notes.push_back("no window lies entirely above t0 = 1000");
  }

  const auto high = select(points, ratio, kBandLo, kBandHi);
  const auto low = select(points, ratio, 0.0, kAsymptoticFrom);
  if (!high.empty()) {
    rep.set("band_mean_4e3_1e4", mean_of(high));
    rep.set("band_points_4e3_1e4", static_cast<double>(high.size()));
    rep.require_ge("band_mean_4e3_1e4", 0.8);
    rep.require_le("band_mean_4e3_1e4", 1.2);
  } else {
    rep.notes.push_back("no stationary points with t0 in [4000, 10000]");
  }
  if (!high.empty() && !low.empty()) {
    const double dev_low = std::abs(mean_of(low) - 1.0);
    const double dev_high = std::abs(mean_of(high) - 1.0);
    rep.set("band_mean_below_1e3", mean_of(low));
    rep.set("trend_improvement", dev_low - dev_high);
    rep.require_ge("trend_improvement", 0.0);
  }
  rep.finalize();
  return rep;
}

AbIdentity ab_identity(double t0, std::span<const double> ordinates) {
  AbIdentity id;
  id.shift_sum = partial_sum(Kernel::inv_sq_shift, t0, ordinates);
  CompensatedSum split, paired;
  const double t2 = t0 * t0;
  for (double g : ordinates) {
    const double g2 = g * g;
    const double d = t2 - g2;
    if (d == 0.0) throw CoincidenceError("t0 coincides with an ordinate");
    // the multiset {+g, -g} contributes each even term twice
    split.add(2.0 / d);
    split.add(4.0 * g2 / (d * d));
    paired.add(2.0 * (t2 + g2) / (d * d));
  }
  id.split_sum = split.value();
  id.paired_sum = paired.value();
  return id;
}

VerificationReport verify_asymptotics_ab(const std::vector<StationaryPoint>& points,
                                         const ZeroTable& table, double truncation_factor) {
  if (points.empty()) throw DomainError("verify_asymptotics_ab needs at least one stationary point");
  double t_max = 0.0;
  for (const auto& p : points) t_max = std::max(t_max, p.t0);
  require_table_past(table, t_max, truncation_factor);

  struct Row {
    double t0, lhs, t2, g2, d;
  };
  std::vector<Row> rows(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const double t0 = points[i].t0;
    const double T = default_truncation(t0, truncation_factor);
    rows[i] = {t0, spectral_sum(Kernel::inv_sq_shift, t0, table, T).total,
               spectral_sum(Kernel::t2_over_diff2, t0, table, T).total,
               spectral_sum(Kernel::g2_over_diff2, t0, table, T).total,
               std::numbers::pi / (4.0 * t0)};
  });

  VerificationReport rep;
  rep.name = "ab";
  rep.samples = static_cast<std::int64_t>(points.size());

  // toy table identities
  const double toy[] = {1.0, 2.0};
  const AbIdentity id = ab_identity(1.5, toy);
  const double scale = std::max(1.0, std::abs(id.shift_sum));
  rep.set("toy_split_residual", std::abs(id.shift_sum - id.split_sum) / scale);
  rep.set("toy_paired_residual", std::abs(id.shift_sum - id.paired_sum) / scale);
  rep.require_le("toy_split_residual", 1e-12);
  rep.require_le("toy_paired_residual", 1e-12);

  double max_plus = 0.0, max_minus = 0.0;
  std::vector<double> signed_a, b_ratio;
  for (const Row& r : rows) {
    if (r.t0 < kAsymptoticFrom) continue;
    max_plus = std::max(max_plus, std::abs(r.lhs - (2.0 * r.t2 + r.d)) / r.lhs);
    max_minus = std::max(max_minus, std::abs(r.lhs - (2.0 * r.t2 - r.d)) / r.lhs);
    signed_a.push_back((r.lhs - 2.0 * r.t2) / r.d);
    b_ratio.push_back((r.g2 - r.t2) / r.d);
  }
  rep.set("points_asymptotic", static_cast<double>(signed_a.size()));
  if (signed_a.empty()) {
    rep.notes.push_back("no stationary points with t0 >= 1000");
    rep.finalize();
    return rep;
  }
  const double mean_a = mean_of(signed_a);
  const double plus_dev = std::abs(mean_a - 1.0);
  const double minus_dev = std::abs(mean_a + 1.0);
  const bool plus = plus_dev <= minus_dev;
  rep.set("a_max_rel_gap_plus", max_plus);
  rep.set("a_max_rel_gap_minus", max_minus);
  rep.set("a_mean_correction_ratio", mean_a);
  rep.set("a_resolved_sign", plus ? 1.0 : -1.0);
  rep.set("a_max_rel_gap_matching", plus ? max_plus : max_minus);
  rep.require_le("a_max_rel_gap_matching", 0.05);
  rep.notes.push_back(std::string("matching sign variant of the pi/(4 t0) term: ") +
                      (plus ? "+" : "-"));
  rep.set("b_mean_ratio", mean_of(b_ratio));
  rep.set("b_spread_ratio", stddev_of(b_ratio));
  rep.require_ge("b_mean_ratio", 0.8);
  rep.require_le("b_mean_ratio", 1.2);
  rep.finalize();
  return rep;
}

VerificationReport verify_theorem1(const std::vector<StationaryPoint>& points, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  VerificationReport rep;
  rep.name = "theorem1";
  rep.samples = static_cast<std::int64_t>(points.size());
  double min_margin = std::numeric_limits<double>::infinity();
  double at = 0.0;
  double violations = 0;
  for (const auto& p : points) {
    const double m = theorem1_margin(p, alpha);
    if (m < min_margin) {
      min_margin = m;
      at = p.t0;
    }
    if (!(m > 1.0)) {
      ++violations;
      rep.notes.push_back("violation: t0 = " + fmt(p.t0) + " gap (" + fmt(p.gamma_lo) + ", " +
                          fmt(p.gamma_hi) + ") delta = " + fmt(p.delta) + " Z(t0) = " +
                          fmt(p.z_value) + " margin = " + fmt(m));
    }
  }
  rep.set("alpha", alpha);
  rep.set("violations", violations);
  rep.require_le("violations", 0);
  if (!points.empty()) {
    rep.set("min_margin", min_margin);
    rep.set("min_margin_t0", at);
    rep.require_gt("min_margin", 1.0);
  }
  rep.finalize();
  return rep;
}

}  // namespace moserlab
