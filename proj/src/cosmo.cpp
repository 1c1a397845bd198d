#include "moserlab/cosmo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "moserlab/errors.hpp"
#include "moserlab/numeric.hpp"
#include "moserlab/zero_sums.hpp"

namespace moserlab {

namespace {

constexpr double kGuardFraction = 0.9;
constexpr double kDeltaResolution = 1e-4;
constexpr int kRecheckPoints = 65;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_regular(double t, double z) {
  if (!(std::abs(z) > kSingularZ)) {
    throw PoleError("R = |Z| vanishes at t = " + fmt(t));
  }
}

double shift_sum(double t, const ZeroTable& table, double factor) {
  return spectral_sum(Kernel::inv_sq_shift, t, table, default_truncation(t, factor)).total;
}

}  // namespace

void CosmoParams::validate() const {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("kappa must be positive");
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("c must be positive");
  if (k != 1) throw DomainError("curvature index k is fixed at +1");
}

double density_from(double z, double dz, const CosmoParams& params) {
  const double r1 = dz / z;
  const double c2 = params.c * params.c;
  return 3.0 / (params.kappa * c2) * (c2 / (z * z) + r1 * r1);
}

double pressure_from_sum(double z, double dz, double sum, const CosmoParams& params) {
  const double r1 = dz / z;
  const double c2 = params.c * params.c;
  return 2.0 / params.kappa * (sum - 1.5 * r1 * r1 - 0.5 * c2 / (z * z));
}

double pressure_direct_from(double z, double dz, double ddz, const CosmoParams& params) {
  const double r1 = dz / z;
  const double c2 = params.c * params.c;
  return (-2.0 * ddz / z - r1 * r1 - c2 / (z * z)) / params.kappa;
}

double density(double t, const CosmoParams& params, const PrecisionPolicy& policy) {
  params.validate();
  const ZDerivatives d = z_derivatives(t, policy);
  require_regular(t, d.value);
  return density_from(d.value, d.first, params);
}

double pressure(double t, const CosmoParams& params, const ZeroTable& table,
                double truncation_factor, const PrecisionPolicy& policy) {
  params.validate();
  const ZDerivatives d = z_derivatives(t, policy);
  require_regular(t, d.value);
  return pressure_from_sum(d.value, d.first, shift_sum(t, table, truncation_factor), params);
}

double pressure_direct(double t, const CosmoParams& params, const PrecisionPolicy& policy) {
  params.validate();
  const ZDerivatives d = z_derivatives(t, policy);
  require_regular(t, d.value);
  return pressure_direct_from(d.value, d.first, d.second, params);
}

double eos_ratio(double t, const CosmoParams& params, const ZeroTable& table,
                 double truncation_factor, const PrecisionPolicy& policy) {
  return cosmo_sample(t, params, table, truncation_factor, policy).w;
}

EosDistances eos_distances(double w) { return {std::abs(w), std::abs(w - 1.0 / 3.0)}; }

CosmoSample cosmo_sample(double t, const CosmoParams& params, const ZeroTable& table,
                         double truncation_factor, const PrecisionPolicy& policy) {
  params.validate();
  const ZDerivatives d = z_derivatives(t, policy);
  require_regular(t, d.value);
  const double sign = d.value > 0.0 ? 1.0 : -1.0;
  CosmoSample s;
  s.t = t;
  s.R = std::abs(d.value);
  s.dR = sign * d.first;
  s.ddR = sign * d.second;
  s.rho = density_from(d.value, d.first, params);
  s.p = pressure_from_sum(d.value, d.first, shift_sum(t, table, truncation_factor), params);
  s.w = s.p / (s.rho * params.c * params.c);
  s.model_err = 10.0 / t;
  return s;
}

bool interval_holds(const PressureInterval& iv, double gamma_lo, double gamma_hi,
                    const PressureFn& p) {
  if (!(gamma_lo < iv.lo && iv.lo < iv.hi && iv.hi < gamma_hi)) return false;
  for (int j = 0; j < kRecheckPoints; ++j) {
    const double t = iv.lo + (iv.hi - iv.lo) * j / (kRecheckPoints - 1);
    if (!(p(t) >= 0.0)) return false;
  }
  return true;
}

PressureInterval pressure_interval(double t0, double gamma_lo, double gamma_hi,
                                   const PressureFn& p) {
  if (!(gamma_lo < t0 && t0 < gamma_hi)) {
    throw DomainError("t0 = " + fmt(t0) + " outside its gap");
  }
  const double p0 = p(t0);
  if (!(p0 >= 0.0)) {
    throw NoIntervalError("p(" + fmt(t0) + ") = " + fmt(p0) + " < 0");
  }
  const double guard = kGuardFraction * std::min(t0 - gamma_lo, gamma_hi - t0);
  const double resolution = std::min(kDeltaResolution, 1e-2 * guard);
  const auto ok = [&](double d) { return p(t0 - d) >= 0.0 && p(t0 + d) >= 0.0; };

  double delta = guard;
  if (!ok(guard)) {
    double lo = 0.0, hi = guard;
    while (hi - lo > resolution) {
      const double mid = 0.5 * (lo + hi);
      (ok(mid) ? lo : hi) = mid;
    }
    delta = lo;
  }
  // shrink until the dense recheck agrees
  for (int attempt = 0; attempt < 60 && delta > 0.0; ++attempt) {
    const PressureInterval iv{t0, delta, t0 - delta, t0 + delta};
    if (interval_holds(iv, gamma_lo, gamma_hi, p)) return iv;
    delta *= 0.5;
  }
  throw NoIntervalError("no interval with p >= 0 around t0 = " + fmt(t0));
}

PressureInterval pressure_interval(const StationaryPoint& sp, const CosmoParams& params,
                                   const ZeroTable& table, double truncation_factor,
                                   const PrecisionPolicy& policy) {
  params.validate();
  const GapSpectralSum sum(Kernel::inv_sq_shift, table, sp.gamma_lo, sp.gamma_hi,
                           default_truncation(sp.gamma_hi, truncation_factor));
  const PressureFn p = [&](double t) {
    const ZDerivatives d = z_derivatives(t, policy);
    require_regular(t, d.value);
    return pressure_from_sum(d.value, d.first, sum(t), params);
  };
  return pressure_interval(sp.t0, sp.gamma_lo, sp.gamma_hi, p);
}

std::vector<CosmoSample> profile(double t_lo, double t_hi, double step, const CosmoParams& params,
                                 const ZeroTable& table, double truncation_factor,
                                 const PrecisionPolicy& policy) {
  params.validate();
  if (!(t_lo >= kWorkingLo && t_hi <= kWorkingHi && t_lo <= t_hi)) {
    throw DomainError("profile grid outside the working range");
  }
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("profile step must be positive");
  const auto n = static_cast<std::size_t>(std::floor((t_hi - t_lo) / step * (1.0 + 1e-12))) + 1;
  const auto zs = table.ordinates();
  std::vector<double> grid;
  grid.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = t_lo + static_cast<double>(i) * step;
    const auto it = std::lower_bound(zs.begin(), zs.end(), t);
    double dist = std::numeric_limits<double>::infinity();
    if (it != zs.end()) dist = *it - t;
    if (it != zs.begin()) dist = std::min(dist, t - *(it - 1));
    if (dist < kProfileExclusion) continue;
    grid.push_back(t);
  }
  std::vector<CosmoSample> out(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    out[i] = cosmo_sample(grid[i], params, table, truncation_factor, policy);
  });
  return out;
}

}  // namespace moserlab
