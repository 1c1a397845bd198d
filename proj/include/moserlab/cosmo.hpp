#pragma once

#include <functional>
#include <vector>

#include "moserlab/rs_core.hpp"
#include "moserlab/stationary.hpp"
#include "moserlab/zeros.hpp"

namespace moserlab {

/// Closed Friedmann model (k = +1) with scale factor R = |Z|.
struct CosmoParams {
  double kappa = 1.0;
  double c = 1.0;
  int k = 1;

  void validate() const;  // throws DomainError
};

struct CosmoSample {
  double t = 0.0;
  double R = 0.0;
  double dR = 0.0;
  double ddR = 0.0;
  double rho = 0.0;
  double p = 0.0;
  double w = 0.0;
  double model_err = 0.0;  // size of the dropped O(1/t) term, 10/t
};

struct PressureInterval {
  double t0 = 0.0;
  double delta = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

/// Below this |Z| density and pressure are treated as singular.
inline constexpr double kSingularZ = 1e-8;
/// Profile samples closer than this to a zero are skipped.
inline constexpr double kProfileExclusion = 1e-3;

/// 3/(kappa c^2) (c^2/Z^2 + (Z'/Z)^2) from Z and Z'.
double density_from(double z, double dz, const CosmoParams& params);
/// (2/kappa) (sum - 3/2 (Z'/Z)^2 - c^2/(2 Z^2)) with sum = sum 1/(t - gamma)^2.
double pressure_from_sum(double z, double dz, double sum, const CosmoParams& params);
/// (1/kappa) (-2 Z''/Z - (Z'/Z)^2 - c^2/Z^2).
double pressure_direct_from(double z, double dz, double ddz, const CosmoParams& params);

/// Throws PoleError when |Z(t)| <= kSingularZ.
double density(double t, const CosmoParams& params, const PrecisionPolicy& policy = {});

/// Spectral pressure; needs the table complete past the truncation point.
double pressure(double t, const CosmoParams& params, const ZeroTable& table,
                double truncation_factor = 2.0, const PrecisionPolicy& policy = {});

/// Pressure from the second Friedmann equation with R = |Z| directly.
double pressure_direct(double t, const CosmoParams& params, const PrecisionPolicy& policy = {});

/// w = p / (rho c^2).
double eos_ratio(double t, const CosmoParams& params, const ZeroTable& table,
                 double truncation_factor = 2.0, const PrecisionPolicy& policy = {});

struct EosDistances {
  double to_matter = 0.0;     // |w|
  double to_radiation = 0.0;  // |w - 1/3|
};
EosDistances eos_distances(double w);

/// Full sample at t; throws PoleError when |Z(t)| <= kSingularZ.
CosmoSample cosmo_sample(double t, const CosmoParams& params, const ZeroTable& table,
                         double truncation_factor = 2.0, const PrecisionPolicy& policy = {});

using PressureFn = std::function<double(double)>;

/// Symmetric expansion from t0 inside (gamma_lo, gamma_hi) using the given
/// pressure, bisecting delta to 1e-4 with guard 0.9 * min distance to the
/// gap ends, followed by a 65-point p >= 0 recheck. Throws NoIntervalError
/// when p(t0) < 0 or no positive delta survives.
PressureInterval pressure_interval(double t0, double gamma_lo, double gamma_hi,
                                   const PressureFn& p);

PressureInterval pressure_interval(const StationaryPoint& sp, const CosmoParams& params,
                                   const ZeroTable& table, double truncation_factor = 2.0,
                                   const PrecisionPolicy& policy = {});

/// True when p >= 0 at 65 equally spaced points of [lo, hi] and the interval
/// sits strictly inside the gap.
bool interval_holds(const PressureInterval& iv, double gamma_lo, double gamma_hi,
                    const PressureFn& p);

/// Grid t_lo + i step up to t_hi, skipping points within kProfileExclusion
/// of a zero.
std::vector<CosmoSample> profile(double t_lo, double t_hi, double step, const CosmoParams& params,
                                 const ZeroTable& table, double truncation_factor = 2.0,
                                 const PrecisionPolicy& policy = {});

}  // namespace moserlab
