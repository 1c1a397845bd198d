#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "moserlab/rs_core.hpp"
#include "moserlab/stationary.hpp"
#include "moserlab/zero_sums.hpp"
#include "moserlab/zeros.hpp"

namespace moserlab {

/// Named statistics plus the thresholds they are judged against. A key
/// "x.le" (".lt", ".ge", ".gt") holds a limit for the statistic "x"; `pass`
/// is recomputed from the map alone.
struct VerificationReport {
  std::string name;
  std::int64_t samples = 0;
  bool pass = false;
  std::map<std::string, double> statistics;
  std::vector<std::string> notes;

  void set(const std::string& key, double value) { statistics[key] = value; }
  void require_le(const std::string& key, double limit) { statistics[key + ".le"] = limit; }
  void require_lt(const std::string& key, double limit) { statistics[key + ".lt"] = limit; }
  void require_ge(const std::string& key, double limit) { statistics[key + ".ge"] = limit; }
  void require_gt(const std::string& key, double limit) { statistics[key + ".gt"] = limit; }
  void finalize();
};

/// True when every threshold entry in `statistics` is met. A threshold
/// whose statistic is missing or non-finite fails.
bool evaluate_pass(const std::map<std::string, double>& statistics);

struct ModelPoint {
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
};

/// A function with its first two derivatives, standing in for Z.
using Model = std::function<ModelPoint(double)>;
/// Right-hand side sum over zeros at t.
using SumProvider = std::function<double(double)>;

Model hardy_z_model(const PrecisionPolicy& policy = {});

/// P(t) = prod (t - r) with exact derivatives.
Model polynomial_model(std::vector<double> roots);

/// True when t is outside the root hull or closer than 0.1 * gap to either
/// end of its gap.
bool in_exclusion_window(std::span<const double> roots, double t);

/// n uniform samples in [t_lo, t_hi] outside exclusion windows.
std::vector<double> sample_gap_interiors(std::span<const double> roots, double t_lo,
                                         double t_hi, std::size_t n, std::uint64_t seed);

struct Formula1Sample {
  double t = 0.0;
  double lhs = 0.0;  // sum over zeros
  double rhs = 0.0;  // (Z'/Z)^2 - Z''/Z
  double residual = 0.0;
};

Formula1Sample formula1_sample(const Model& model, const SumProvider& sum, double t);

/// Residual of the sum over zeros against (Z'/Z)^2 - Z''/Z on random gap
/// interiors. Passes when median(r t) <= 10 and p95(r t) <= 100.
VerificationReport verify_formula1(const ZeroTable& table, double t_lo, double t_hi,
                                   std::size_t n_samples, std::uint64_t seed = 0,
                                   const PrecisionPolicy& policy = {},
                                   double truncation_factor = 2.0);

/// The same identity for a polynomial with the given roots, where it is
/// exact; passes when the worst relative residual is <= 1e-12.
VerificationReport verify_formula1_surrogate(std::vector<double> roots, double t_lo,
                                             double t_hi, std::size_t n_samples,
                                             std::uint64_t seed = 0);

struct Eq34Components {
  std::complex<double> from_z;        // -Z''/Z + theta'^2 + i (theta'' + 2 theta' Z'/Z)
  std::complex<double> from_zeros;    // sum + theta'^2 - (Z'/Z)^2 + i 2 theta' Z'/Z
  std::complex<double> residual;      // from_z - from_zeros
};

Eq34Components eq34_components(const ModelPoint& m, const ThetaDerivatives& theta, double sum);

/// Single-point comparison of the two zeta''/zeta routes. Throws PoleError
/// when |Z(t)| <= 0.1.
VerificationReport verify_eq34_consistency(double t, const ZeroTable& table,
                                           const PrecisionPolicy& policy = {},
                                           double truncation_factor = 2.0);

/// verify_eq34_consistency over random gap interiors with |Z| > 0.1.
VerificationReport verify_eq34_sweep(const ZeroTable& table, double t_lo, double t_hi,
                                     std::size_t n_samples, std::uint64_t seed = 0,
                                     const PrecisionPolicy& policy = {},
                                     double truncation_factor = 2.0);

struct GapCheck {
  bool decreasing = true;       // Z'/Z strictly decreasing on the grid
  int extrema = 0;              // sign changes of Z' on the grid
  bool pattern_ok = false;      // one maximum where Z > 0, one minimum where Z < 0
  double max_abs_z = 0.0;
  double min_abs_zeta2 = 0.0;   // min |zeta''| on the grid; 0 when no theta given
};

/// Grid checks on one gap with `grid` interior points.
GapCheck check_gap(const Model& model, double lo, double hi, int grid = 64,
                   const std::function<ThetaDerivatives(double)>& theta = {});

VerificationReport verify_corollaries(const ZeroTable& table, double t_lo, double t_hi,
                                      const PrecisionPolicy& policy = {});

/// Windowed means of sum 1/(gamma^2 - t0^2) * 4 t0 / pi.
VerificationReport verify_eq9(const std::vector<StationaryPoint>& points, const ZeroTable& table,
                              double truncation_factor = 2.0);

struct AbIdentity {
  double shift_sum = 0.0;    // sum 1/(t0 - gamma)^2
  double split_sum = 0.0;    // sum 1/(t0^2 - gamma^2) + 2 sum gamma^2/(t0^2 - gamma^2)^2
  double paired_sum = 0.0;   // 2 sum_{gamma > 0} (t0^2 + gamma^2)/(t0^2 - gamma^2)^2
};

/// Finite identities behind the paired sums.
AbIdentity ab_identity(double t0, std::span<const double> ordinates);

VerificationReport verify_asymptotics_ab(const std::vector<StationaryPoint>& points,
                                         const ZeroTable& table, double truncation_factor = 2.0);

/// Passes when every margin delta * gamma_lo^alpha exceeds 1.
VerificationReport verify_theorem1(const std::vector<StationaryPoint>& points, double alpha);

}  // namespace moserlab
