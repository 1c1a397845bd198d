#pragma once

#include <array>
#include <span>
#include <string_view>

#include "moserlab/zeros.hpp"

namespace moserlab {

/// Kernels summed over the symmetric multiset {+gamma, -gamma}.
enum class Kernel {
  inv_sq_shift,   // 1 / (t - gamma)^2
  inv_diff,       // 1 / (gamma^2 - t^2)
  t2_over_diff2,  // t^2 / (t^2 - gamma^2)^2
  g2_over_diff2,  // gamma^2 / (t^2 - gamma^2)^2
  riemann,        // 1 / (1/4 + gamma^2)
};

std::string_view kernel_name(Kernel k);
Kernel parse_kernel(std::string_view name);  // throws DomainError
bool kernel_has_parameter(Kernel k);

struct SpectralSum {
  Kernel kernel = Kernel::riemann;
  double t = 0.0;
  double partial = 0.0;
  double tail = 0.0;
  double total = 0.0;
  double T_trunc = 0.0;
  double tail_err = 0.0;
};

struct TailEstimate {
  double tail = 0.0;
  double tail_err = 0.0;
};

/// Combined contribution of +gamma and -gamma.
double kernel_pair_term(Kernel k, double t, double gamma);

/// Compensated sum of kernel_pair_term over every ordinate given, with no
/// completeness or truncation requirements.
double partial_sum(Kernel k, double t, std::span<const double> ordinates);

/// Truncated sum over the table up to T_trunc plus the density tail.
/// Throws IncompleteTable, CoincidenceError or DomainError.
SpectralSum spectral_sum(Kernel k, double t, const ZeroTable& table, double T_trunc);

/// Integral of the kernel against the smooth zero density ln(u/2pi)/2pi
/// over (T_trunc, inf), both branches included.
TailEstimate tail_estimate(Kernel k, double t, double T_trunc);

/// spectral_sum for many t inside one gap (lo, hi) with T_trunc held fixed.
/// Ordinates within `near` indices of the gap are summed directly; the rest
/// enter through a Chebyshev interpolant on [lo, hi].
class GapSpectralSum {
 public:
  static constexpr int kNodes = 16;

  GapSpectralSum(Kernel k, const ZeroTable& table, double lo, double hi, double T_trunc,
                 std::size_t near = 64);

  /// Partial sum plus tail at t in (lo, hi).
  double operator()(double t) const;

 private:
  Kernel kernel_;
  double lo_, hi_, T_trunc_;
  std::span<const double> near_;
  std::array<double, kNodes> cheb_{};
};

/// max(factor t, t + 1000).
double default_truncation(double t, double factor = 2.0);

/// C + 2 - ln(4 pi), C the Euler constant.
double riemann_constant();

}  // namespace moserlab
