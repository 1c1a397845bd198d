#include "moserlab/zero_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "moserlab/errors.hpp"
#include "moserlab/numeric.hpp"

namespace moserlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kCoincidence = 1e-8;

// Coefficient c_k and squared scale s^2 such that the pair kernel at u > t
// expands as sum_k c_k s^(2k) u^-(2+2k).
double series_coefficient(Kernel k, int j) {
  switch (k) {
    case Kernel::inv_sq_shift: return 2.0 * (2.0 * j + 1.0);
    case Kernel::inv_diff: return 2.0;
    case Kernel::t2_over_diff2: return 2.0 * j;
    case Kernel::g2_over_diff2: return 2.0 * (j + 1.0);
    case Kernel::riemann: return (j % 2 == 0) ? 2.0 : -2.0;
  }
  return 0.0;
}

double series_scale_sq(Kernel k, double t) { return k == Kernel::riemann ? 0.25 : t * t; }

void check_coincidence(Kernel k, double t, std::span<const double> ordinates) {
  if (!kernel_has_parameter(k) || ordinates.empty()) return;
  const auto it = std::lower_bound(ordinates.begin(), ordinates.end(), t);
  double nearest = INFINITY;
  if (it != ordinates.end()) nearest = std::min(nearest, std::abs(*it - t));
  if (it != ordinates.begin()) nearest = std::min(nearest, std::abs(*(it - 1) - t));
  if (nearest < kCoincidence) {
    throw CoincidenceError("spectral sum: t = " + std::to_string(t) +
                           " within 1e-8 of a zero ordinate");
  }
}

}  // namespace

std::string_view kernel_name(Kernel k) {
  switch (k) {
    case Kernel::inv_sq_shift: return "inv_sq_shift";
    case Kernel::inv_diff: return "inv_diff";
    case Kernel::t2_over_diff2: return "t2_over_diff2";
    case Kernel::g2_over_diff2: return "g2_over_diff2";
    case Kernel::riemann: return "riemann";
  }
  return "unknown";
}

Kernel parse_kernel(std::string_view name) {
  for (Kernel k : {Kernel::inv_sq_shift, Kernel::inv_diff, Kernel::t2_over_diff2,
                   Kernel::g2_over_diff2, Kernel::riemann}) {
    if (name == kernel_name(k)) return k;
  }
  throw DomainError("unknown kernel '" + std::string(name) + "'");
}

bool kernel_has_parameter(Kernel k) { return k != Kernel::riemann; }

namespace {

template <Kernel K>
inline double pair_term(double t, double gamma) {
  if constexpr (K == Kernel::inv_sq_shift) {
    const double a = t - gamma, b = t + gamma;
    return 1.0 / (a * a) + 1.0 / (b * b);
  } else if constexpr (K == Kernel::inv_diff) {
    return 2.0 * (1.0 / ((gamma - t) * (gamma + t)));
  } else if constexpr (K == Kernel::t2_over_diff2) {
    const double d = (t - gamma) * (t + gamma);
    return 2.0 * (t * t / (d * d));
  } else if constexpr (K == Kernel::g2_over_diff2) {
    const double d = (t - gamma) * (t + gamma);
    return 2.0 * (gamma * gamma / (d * d));
  } else {
    return 2.0 * (1.0 / (0.25 + gamma * gamma));
  }
}

template <Kernel K>
double sum_range(double t, std::span<const double> g) {
  return blocked_sum(g.size(), [&](std::size_t i) { return pair_term<K>(t, g[i]); });
}

double raw_sum(Kernel k, double t, std::span<const double> g) {
  switch (k) {
    case Kernel::inv_sq_shift: return sum_range<Kernel::inv_sq_shift>(t, g);
    case Kernel::inv_diff: return sum_range<Kernel::inv_diff>(t, g);
    case Kernel::t2_over_diff2: return sum_range<Kernel::t2_over_diff2>(t, g);
    case Kernel::g2_over_diff2: return sum_range<Kernel::g2_over_diff2>(t, g);
    case Kernel::riemann: return sum_range<Kernel::riemann>(t, g);
  }
  return 0.0;
}

}  // namespace

double kernel_pair_term(Kernel k, double t, double gamma) {
  switch (k) {
    case Kernel::inv_sq_shift: {
      const double a = t - gamma, b = t + gamma;
      return 1.0 / (a * a) + 1.0 / (b * b);
    }
    case Kernel::inv_diff:
      return 2.0 * (1.0 / ((gamma - t) * (gamma + t)));
    case Kernel::t2_over_diff2: {
      const double d = (t - gamma) * (t + gamma);
      return 2.0 * (t * t / (d * d));
    }
    case Kernel::g2_over_diff2: {
      const double d = (t - gamma) * (t + gamma);
      return 2.0 * (gamma * gamma / (d * d));
    }
    case Kernel::riemann:
      return 2.0 * (1.0 / (0.25 + gamma * gamma));
  }
  return 0.0;
}

double partial_sum(Kernel k, double t, std::span<const double> ordinates) {
  check_coincidence(k, t, ordinates);
  return raw_sum(k, t, ordinates);
}

GapSpectralSum::GapSpectralSum(Kernel k, const ZeroTable& table, double lo, double hi,
                               double T_trunc, std::size_t near)
    : kernel_(k), lo_(lo), hi_(hi), T_trunc_(T_trunc) {
  if (!(lo < hi)) throw DomainError("GapSpectralSum: empty interval");
  if (kernel_has_parameter(k) && !(T_trunc >= 2.0 * hi)) {
    throw DomainError("GapSpectralSum: T_trunc must be at least 2 hi");
  }
  if (!table.covers_origin() || T_trunc > table.range().hi) {
    throw IncompleteTable("GapSpectralSum: table does not reach " + std::to_string(T_trunc));
  }
  const auto used = table.ordinates().first(table.count_up_to(T_trunc));
  const std::size_t below = static_cast<std::size_t>(
      std::lower_bound(used.begin(), used.end(), lo) - used.begin());
  const std::size_t above = static_cast<std::size_t>(
      std::upper_bound(used.begin(), used.end(), hi) - used.begin());
  const std::size_t first = below > near ? below - near : 0;
  const std::size_t last = std::min(used.size(), above + near);
  near_ = used.subspan(first, last - first);
  const auto left = used.first(first);
  const auto right = used.subspan(last);

  std::array<double, kNodes> f{};
  for (int j = 0; j < kNodes; ++j) {
    const double x = std::cos(std::numbers::pi * (j + 0.5) / kNodes);
    const double t = 0.5 * (lo + hi) + 0.5 * (hi - lo) * x;
    CompensatedSum s;
    s.add(raw_sum(k, t, left));
    s.add(raw_sum(k, t, right));
    f[j] = s.value();
  }
  for (int m = 0; m < kNodes; ++m) {
    double c = 0.0;
    for (int j = 0; j < kNodes; ++j) c += f[j] * std::cos(std::numbers::pi * m * (j + 0.5) / kNodes);
    cheb_[m] = 2.0 * c / kNodes;
  }
}

double GapSpectralSum::operator()(double t) const {
  if (!(t > lo_ && t < hi_)) throw DomainError("GapSpectralSum: t outside the gap");
  const double x = (2.0 * t - lo_ - hi_) / (hi_ - lo_);
  // Clenshaw
  double b1 = 0.0, b2 = 0.0;
  for (int m = kNodes - 1; m >= 1; --m) {
    const double b0 = 2.0 * x * b1 - b2 + cheb_[m];
    b2 = b1;
    b1 = b0;
  }
  const double far = x * b1 - b2 + 0.5 * cheb_[0];
  CompensatedSum s;
  s.add(partial_sum(kernel_, t, near_));
  s.add(far);
  s.add(tail_estimate(kernel_, t, T_trunc_).tail);
  return s.value();
}

double default_truncation(double t, double factor) { return std::max(factor * t, t + 1000.0); }

TailEstimate tail_estimate(Kernel k, double t, double T_trunc) {
  const double need = std::max(kernel_has_parameter(k) ? 2.0 * t : 0.0, 50.0);
  if (!(T_trunc >= need) || !std::isfinite(T_trunc)) {
    throw DomainError("tail_estimate: T_trunc = " + std::to_string(T_trunc) +
                      " below max(2t, 50)");
  }
  // integral_T^inf u^-m ln(u / 2pi) du = T^(1-m) (L / (m-1) + 1 / (m-1)^2)
  const double L = std::log(T_trunc / kTwoPi);
  const double ratio = series_scale_sq(k, t) / (T_trunc * T_trunc);
  CompensatedSum acc;
  double power = 1.0 / T_trunc;  // s^(2j) T^(1-m) with m = 2 + 2j
  for (int j = 0; j < 2000; ++j) {
    const double m1 = 1.0 + 2.0 * j;
    const double term = series_coefficient(k, j) * power * (L / m1 + 1.0 / (m1 * m1));
    acc.add(term);
    if (j > 2 && std::abs(term) < 1e-19 * std::abs(acc.value())) break;
    power *= ratio;
  }
  const double tail = acc.value() / kTwoPi;
  return {tail, std::abs(tail) * std::log(T_trunc) / T_trunc};
}

SpectralSum spectral_sum(Kernel k, double t, const ZeroTable& table, double T_trunc) {
  if (kernel_has_parameter(k) && !(T_trunc >= 2.0 * t)) {
    throw DomainError("spectral_sum: T_trunc must be at least 2t");
  }
  if (!table.covers_origin() || T_trunc > table.range().hi) {
    throw IncompleteTable("spectral_sum: table covers [" + std::to_string(table.range().lo) +
                          ", " + std::to_string(table.range().hi) + "], need (0, " +
                          std::to_string(T_trunc) + "]");
  }
  const auto all = table.ordinates();
  const auto used = all.first(table.count_up_to(T_trunc));
  SpectralSum s;
  s.kernel = k;
  s.t = t;
  s.T_trunc = T_trunc;
  s.partial = partial_sum(k, t, used);
  const TailEstimate tail = tail_estimate(k, t, T_trunc);
  s.tail = tail.tail;
  s.tail_err = tail.tail_err;
  s.total = s.partial + s.tail;
  return s;
}

double riemann_constant() { return std::numbers::egamma + 2.0 - std::log(4.0 * std::numbers::pi); }

}  // namespace moserlab
