#include "moserlab/rs_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>

#include "moserlab/errors.hpp"
#include "moserlab/numeric.hpp"
#include "series_coefficients.inc"

namespace moserlab {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kTwoPiL = 2.0L * kPiL;
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kEps = 2.220446049250313e-16;

// Coefficients (1 - 2^(1-2k)) |B_2k| / (4k (2k-1)) of t^-(2k-1) in theta(t).
constexpr std::array<long double, 7> kThetaSeries = {
    1.0L / 48.0L,
    7.0L / 5760.0L,
    31.0L / 80640.0L,
    (127.0L / 128.0L) * (1.0L / 30.0L) / 112.0L,
    (511.0L / 512.0L) * (5.0L / 66.0L) / 180.0L,
    (2047.0L / 2048.0L) * (691.0L / 2730.0L) / 264.0L,
    (8191.0L / 8192.0L) * (7.0L / 6.0L) / 364.0L,
};

// Remainder envelopes after C_0 .. C_k: c_k t^-(2k+3)/4.
constexpr std::array<double, 5> kEnvelope = {0.127, 0.053, 0.011, 0.031, 0.017};

// Below this height an Euler-Maclaurin fallback is affordable.
constexpr double kEulerMaclaurinCeiling = 2000.0;

void check_domain(double t, const char* op) {
  if (!(t >= kWorkingLo) || !(t <= kWorkingHi)) {
    throw DomainError(std::string(op) + ": t = " + std::to_string(t) +
                      " outside working range [10, 1e5]");
  }
}

double reduce_phase(long double phase) {
  return static_cast<double>(std::remainder(phase, kTwoPiL));
}

double horner(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::span<const double> correction(int k) {
  switch (k) {
    case 0: return kC0;
    case 1: return kC1;
    case 2: return kC2;
    case 3: return kC3;
    default: return kC4;
  }
}

struct Jet {
  std::complex<double> v, d1, d2;
};

Jet operator*(const Jet& a, const Jet& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

// n^-s with s = 1/2 + it, as a jet in s.
Jet power_jet(double n, double t) {
  const long double log_n = std::log(static_cast<long double>(n));
  const double ph = reduce_phase(-static_cast<long double>(t) * log_n);
  const std::complex<double> e = std::polar(1.0 / std::sqrt(n), ph);
  const double l = static_cast<double>(log_n);
  return {e, -l * e, l * l * e};
}

class JetSum {
 public:
  void add(const Jet& j) {
    part_[0].add(j.v.real());
    part_[1].add(j.v.imag());
    part_[2].add(j.d1.real());
    part_[3].add(j.d1.imag());
    part_[4].add(j.d2.real());
    part_[5].add(j.d2.imag());
  }
  Jet value() const {
    return {{part_[0].value(), part_[1].value()},
            {part_[2].value(), part_[3].value()},
            {part_[4].value(), part_[5].value()}};
  }

 private:
  std::array<CompensatedSum, 6> part_;
};

// zeta, d zeta/ds, d^2 zeta/ds^2 at 1/2 + it by Euler-Maclaurin summation
// with `n_direct` direct terms.
Jet zeta_euler_maclaurin(double t, int n_direct, double& tail) {
  const std::complex<double> s(0.5, t);
  JetSum acc;
  for (int n = 1; n < n_direct; ++n) acc.add(power_jet(n, t));

  const double big_n = n_direct;
  const Jet n_pow = power_jet(big_n, t);  // N^-s
  const Jet integral_factor{big_n * n_pow.v, big_n * n_pow.d1, big_n * n_pow.d2};
  const std::complex<double> inv = 1.0 / (s - 1.0);
  acc.add(integral_factor * Jet{inv, -inv * inv, 2.0 * inv * inv * inv});
  acc.add(Jet{0.5 * n_pow.v, 0.5 * n_pow.d1, 0.5 * n_pow.d2});

  Jet rising{s, 1.0, 0.0};  // s (s+1) ... (s+2k-2)
  double scale = 1.0 / big_n;  // N^(1-2k)
  tail = 0.0;
  for (int k = 1; k <= static_cast<int>(std::size(kBernoulliOverFactorial)); ++k) {
    const Jet power{scale * n_pow.v, scale * n_pow.d1, scale * n_pow.d2};
    Jet term = rising * power;
    const double c = kBernoulliOverFactorial[k - 1];
    term = {c * term.v, c * term.d1, c * term.d2};
    acc.add(term);
    tail = std::abs(term.v);
    if (k >= 2 && std::abs(term.v) < 1e-17 && std::abs(term.d2) < 1e-15) break;
    const double j = 2.0 * k - 1.0;
    rising = rising * Jet{s + j, 1.0, 0.0} * Jet{s + (j + 1.0), 1.0, 0.0};
    scale /= big_n * big_n;
  }
  return acc.value();
}

struct MainSum {
  double value = 0.0, first = 0.0, second = 0.0;
};

MainSum rs_main_sum(double t, int n_terms, bool derivatives) {
  const long double th = detail::theta_extended(t);
  const ThetaDerivatives td =
      derivatives ? detail::theta_derivatives_unchecked(t) : ThetaDerivatives{};
  CompensatedSum v, d1, d2;
  for (int n = 1; n <= n_terms; ++n) {
    const long double log_n = std::log(static_cast<long double>(n));
    const double ph = reduce_phase(th - static_cast<long double>(t) * log_n);
    const double w = 2.0 / std::sqrt(static_cast<double>(n));
    const double c = std::cos(ph);
    v.add(w * c);
    if (derivatives) {
      const double s = std::sin(ph);
      const double dph = td.first - static_cast<double>(log_n);
      d1.add(-w * s * dph);
      d2.add(-w * (c * dph * dph + s * td.second));
    }
  }
  return {v.value(), d1.value(), d2.value()};
}

double roundoff(double t, int n_terms) {
  // phase error of the long-double reduction plus summation roundoff
  return 8.0 * kEps * (1.0 + std::sqrt(static_cast<double>(n_terms))) *
         (1.0 + 1e-3 * std::log(t));
}

}  // namespace

void PrecisionPolicy::validate() const {
  if (rs_correction_terms < 0 || rs_correction_terms > 4) {
    throw DomainError("rs_correction_terms must lie in [0, 4]");
  }
  if (!(fd_base_step > 0.0) || !(target_abs_err > 0.0)) {
    throw DomainError("fd_base_step and target_abs_err must be positive");
  }
}

namespace detail {

long double theta_extended(double t) {
  const long double x = t;
  long double value = 0.5L * x * std::log(x / kTwoPiL) - 0.5L * x - kPiL / 8.0L;
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  long double power = inv;
  for (const long double c : kThetaSeries) {
    value += c * power;
    power *= inv2;
  }
  return value;
}

ThetaDerivatives theta_derivatives_unchecked(double t) {
  const double inv = 1.0 / t;
  const double inv2 = inv * inv;
  double first = 0.5 * std::log(t / kTwoPi);
  double second = 0.5 * inv;
  double power = inv2;  // t^-2k
  for (std::size_t i = 0; i < kThetaSeries.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    const double c = static_cast<double>(kThetaSeries[i]);
    first -= c * (2.0 * k - 1.0) * power;
    second += c * (2.0 * k - 1.0) * (2.0 * k) * power * inv;
    power *= inv2;
  }
  return {first, second};
}

double rs_error_envelope(double t, int corrections) {
  const int k = std::clamp(corrections, 0, 4);
  return kEnvelope[k] * std::pow(t, -(2.0 * k + 3.0) / 4.0);
}

double rs_remainder(double t, int main_terms, int corrections) {
  const double a = std::sqrt(t / kTwoPi);
  const double zv = 2.0 * (a - main_terms) - 1.0;
  double series = 0.0;
  double scale = 1.0;
  for (int k = 0; k <= corrections; ++k) {
    series += horner(correction(k), zv) * scale;
    scale /= a;
  }
  const double sign = (main_terms % 2 == 1) ? 1.0 : -1.0;  // (-1)^(N-1)
  return sign * series / std::sqrt(a);
}

Plan plan_for(double t, const PrecisionPolicy& policy) {
  int k = std::clamp(policy.rs_correction_terms, 0, 4);
  while (k < 4 && rs_error_envelope(t, k) > policy.target_abs_err) ++k;
  Plan plan;
  if (rs_error_envelope(t, k) > policy.target_abs_err && t < kEulerMaclaurinCeiling) {
    plan.method = Method::euler_maclaurin;
    plan.main_terms = static_cast<int>(std::ceil(0.5 * t)) + 10;
    plan.truncation_err = 1e-13;
    return plan;
  }
  plan.method = Method::riemann_siegel;
  plan.main_terms = static_cast<int>(std::floor(std::sqrt(t / kTwoPi)));
  plan.corrections = k;
  plan.truncation_err = rs_error_envelope(t, k);
  return plan;
}

double z_value(double t, const Plan& plan) {
  if (plan.method == Method::euler_maclaurin) {
    double tail = 0.0;
    const Jet zeta = zeta_euler_maclaurin(t, plan.main_terms, tail);
    const double th = reduce_phase(theta_extended(t));
    return (std::polar(1.0, th) * zeta.v).real();
  }
  return rs_main_sum(t, plan.main_terms, false).value +
         rs_remainder(t, plan.main_terms, plan.corrections);
}

ZDerivatives z_with_derivatives(double t, const Plan& plan, const PrecisionPolicy& policy) {
  const ThetaDerivatives td = theta_derivatives_unchecked(t);
  if (plan.method == Method::euler_maclaurin) {
    double tail = 0.0;
    const Jet zeta = zeta_euler_maclaurin(t, plan.main_terms, tail);
    const std::complex<double> i(0.0, 1.0);
    // d/dt = i d/ds along the critical line
    const std::complex<double> zt = i * zeta.d1;
    const std::complex<double> ztt = -zeta.d2;
    const std::complex<double> rot = std::polar(1.0, reduce_phase(theta_extended(t)));
    const std::complex<double> f0 = rot * zeta.v;
    const std::complex<double> f1 = rot * (i * td.first * zeta.v + zt);
    const std::complex<double> f2 =
        rot * ((i * td.second - td.first * td.first) * zeta.v + 2.0 * i * td.first * zt + ztt);
    const double err = tail + std::abs(f0.imag()) + roundoff(t, plan.main_terms);
    return {f0.real(), f1.real(), f2.real(), err};
  }
  const MainSum main = rs_main_sum(t, plan.main_terms, true);
  const auto remainder = [&](double x) {
    return rs_remainder(x, plan.main_terms, plan.corrections);
  };
  const FdDerivatives rd = richardson_derivatives(
      remainder, t, first_difference_step(t, policy), second_difference_step(t, policy));
  return {main.value + remainder(t), main.first + rd.first, main.second + rd.second,
          plan.truncation_err + roundoff(t, plan.main_terms)};
}

}  // namespace detail

double first_difference_step(double t, const PrecisionPolicy& policy) {
  return std::max(policy.fd_base_step, t * 1e-8);
}

double second_difference_step(double t, const PrecisionPolicy& policy) {
  return std::max(10.0 * policy.fd_base_step, t * 1e-7);
}

FdDerivatives richardson_derivatives(const std::function<double(double)>& f, double t,
                                     double h1, double h2) {
  const auto d1 = [&](double h) { return (f(t + h) - f(t - h)) / (2.0 * h); };
  const double f0 = f(t);
  const auto d2 = [&](double h) { return (f(t + h) - 2.0 * f0 + f(t - h)) / (h * h); };
  return {(4.0 * d1(0.5 * h1) - d1(h1)) / 3.0, (4.0 * d2(0.5 * h2) - d2(h2)) / 3.0};
}

EvalResult theta(double t) {
  check_domain(t, "theta");
  const long double v = detail::theta_extended(t);
  // first omitted Stirling term is below 1e-15 on the working range
  return {static_cast<double>(v), 1e-15 + std::abs(static_cast<double>(v)) * kEps};
}

ThetaDerivatives theta_derivatives(double t) {
  check_domain(t, "theta_derivatives");
  return detail::theta_derivatives_unchecked(t);
}

EvalResult z(double t, const PrecisionPolicy& policy) {
  check_domain(t, "z");
  policy.validate();
  const detail::Plan plan = detail::plan_for(t, policy);
  if (plan.method == detail::Method::euler_maclaurin) {
    const ZDerivatives d = detail::z_with_derivatives(t, plan, policy);
    return {d.value, d.abs_err};
  }
  return {detail::z_value(t, plan), plan.truncation_err + roundoff(t, plan.main_terms)};
}

ZDerivatives z_derivatives(double t, const PrecisionPolicy& policy) {
  check_domain(t, "z_derivatives");
  policy.validate();
  return detail::z_with_derivatives(t, detail::plan_for(t, policy), policy);
}

ZDerivatives z_derivatives_fd(double t, const PrecisionPolicy& policy) {
  check_domain(t, "z_derivatives_fd");
  policy.validate();
  const detail::Plan plan = detail::plan_for(t, policy);
  const auto f = [&](double x) { return detail::z_value(x, plan); };
  const FdDerivatives fd = richardson_derivatives(f, t, first_difference_step(t, policy),
                                                  second_difference_step(t, policy));
  return {f(t), fd.first, fd.second, plan.truncation_err + roundoff(t, plan.main_terms)};
}

ComplexEvalResult zeta_half(double t, const PrecisionPolicy& policy) {
  const EvalResult zr = z(t, policy);
  const long double th = detail::theta_extended(t);
  const double phase_err = 1e-18 * std::abs(static_cast<double>(th)) + kEps;
  return {std::polar(zr.value, -reduce_phase(th)), zr.abs_err + std::abs(zr.value) * phase_err};
}

ComplexEvalResult zeta_second_ratio(double t, const PrecisionPolicy& policy) {
  const ZDerivatives d = z_derivatives(t, policy);
  if (std::abs(d.value) <= 1e-6) {
    throw PoleError("zeta_second_ratio: |Z(" + std::to_string(t) + ")| <= 1e-6");
  }
  const ThetaDerivatives td = detail::theta_derivatives_unchecked(t);
  const double r1 = d.first / d.value;
  const double r2 = d.second / d.value;
  const std::complex<double> value(-r2 + td.first * td.first, td.second + 2.0 * td.first * r1);
  // derivative errors scale with the dominant frequency theta'
  const double w = 1.0 + std::abs(td.first);
  const double e0 = d.abs_err;
  const double e1 = 2.0 * w * e0 + 1e-10;
  const double e2 = 4.0 * w * w * e0 + 1e-7;
  const double inv = 1.0 / std::abs(d.value);
  const double err = (e2 + std::abs(r2) * e0) * inv + 2.0 * td.first * (e1 + std::abs(r1) * e0) * inv;
  return {value, err};
}

}  // namespace moserlab
