#pragma once

#include <complex>
#include <functional>

namespace moserlab {

/// Working range of every public evaluator.
inline constexpr double kWorkingLo = 10.0;
inline constexpr double kWorkingHi = 1.0e5;

struct EvalResult {
  double value = 0.0;
  double abs_err = 0.0;
};

struct ComplexEvalResult {
  std::complex<double> value;
  double abs_err = 0.0;
};

/// Accuracy controls for Z(t) and its derivatives.
///
/// `rs_correction_terms` is the highest Riemann-Siegel correction C_k that is
/// always applied (C_0 .. C_k). Higher corrections, up to C_4, are added while
/// the remainder bound exceeds `target_abs_err`; where even C_4 is not enough
/// (low t) the value comes from Euler-Maclaurin summation of zeta instead.
struct PrecisionPolicy {
  int rs_correction_terms = 2;
  double fd_base_step = 1e-5;
  double target_abs_err = 1e-8;

  void validate() const;
};

struct ThetaDerivatives {
  double first = 0.0;
  double second = 0.0;
};

struct ZDerivatives {
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
  double abs_err = 0.0;  // error estimate of `value`
};

/// Riemann-Siegel theta function from its Stirling expansion.
EvalResult theta(double t);
ThetaDerivatives theta_derivatives(double t);

/// Hardy's Z(t), with zeta(1/2 + it) = exp(-i theta(t)) Z(t).
EvalResult z(double t, const PrecisionPolicy& policy = {});

/// Z, Z', Z'' by term-wise differentiation of the evaluated series.
ZDerivatives z_derivatives(double t, const PrecisionPolicy& policy = {});

/// Z, Z', Z'' from Richardson-extrapolated central differences of Z alone.
ZDerivatives z_derivatives_fd(double t, const PrecisionPolicy& policy = {});

ComplexEvalResult zeta_half(double t, const PrecisionPolicy& policy = {});

/// zeta''/zeta at 1/2 + it assembled from Z, Z', Z'', theta', theta''.
/// Throws PoleError when |Z(t)| <= 1e-6.
ComplexEvalResult zeta_second_ratio(double t, const PrecisionPolicy& policy = {});

struct FdDerivatives {
  double first = 0.0;
  double second = 0.0;
};

/// Central differences with one Richardson level. Exact up to roundoff for
/// polynomials of degree <= 4 (first derivative) and <= 5 (second).
FdDerivatives richardson_derivatives(const std::function<double(double)>& f, double t,
                                     double h1, double h2);

/// Step sizes max(base, 1e-8 t) and max(10 base, 1e-7 t).
double first_difference_step(double t, const PrecisionPolicy& policy);
double second_difference_step(double t, const PrecisionPolicy& policy);

namespace detail {

enum class Method { riemann_siegel, euler_maclaurin };

/// Evaluation recipe fixed at one abscissa and reused at nearby abscissae so
/// that finite differences see a single smooth branch.
struct Plan {
  Method method = Method::riemann_siegel;
  int main_terms = 0;    // RS: floor(sqrt(t / 2pi)); EM: direct-sum length
  int corrections = 0;   // RS only: highest C_k used
  double truncation_err = 0.0;
};

Plan plan_for(double t, const PrecisionPolicy& policy);

/// No domain check; used by the scanners slightly below t = 10.
long double theta_extended(double t);
ThetaDerivatives theta_derivatives_unchecked(double t);
double z_value(double t, const Plan& plan);
ZDerivatives z_with_derivatives(double t, const Plan& plan, const PrecisionPolicy& policy);

/// Riemann-Siegel remainder with the branch (N, K) held fixed.
double rs_remainder(double t, int main_terms, int corrections);

/// Upper envelope of the RS error after C_0 .. C_k.
double rs_error_envelope(double t, int corrections);

}  // namespace detail

}  // namespace moserlab
