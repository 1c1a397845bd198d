#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "moserlab/errors.hpp"
#include "moserlab/numeric.hpp"
#include "moserlab/rs_core.hpp"
#include "moserlab/zeros.hpp"

using namespace moserlab;
using fixtures::oracle_value;

namespace {

std::string key(const char* prefix, const char* t) { return std::string(prefix) + "_" + t; }

}  // namespace

TEST_CASE("theta matches the mpmath values") {
  const char* ts[] = {"10", "20", "50", "100", "1000", "10000", "100000"};
  for (const char* t : ts) {
    CAPTURE(t);
    const double want = oracle_value(key("theta", t));
    const EvalResult r = theta(std::atof(t));
    CHECK(std::abs(r.value - want) <= std::max(1e-8, 1e-14 * std::abs(want)));
    CHECK(r.abs_err >= 0.0);
    CHECK(std::isfinite(r.abs_err));
  }
  CHECK(std::abs(theta(2.0 * std::numbers::pi * std::numbers::e).value -
                 oracle_value("theta_17.0794684453")) <= 1e-8);
}

TEST_CASE("theta vanishes at the first Gram point") {
  CHECK(std::abs(theta(oracle_value("gram_0")).value) <= 1e-8);
}

TEST_CASE("theta is increasing") { CHECK(theta(100.0).value > theta(50.0).value); }

TEST_CASE("theta rejects t below the working range") {
  CHECK_THROWS_AS(theta(9.99), DomainError);
  CHECK_THROWS_AS(theta_derivatives(5.0), DomainError);
  CHECK_THROWS_AS(z(1.0), DomainError);
  CHECK_THROWS_AS(z_derivatives(9.0), DomainError);
}

TEST_CASE("theta derivatives") {
  const double t = 2.0 * std::numbers::pi * std::numbers::e;
  CHECK(std::abs(theta_derivatives(t).first - 0.5) <= 1e-3);
  CHECK(std::abs(theta_derivatives(1000.0).second - 5.0e-4) <= 1e-6);
  const double ratio = theta_derivatives(1e4).first / (0.5 * std::log(1e4 / (2.0 * std::numbers::pi)));
  CHECK(std::abs(ratio - 1.0) <= 0.02);
  for (double s = 100.0; s <= 1e5; s *= 1.7) {
    CAPTURE(s);
    CHECK(std::abs(theta_derivatives(s).second * 2.0 * s - 1.0) <= 0.01);
  }
  // theta' against a central difference of theta
  for (double s : {12.0, 100.0, 5000.0}) {
    const double h = 1e-4;
    const double fd = (theta(s + h).value - theta(s - h).value) / (2 * h);
    CHECK(std::abs(fd - theta_derivatives(s).first) <= 1e-7);
  }
}

TEST_CASE("Z and its derivatives match the mpmath values") {
  const char* ts[] = {"14", "14.3", "20", "50", "100", "500", "1000", "5000", "10000", "50000", "99999.5"};
  for (const char* t : ts) {
    CAPTURE(t);
    const double s = std::atof(t);
    const ZDerivatives d = z_derivatives(s);
    const double tol = s < 200 ? 1e-10 : 5e-8;
    CHECK(std::abs(d.value - oracle_value(key("z", t))) <= tol);
    CHECK(std::abs(d.first - oracle_value(key("dz", t))) <= 1e3 * tol * std::max(1.0, std::log(s)));
    CHECK(std::abs(d.second - oracle_value(key("ddz", t))) <= 1e5 * tol * std::max(1.0, std::log(s)));
    CHECK(std::abs(z(s).value - d.value) <= 1e-12);
    CHECK(std::abs(z(s).value - oracle_value(key("z", t))) <= std::max(z(s).abs_err, 1e-12) + 1e-10);
  }
}

TEST_CASE("Z at the first zero and around it") {
  CHECK(std::abs(z(14.1347251417).value) < 1e-6);
  CHECK(z(14.0).value * z(14.3).value < 0.0);
  CHECK(std::abs(zeta_half(14.1347251417).value) < 1e-6);
}

TEST_CASE("|zeta(1/2+it)| equals |Z(t)|") {
  for (double t : {20.0, 50.0, 100.0}) {
    const EvalResult a = z(t);
    const ComplexEvalResult b = zeta_half(t);
    CHECK(std::abs(std::abs(a.value) - std::abs(b.value)) <= a.abs_err + b.abs_err + 1e-15);
  }
  UniformStream rng(7);
  int checked = 0;
  while (checked < 1000) {
    const double t = 20.0 + (1e4 - 20.0) * rng.next();
    const EvalResult a = z(t);
    if (std::abs(a.value) <= 0.1) continue;
    ++checked;
    const ComplexEvalResult b = zeta_half(t);
    REQUIRE(std::abs(std::abs(a.value) - std::abs(b.value)) <= a.abs_err + b.abs_err + 1e-14);
  }
}

TEST_CASE("zeta is real up to sign at Gram points") {
  for (long n = 0; n < 100; n += 11) {
    const double g = gram_point(n);
    const std::complex<double> v = zeta_half(g).value;
    CHECK(std::abs(v.imag()) < 1e-6 * std::abs(z(g).value));
  }
}

TEST_CASE("analytic and finite difference derivatives agree") {
  const ZDerivatives a = z_derivatives(100.0);
  const ZDerivatives f = z_derivatives_fd(100.0);
  CHECK(std::abs(a.first - f.first) <= 1e-6 * std::abs(a.first));
  UniformStream rng(11);
  int checked = 0;
  while (checked < 100) {
    const double t = 10.0 + (1e5 - 10.0) * rng.next();
    const ZDerivatives x = z_derivatives(t);
    if (std::abs(x.value) <= 0.1) continue;
    ++checked;
    const ZDerivatives y = z_derivatives_fd(t);
    CAPTURE(t);
    CHECK(std::abs(x.first - y.first) <= 1e-6 * std::max(std::abs(x.first), std::abs(x.value)));
    CHECK(std::abs(x.second - y.second) <= std::max(1e-5, 1e-4 * std::abs(x.second)));
  }
}

TEST_CASE("difference operator is exact on a quadratic") {
  const auto f = [](double t) { return (t - 15.0) * (t - 20.0); };
  for (double t : {12.0, 17.5, 40.0}) {
    const FdDerivatives d = richardson_derivatives(f, t, 1e-3, 1e-2);
    CHECK(d.first == doctest::Approx(2.0 * t - 35.0).epsilon(1e-9));
    CHECK(d.second == doctest::Approx(2.0).epsilon(1e-7));
  }
  PrecisionPolicy p;
  CHECK(first_difference_step(10.0, p) == 1e-5);
  CHECK(first_difference_step(1e5, p) == doctest::Approx(1e-3));
  CHECK(second_difference_step(10.0, p) == doctest::Approx(1e-4));
  CHECK(second_difference_step(1e5, p) == doctest::Approx(1e-2));
}

TEST_CASE("zeta''/zeta") {
  const double t0 = oracle_value("stationary_gap1_t0");
  const std::complex<double> r = zeta_second_ratio(t0).value;
  CHECK(std::abs(r.imag() / (1.0 / (2.0 * t0)) - 1.0) <= 1e-3);
  CHECK(std::abs(r.imag() - theta_derivatives(t0).second) <= 1e-3 * theta_derivatives(t0).second);
  CHECK_THROWS_AS(zeta_second_ratio(kFirstZeroOrdinate),
                  PoleError);

  // second difference of zeta along t equals -zeta''
  const double t = 100.0, h = 1e-3;
  const auto zh = [](double s) { return zeta_half(s).value; };
  const std::complex<double> d2 = (zh(t + h) - 2.0 * zh(t) + zh(t - h)) / (h * h);
  const std::complex<double> want = -zeta_second_ratio(t).value * zh(t);
  CHECK(std::abs(d2 - want) <= 1e-4 * std::abs(want));

  for (double s = 14.2; s < 21.0; s += 0.05) {
    if (std::abs(z(s).value) <= 0.1) continue;
    const ComplexEvalResult q = zeta_second_ratio(s);
    CHECK(std::isfinite(q.value.real()));
    CHECK(std::isfinite(q.value.imag()));
    CHECK(std::isfinite(q.abs_err));
  }
}

TEST_CASE("precision policy") {
  PrecisionPolicy p;
  CHECK(p.rs_correction_terms == 2);
  CHECK(p.target_abs_err == 1e-8);
  p.rs_correction_terms = 5;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.rs_correction_terms = 0;
  CHECK_NOTHROW(p.validate());
  p.fd_base_step = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  // more corrections cannot make the error estimate worse at large t
  PrecisionPolicy lo, hi;
  lo.rs_correction_terms = 0;
  lo.target_abs_err = 1.0;
  hi.rs_correction_terms = 4;
  CHECK(z(5e4, hi).abs_err <= z(5e4, lo).abs_err);
  CHECK(std::abs(z(5e4, hi).value - oracle_value("z_50000")) <= 1e-9);
}
