#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "fixtures.hpp"
#include "moserlab/cosmo.hpp"
#include "moserlab/errors.hpp"
#include "moserlab/verify.hpp"

using namespace moserlab;

namespace {

const StationaryPoint& gap1() {
  static const StationaryPoint p = scan_stationary(fixtures::small_table(), 10.0, 22.0).points.at(0);
  return p;
}

}  // namespace

TEST_CASE("density and pressure at a stationary point") {
  const StationaryPoint& p = gap1();
  const CosmoParams unit;
  const double z = p.z_value;
  CHECK(density(p.t0, unit) == doctest::Approx(3.0 / (z * z)).epsilon(1e-12));
  const double sum = spectral_sum(Kernel::inv_sq_shift, p.t0, fixtures::small_table(),
                                  default_truncation(p.t0)).total;
  CHECK(pressure(p.t0, unit, fixtures::small_table()) ==
        doctest::Approx(2.0 * sum - 1.0 / (z * z)).epsilon(1e-9));
  CHECK(pressure_direct(p.t0, unit) ==
        doctest::Approx(-2.0 * p.z2_value / z - 1.0 / (z * z)).epsilon(1e-9));
}

TEST_CASE("closed forms") {
  const CosmoParams prm{2.0, 3.0};
  CHECK(density_from(2.0, 1.0, prm) == doctest::Approx(3.0 / 18.0 * (9.0 / 4.0 + 0.25)));
  CHECK(pressure_from_sum(2.0, 1.0, 5.0, prm) == doctest::Approx(5.0 - 0.375 - 9.0 / 8.0));
  CHECK(pressure_direct_from(2.0, 1.0, -4.0, prm) == doctest::Approx(0.5 * (4.0 - 0.25 - 2.25)));
  const EosDistances d = eos_distances(0.1);
  CHECK(d.to_matter == doctest::Approx(0.1));
  CHECK(d.to_radiation == doctest::Approx(1.0 / 3.0 - 0.1));
}

TEST_CASE("kappa scaling") {
  const double t = 100.3;
  const CosmoParams one, two{2.0, 1.0};
  CHECK(density(t, two) == doctest::Approx(density(t, one) / 2.0).epsilon(1e-14));
  const auto& tab = fixtures::small_table();
  CHECK(pressure(t, two, tab) == doctest::Approx(pressure(t, one, tab) / 2.0).epsilon(1e-14));
  CHECK(eos_ratio(t, two, tab) == doctest::Approx(eos_ratio(t, one, tab)).epsilon(1e-14));
}

TEST_CASE("parameter validation and poles") {
  CHECK_THROWS_AS(density(100.0, {0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(density(100.0, {1.0, -1.0}), DomainError);
  CosmoParams flat;
  flat.k = 0;
  CHECK_THROWS_AS(density(100.0, flat), DomainError);
  CHECK_THROWS_AS(density(kFirstZeroOrdinate, {}), PoleError);
}

TEST_CASE("density is positive and pressure goes negative next to zeros") {
  const auto& tab = fixtures::small_table();
  for (std::size_t i = 10; i < 20; ++i) {
    const CosmoSample a = cosmo_sample(tab[i] + 1e-4, {}, tab);
    CHECK(a.rho > 0.0);
    CHECK(a.p < 0.0);
    CHECK(a.R > 0.0);
    CHECK(a.model_err == doctest::Approx(10.0 / a.t));
  }
}

TEST_CASE("w approaches -1/3 at a zero") {
  const auto& tab = fixtures::small_table();
  for (std::size_t i : {5u, 50u, 500u}) {
    double prev = INFINITY;
    for (double h : {1e-1, 1e-2, 1e-3, 1e-4}) {
      const double dev = std::abs(eos_ratio(tab[i] + h, {}, tab) + 1.0 / 3.0);
      CAPTURE(i);
      CAPTURE(h);
      CHECK(dev < prev);
      prev = dev;
    }
    CHECK(prev < 1e-3);
  }
}

TEST_CASE("interval search on synthetic pressures") {
  CHECK_THROWS_AS(pressure_interval(1.0, 0.0, 2.0, [](double) { return -1.0; }), NoIntervalError);
  const PressureInterval full = pressure_interval(1.0, 0.0, 2.0, [](double) { return 1.0; });
  CHECK(full.delta == doctest::Approx(0.9));
  const auto bump = [](double t) { return 1.0 - ((t - 1.0) / 0.2) * ((t - 1.0) / 0.2); };
  const PressureInterval b = pressure_interval(1.0, 0.0, 2.0, bump);
  CHECK(b.delta <= 0.2);
  CHECK(b.delta >= 0.2 - 1e-4);
  CHECK(interval_holds(b, 0.0, 2.0, bump));
  CHECK_FALSE(interval_holds({1.0, 0.3, 0.7, 1.3}, 0.0, 2.0, bump));
  CHECK_THROWS_AS(pressure_interval(3.0, 0.0, 2.0, bump), DomainError);
}

TEST_CASE("interval around a real stationary point") {
  const StationaryPoint& p = gap1();
  const PressureInterval iv = pressure_interval(p, {}, fixtures::small_table());
  CHECK(iv.delta > 0.0);
  CHECK(iv.lo > p.gamma_lo);
  CHECK(iv.hi < p.gamma_hi);
  const auto& tab = fixtures::small_table();
  CHECK(interval_holds(iv, p.gamma_lo, p.gamma_hi, [&](double t) { return pressure(t, {}, tab); }));
}

TEST_CASE("two pressure routes agree") {
  const auto& tab = fixtures::small_table();
  const auto ts = sample_gap_interiors(tab.ordinates(), 100.0, 1000.0, 100, 9);
  for (double t : ts) {
    const double a = pressure(t, {}, tab), b = pressure_direct(t, {});
    CAPTURE(t);
    CHECK(std::abs(a - b) <= std::max(20.0 / t, 0.01 * std::abs(b)));
  }
}

TEST_CASE("profile") {
  const auto& tab = fixtures::small_table();
  const auto a = profile(15.0, 20.0, 0.1, {}, tab);
  CHECK(a.size() == 51);
  ::setenv("MOSERLAB_THREADS", "1", 1);
  const auto b = profile(15.0, 20.0, 0.1, {}, tab);
  ::unsetenv("MOSERLAB_THREADS");
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].t == b[i].t);
    CHECK(a[i].p == b[i].p);
    CHECK(a[i].w == b[i].w);
    CHECK(a[i].rho > 0.0);
  }
  const auto near = profile(14.13, 14.14, 1e-4, {}, tab);
  for (const auto& s : near) CHECK(std::abs(s.t - kFirstZeroOrdinate) >= kProfileExclusion);
  CHECK(near.size() < 101);
  CHECK(near.size() > 70);
  CHECK_THROWS_AS(profile(5.0, 20.0, 0.1, {}, tab), DomainError);
  CHECK_THROWS_AS(profile(15.0, 20.0, 0.0, {}, tab), DomainError);
}
