#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "moserlab/errors.hpp"
#include "moserlab/stationary.hpp"

using namespace moserlab;
using fixtures::oracle_value;

TEST_CASE("first gap") {
  const ZeroTable& t = fixtures::small_table();
  const StationaryScan s = scan_stationary(t, 10.0, 22.0);
  REQUIRE(s.points.size() == 1);
  const StationaryPoint& p = s.points[0];
  CHECK(std::abs(p.t0 - oracle_value("stationary_gap1_t0")) < 1e-9);
  CHECK(std::abs(p.z_value - oracle_value("stationary_gap1_z")) < 1e-9);
  CHECK(p.z_value > 0.0);
  CHECK(p.z2_value < 0.0);  // a maximum
  CHECK(p.gamma_lo == t[0]);
  CHECK(p.gamma_hi == t[1]);
  CHECK(p.delta == doctest::Approx(std::min(p.t0 - t[0], t[1] - p.t0)));
  CHECK(s.faults.empty());
  CHECK(s.condition_b_failures == 0);
}

TEST_CASE("first hundred gaps") {
  const ZeroTable& t = fixtures::small_table();
  const StationaryScan s = scan_stationary(t, 10.0, t[100]);
  CHECK(s.gaps.size() == 100);
  CHECK(s.points.size() == 100);
  CHECK(s.faults.empty());
  CHECK(s.condition_b_failures == 0);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const auto& p = s.points[i];
    CHECK(p.gamma_lo < p.t0);
    CHECK(p.t0 < p.gamma_hi);
    CHECK(s.gaps[i].stationary_points == 1);
    if (i > 0) CHECK(p.t0 > s.points[i - 1].t0);
  }
}

TEST_CASE("scan range checks") {
  const ZeroTable& t = fixtures::small_table();
  CHECK_THROWS_AS(scan_stationary(t, 10.0, 5000.0), DomainError);
  CHECK_THROWS_AS(scan_stationary(t, 30.0, 20.0), DomainError);
}

TEST_CASE("filter_tilde") {
  const std::vector<StationaryPoint> pts{
      {100.0, 99.0, 101.0, 0.5, 0.0, 0.3},
      {100.0, 99.0, 101.0, 0.005, 0.0, 0.3},
      {100.0, 99.0, 101.0, -0.05, 0.0, 0.3},
  };
  const auto a1 = filter_tilde(pts, 1.0);
  REQUIRE(a1.size() == 2);
  CHECK(a1[0].z_value == 0.5);
  CHECK(a1[1].z_value == -0.05);
  const auto a05 = filter_tilde(pts, 0.5);
  REQUIRE(a05.size() == 1);
  CHECK(a05[0].z_value == 0.5);
  CHECK_THROWS_AS(filter_tilde(pts, 0.0), DomainError);
}

TEST_CASE("margin arithmetic") {
  CHECK(theorem1_margin({100.3, 100.0, 101.0, 1.0, 0.0, 0.3}, 1.0) == doctest::Approx(30.0));
  CHECK(theorem1_margin({100.005, 100.0, 101.0, 1.0, 0.0, 0.005}, 1.0) == doctest::Approx(0.5));
  CHECK(theorem1_margin({100.3, 100.0, 101.0, 1.0, 0.0, 0.3}, 0.5) == doctest::Approx(3.0));
}

TEST_CASE("gap statistics") {
  const ZeroTable two({14.1347, 21.0220}, {10.0, 22.0}, ZeroSource::ingested, 0.0);
  const GapStatistics g = gap_statistics(two);
  REQUIRE(g.gaps.size() == 1);
  CHECK(g.gaps[0].size == doctest::Approx(6.8873));
  CHECK_FALSE(g.gaps[0].littlewood_ratio.has_value());
  CHECK(g.max_gap == doctest::Approx(6.8873));

  const ZeroTable three({15.6, 16.6, 20.0}, {10.0, 22.0}, ZeroSource::ingested, 0.0);
  const GapStatistics h = gap_statistics(three);
  REQUIRE(h.gaps[0].littlewood_ratio.has_value());
  CHECK(*h.gaps[0].littlewood_ratio == doctest::Approx(std::log(std::log(std::log(15.6)))));
  CHECK(h.max_gap_at == 16.6);
  CHECK(h.mean_gap == doctest::Approx(2.2));

  const GapStatistics d = gap_statistics(fixtures::small_table());
  CHECK(d.max_gap > 0.0);
  CHECK(d.max_gap < 7.0);
  CHECK_THROWS_AS(gap_statistics(ZeroTable()), DomainError);
}

TEST_CASE("peak statistics") {
  const PeakStatistics one = peak_statistics({{100.0, 99.0, 101.0, 3.0, 0.0, 0.3}}, 0.4);
  REQUIRE(one.entries.size() == 1);
  CHECK(one.entries[0].omega_ratio == doctest::Approx(3.0 / std::exp(std::pow(std::log(100.0), 0.4))));
  CHECK_THROWS_AS(peak_statistics({}, 0.5), DomainError);
  CHECK_THROWS_AS(peak_statistics({}, 0.0), DomainError);

  const ZeroTable& t = fixtures::small_table();
  const PeakStatistics p = peak_statistics(scan_stationary(t, 10.0, 3000.0).points, 0.25);
  CHECK(p.entries.size() > 1000);
  for (std::size_t i = 1; i < p.entries.size(); ++i) {
    CHECK(p.entries[i].running_max >= p.entries[i - 1].running_max);
  }
  REQUIRE(!p.trend.empty());
  for (std::size_t i = 1; i < p.trend.size(); ++i) {
    CHECK(p.trend[i].t_end == 2.0 * p.trend[i - 1].t_end);
    CHECK(p.trend[i].running_max >= p.trend[i - 1].running_max);
  }
}
