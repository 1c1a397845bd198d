#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "fixtures.hpp"
#include "moserlab/errors.hpp"
#include "moserlab/numeric.hpp"
#include "moserlab/verify.hpp"

using namespace moserlab;

namespace {

const std::vector<StationaryPoint>& small_points() {
  static const std::vector<StationaryPoint> pts =
      scan_stationary(fixtures::small_table(), 10.0, 1450.0).points;
  return pts;
}

Model sine_model(double wiggle) {
  return [wiggle](double t) {
    return ModelPoint{std::sin(t) + wiggle * std::sin(3 * t), std::cos(t) + 3 * wiggle * std::cos(3 * t),
                      -std::sin(t) - 9 * wiggle * std::sin(3 * t)};
  };
}

}  // namespace

TEST_CASE("pass is recomputed from thresholds") {
  CHECK(evaluate_pass({{"x", 1.0}, {"x.le", 1.0}}));
  CHECK_FALSE(evaluate_pass({{"x", 1.0}, {"x.lt", 1.0}}));
  CHECK(evaluate_pass({{"x", 2.0}, {"x.gt", 1.0}, {"x.ge", 2.0}}));
  CHECK_FALSE(evaluate_pass({{"x.le", 1.0}}));
  CHECK_FALSE(evaluate_pass({{"x", std::numeric_limits<double>::quiet_NaN()}, {"x.le", 1.0}}));
  CHECK(evaluate_pass({{"y", 5.0}}));
  VerificationReport r;
  r.set("a", 3.0);
  r.require_le("a", 2.0);
  r.pass = true;
  r.finalize();
  CHECK_FALSE(r.pass);
}

TEST_CASE("polynomial model") {
  const Model p = polynomial_model({1.0, 2.0});
  const ModelPoint m = p(0.0);
  CHECK(m.value == 2.0);
  CHECK(m.first == -3.0);
  CHECK(m.second == 2.0);
  const ModelPoint q = polynomial_model({1.0, 3.0, 7.0})(2.0);
  CHECK(q.value == doctest::Approx(5.0));
  CHECK(q.first == doctest::Approx(-1.0));
}

TEST_CASE("exclusion windows") {
  const std::vector<double> r{1.0, 3.0, 7.0};
  CHECK(in_exclusion_window(r, 0.5));
  CHECK(in_exclusion_window(r, 1.1));
  CHECK_FALSE(in_exclusion_window(r, 2.0));
  CHECK_FALSE(in_exclusion_window(r, 6.5));
  CHECK(in_exclusion_window(r, 6.7));
  CHECK(in_exclusion_window(r, 8.0));

  const auto s = sample_gap_interiors(r, 1.0, 7.0, 200, 3);
  CHECK(s.size() == 200);
  for (double t : s) CHECK_FALSE(in_exclusion_window(r, t));
  CHECK(s == sample_gap_interiors(r, 1.0, 7.0, 200, 3));
  CHECK(s != sample_gap_interiors(r, 1.0, 7.0, 200, 4));
  CHECK_THROWS_AS(sample_gap_interiors(r, 8.0, 9.0, 10, 0), DomainError);
}

TEST_CASE("surrogate identity on random root lists") {
  UniformStream rng(21);
  for (int c = 0; c < 20; ++c) {
    std::vector<double> roots;
    double x = 0.0;
    const int n = 2 + static_cast<int>(rng.next() * 8);
    for (int i = 0; i < n; ++i) roots.push_back(x += 0.5 + 3.0 * rng.next());
    const VerificationReport r = verify_formula1_surrogate(roots, roots.front(), roots.back(), 100, c);
    CAPTURE(c);
    CHECK(r.pass);
    CHECK(r.statistics.at("max_rel_residual") <= 1e-12);
  }
  const VerificationReport r = verify_formula1_surrogate({1.0, 3.0, 7.0}, 1.0, 7.0, 100);
  CHECK(r.samples == 100);
  CHECK(r.pass);
}

TEST_CASE("shift sum against Z on real data") {
  const VerificationReport r = verify_formula1(fixtures::small_table(), 100.0, 1000.0, 200, 1);
  CHECK(r.pass);
  CHECK(r.samples == 200);
  CHECK(r.statistics.at("excluded_samples") == 0.0);
  CHECK(r.statistics.at("median_rt") <= 10.0);
  CHECK(r.statistics.at("p95_rt") <= 100.0);
  CHECK_THROWS_AS(verify_formula1(fixtures::small_table(), 100.0, 2000.0, 10), IncompleteTable);
}

TEST_CASE("two routes to zeta second ratio") {
  const VerificationReport r = verify_eq34_consistency(500.0, fixtures::small_table());
  CHECK(r.pass);
  CHECK(r.statistics.at("imag_minus_theta2") <= 1e-9);
  CHECK(r.statistics.at("residual_t") <= 10.0);
  CHECK_THROWS_AS(verify_eq34_consistency(fixtures::small_table()[200] + 1e-6, fixtures::small_table()),
                  PoleError);
  const VerificationReport s = verify_eq34_sweep(fixtures::small_table(), 100.0, 1000.0, 50, 2);
  CHECK(s.pass);
  CHECK(s.samples > 0);

  // exact components on a hand case
  const ThetaDerivatives th{2.0, 0.5};
  const Eq34Components c = eq34_components({1.0, 0.5, -1.0}, th, 1.0 + 0.25);
  CHECK(c.from_z.real() == doctest::Approx(1.0 + 4.0));
  CHECK(c.from_z.imag() == doctest::Approx(0.5 + 2.0));
  CHECK(c.residual.imag() == doctest::Approx(0.5));
  CHECK(c.residual.real() == doctest::Approx(0.0));
}

TEST_CASE("gap checks") {
  const GapCheck ok = check_gap(sine_model(0.0), 0.0, std::numbers::pi);
  CHECK(ok.decreasing);
  CHECK(ok.extrema == 1);
  CHECK(ok.pattern_ok);
  CHECK(ok.max_abs_z == doctest::Approx(1.0).epsilon(1e-3));
  const GapCheck neg = check_gap(sine_model(0.0), std::numbers::pi, 2 * std::numbers::pi);
  CHECK(neg.pattern_ok);

  const GapCheck bad = check_gap(sine_model(0.3), 0.0, std::numbers::pi);
  CHECK(bad.extrema == 3);
  CHECK_FALSE(bad.pattern_ok);
  CHECK_FALSE(bad.decreasing);
}

TEST_CASE("corollaries on real gaps") {
  const VerificationReport r = verify_corollaries(fixtures::small_table(), 10.0, 1000.0);
  CHECK(r.pass);
  CHECK(r.statistics.at("gaps_count_not_one") == 0.0);
  CHECK(r.statistics.at("gaps") == static_cast<double>(fixtures::small_table().count_up_to(1000.0) - 1));
  CHECK_THROWS_AS(verify_corollaries(fixtures::small_table(), 10.0, 5000.0), IncompleteTable);
}

TEST_CASE("ab identities on a toy table") {
  const std::vector<double> toy{1.0, 2.0};
  const AbIdentity id = ab_identity(1.5, toy);
  const double expect = 4.0 + 1.0 / 6.25 + 4.0 + 1.0 / 12.25;
  CHECK(std::abs(id.shift_sum - expect) <= 1e-12);
  CHECK(std::abs(id.split_sum - expect) <= 1e-12);
  CHECK(std::abs(id.paired_sum - expect) <= 1e-12);
  CHECK_THROWS_AS(ab_identity(2.0, toy), CoincidenceError);
}

TEST_CASE("stationary point sums on the small table") {
  const auto& pts = small_points();
  const VerificationReport e = verify_eq9(pts, fixtures::small_table());
  CHECK(e.statistics.at("mean_ratio") > 0.8);
  CHECK(e.statistics.at("mean_ratio") < 1.2);
  CHECK(e.statistics.count("band_mean_4e3_1e4") == 0);
  CHECK_FALSE(e.notes.empty());
  CHECK(e.pass);

  const VerificationReport a = verify_asymptotics_ab(pts, fixtures::small_table());
  CHECK(a.pass);
  CHECK(a.statistics.at("a_resolved_sign") == 1.0);
  CHECK(a.statistics.at("toy_split_residual") <= 1e-12);
  CHECK(a.statistics.at("a_max_rel_gap_matching") <= 0.05);
  CHECK(a.statistics.at("b_mean_ratio") >= 0.8);
  CHECK(a.statistics.at("b_mean_ratio") <= 1.2);

  std::vector<StationaryPoint> far = pts;
  far.back().t0 = 2000.0;
  CHECK_THROWS_AS(verify_eq9(far, fixtures::small_table()), IncompleteTable);
}

TEST_CASE("gap margins") {
  const auto tilde = filter_tilde(small_points(), 1.0);
  const VerificationReport r = verify_theorem1(tilde, 1.0);
  CHECK(r.pass);
  CHECK(r.statistics.at("violations") == 0.0);
  CHECK(r.statistics.at("min_margin") > 1.0);

  auto doctored = tilde;
  doctored.push_back({1000.001, 1000.0, 1001.0, 2.0, -1.0, 1e-3});
  const VerificationReport v = verify_theorem1(doctored, 1.0);
  CHECK_FALSE(v.pass);
  CHECK(v.statistics.at("violations") == 1.0);
  REQUIRE(v.notes.size() == 1);
  CHECK(v.notes[0].find("1000.001") != std::string::npos);
  CHECK_THROWS_AS(verify_theorem1(tilde, -1.0), DomainError);
}
