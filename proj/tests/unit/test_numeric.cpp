#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "moserlab/numeric.hpp"

using namespace moserlab;

TEST_CASE("compensated sum recovers cancelled terms") {
  CompensatedSum s;
  s.add(1.0);
  s.add(1e100);
  s.add(1.0);
  s.add(-1e100);
  CHECK(s.value() == 2.0);
}

TEST_CASE("blocked sum") {
  CHECK(blocked_sum(0, [](std::size_t) { return 1.0; }) == 0.0);
  CHECK(blocked_sum(10000, [](std::size_t) { return 0.1; }) == doctest::Approx(1000.0).epsilon(1e-15));
  const double h = blocked_sum(100000, [](std::size_t i) { return 1.0 / ((i + 1.0) * (i + 1.0)); });
  CHECK(std::abs(h - (M_PI * M_PI / 6.0 - 1.0 / 100000.5)) < 1e-12);
}

TEST_CASE("quantile") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0, 5.0};
  CHECK(quantile(v, 0.0) == 1.0);
  CHECK(quantile(v, 0.5) == 3.0);
  CHECK(quantile(v, 1.0) == 5.0);
  CHECK(quantile(v, 0.95) == doctest::Approx(4.8));
  const std::vector<double> two{0.0, 10.0};
  CHECK(quantile(two, 0.25) == doctest::Approx(2.5));
}

TEST_CASE("uniform stream") {
  UniformStream a(7), b(7), c(8);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const double x = a.next();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    CHECK(x == b.next());
    if (x != c.next()) differs = true;
  }
  CHECK(differs);
  double mean = 0.0;
  UniformStream d(0);
  for (int i = 0; i < 100000; ++i) mean += d.next();
  CHECK(std::abs(mean / 100000 - 0.5) < 0.01);
}

TEST_CASE("brent") {
  const auto f = [](double x) { return std::cos(x) - x; };
  const double r = brent_root(f, 0.0, 1.0, f(0.0), f(1.0), 1e-14);
  CHECK(std::abs(r - 0.7390851332151607) < 1e-13);
  const auto g = [](double x) { return x * x * x - 2.0; };
  CHECK(std::abs(brent_root(g, 0.0, 2.0, g(0.0), g(2.0), 1e-13) - std::cbrt(2.0)) < 1e-12);
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> hits(5000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
  for (auto& h : hits) CHECK(h.load() == 1);
  parallel_for(0, [](std::size_t) { FAIL("no calls expected"); });
}

TEST_CASE("worker count honours the environment") {
  ::setenv("MOSERLAB_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  ::setenv("MOSERLAB_THREADS", "3", 1);
  CHECK(worker_count() <= 3);
  ::unsetenv("MOSERLAB_THREADS");
  CHECK(worker_count() >= 1);
}
