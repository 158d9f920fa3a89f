#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "chebbv/cheb.hpp"
#include "helpers.hpp"

using namespace chebbv;

TEST_CASE("chebyshev_points: small cases and ordering") {
  CHECK_THROWS_AS(chebyshev_points(0), std::invalid_argument);
  CHECK_THROWS_AS(chebyshev_points(-3), std::invalid_argument);

  const auto p1 = chebyshev_points(1);
  REQUIRE(p1.size() == 1);
  CHECK(std::abs(p1[0]) < 1e-16);  // cos(pi/2)

  const auto p2 = chebyshev_points(2);
  REQUIRE(p2.size() == 2);
  CHECK(std::abs(p2[0] - 0.70710678118654752) <= 1e-15);
  CHECK(std::abs(p2[1] + 0.70710678118654752) <= 1e-15);

  const auto p4 = chebyshev_points(4);
  CHECK(std::abs(p4[0] - 0.92387953251128676) <= 1e-15);  // cos(pi/8)

  for (int n : {2, 3, 7, 20}) {
    const auto pts = chebyshev_points(n);
    REQUIRE(static_cast<int>(pts.size()) == n);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(pts[i] > -1.0);
      CHECK(pts[i] < 1.0);
      if (i > 0) CHECK(pts[i] < pts[i - 1]);
    }
  }
}

TEST_CASE("chebyshev_points: nodes are roots of T_n") {
  for (int n : {1, 2, 3, 5, 8, 13, 21, 34, 55, 64}) {
    for (double t : chebyshev_points(n)) CHECK(std::abs(eval_basis(n, t)) < 1e-12);
  }
}

TEST_CASE("eval_basis: values, bounds and domain") {
  CHECK(eval_basis(0, 0.37) == 1.0);
  CHECK(std::abs(eval_basis(2, 0.5) + 0.5) <= 1e-15);  // T_2(t) = 2t^2-1

  // Three-term recurrence as the independent route for T_7(0.9).
  double tp = 1.0, tc = 0.9;
  for (int j = 2; j <= 7; ++j) {
    const double tn = 2.0 * 0.9 * tc - tp;
    tp = tc;
    tc = tn;
  }
  CHECK(std::abs(eval_basis(7, 0.9) - tc) <= 1e-12);

  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int j = trial;
    const double t = ud(testutil::rng());
    CHECK(std::abs(eval_basis(j, t)) <= 1.0 + 1e-15);
  }

  CHECK(eval_basis(5, 1.0 + 5e-13) == eval_basis(5, 1.0));
  CHECK(eval_basis(5, -1.0 - 5e-13) == eval_basis(5, -1.0));
  CHECK_THROWS_AS(eval_basis(3, 1.0 + 1e-9), std::domain_error);
  CHECK_THROWS_AS(eval_basis(3, -1.5), std::domain_error);
  CHECK_THROWS_AS(eval_basis(-1, 0.0), std::invalid_argument);
}

TEST_CASE("interval maps: endpoints, midpoint, inverse, round trip") {
  const Interval iv(0.0, 4.0);
  CHECK(map_interval(iv, -1.0) == 0.0);
  CHECK(map_interval(iv, 1.0) == 4.0);
  CHECK(map_interval(iv, 0.0) == 2.0);
  CHECK(std::abs(map_reference(iv, 1.0) + 0.5) <= 1e-16);
  CHECK(map_reference(iv, 0.0) == -1.0);
  CHECK(map_reference(iv, 4.0) == 1.0);

  CHECK_THROWS_AS(map_interval(iv, 1.5), std::domain_error);
  CHECK_THROWS_AS(map_reference(iv, -0.5), std::domain_error);
  CHECK_THROWS_AS(map_reference(iv, 4.1), std::domain_error);
  CHECK_THROWS_AS(Interval(2.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(Interval(3.0, 1.0), std::invalid_argument);

  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  for (const Interval test_iv : {Interval(0.0, 4.0), Interval(-1.0, 1.0), Interval(-5.25, -1.5)}) {
    for (int i = 0; i < 500; ++i) {
      const double t = ud(testutil::rng());
      CHECK(std::abs(map_reference(test_iv, map_interval(test_iv, t)) - t) <= 1e-14);
    }
  }
}

TEST_CASE("eval_series: constants, T_1, validation") {
  const ChebSeries constant(Interval(-3.0, 7.0), {2.0});
  CHECK(constant(-3.0) == 1.0);
  CHECK(constant(0.25) == 1.0);
  CHECK(constant(7.0) == 1.0);

  const ChebSeries linear(Interval(-1.0, 1.0), {0.0, 1.0});
  CHECK(std::abs(linear(0.7) - 0.7) <= 1e-16);
  CHECK(linear(-1.0) == -1.0);

  CHECK_THROWS_AS(eval_series(linear, 1.5), std::domain_error);
  CHECK_THROWS_AS(ChebSeries(Interval(0.0, 1.0), {}), std::invalid_argument);
  CHECK_THROWS_AS(ChebSeries(Interval(0.0, 1.0), {1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("eval_series: Clenshaw agrees with direct primed summation") {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  const Interval iv(-2.0, 5.0);

  std::vector<double> c(12);
  double abs_sum = 0.0;
  for (double& v : c) {
    v = coeff(testutil::rng());
    abs_sum += std::abs(v);
  }
  const ChebSeries s(iv, c);
  const double limit = 10.0 * s.degree() * std::numeric_limits<double>::epsilon() * abs_sum;

  for (int i = 0; i < 100; ++i) {
    const double x = map_interval(iv, ud(testutil::rng()));
    const double t = map_reference(iv, x);
    double direct = 0.5 * c[0];
    for (int j = 1; j <= s.degree(); ++j) direct += c[static_cast<std::size_t>(j)] * std::cos(j * std::acos(t));
    CHECK(std::abs(s(x) - direct) <= std::max(limit, 1e-12));
  }
}
