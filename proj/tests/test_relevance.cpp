#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "rankeval/relevance.hpp"

using namespace rankeval;

TEST_CASE("quantile follows the (n-1)p+1 interpolation rule") {
  const std::vector<double> y{1, 2, 3, 4, 100};
  CHECK(quantile(y, 0.5) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(quantile(y, 0.75) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(quantile(y, 0.25) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(quantile({10, 20}, 0.5) == doctest::Approx(15.0).epsilon(1e-15));
  CHECK(quantile({42}, 0.0) == 42.0);
  CHECK(quantile({42}, 1.0) == 42.0);
  // p = 0 and p = 1 hit the extreme order statistics.
  CHECK(quantile(y, 0.0) == 1.0);
  CHECK(quantile(y, 1.0) == 100.0);
}

TEST_CASE("quantile rejects bad input") {
  CHECK_THROWS_AS(quantile({}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(quantile({1, 2}, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(quantile({1, 2}, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(quantile({1, std::nan("")}, 0.5), std::invalid_argument);
}

TEST_CASE("summarize_scores applies the boxplot rule") {
  const auto s = summarize_scores({1, 2, 3, 4, 100});
  CHECK(s.min == 1.0);
  CHECK(s.q1 == 2.0);
  CHECK(s.median == 3.0);
  CHECK(s.q3 == 4.0);
  CHECK(s.max == 100.0);
  CHECK(s.iqr == 2.0);
  CHECK(s.upper_whisker == 7.0);
  CHECK(s.has_outliers);

  const auto t = summarize_scores({1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(t.q1 == 3.0);
  CHECK(t.median == 5.0);
  CHECK(t.q3 == 7.0);
  CHECK(t.upper_whisker == 13.0);
  CHECK_FALSE(t.has_outliers);
}

TEST_CASE("alpha measures how extreme the maximum is") {
  const auto s = summarize_scores({1, 2, 3, 4, 100});
  CHECK(alpha(s) == doctest::Approx(93.0 / 99.0).epsilon(1e-15));

  // max == whisker is the boundary: no outlier, so no alpha.
  ScoreSummary boundary;
  boundary.min = 0;
  boundary.q1 = 10;
  boundary.median = 20;
  boundary.q3 = 30;
  boundary.iqr = 20;
  boundary.upper_whisker = 60;
  boundary.max = 60;
  boundary.has_outliers = false;
  CHECK_THROWS_AS(alpha(boundary), std::domain_error);

  ScoreSummary flat;
  flat.min = flat.q1 = flat.median = flat.q3 = flat.max = 5;
  flat.upper_whisker = 5;
  CHECK_THROWS_AS(alpha(flat), std::domain_error);

  // whisker at half the range: alpha = 0.5.
  ScoreSummary mid;
  mid.min = 0;
  mid.max = 100;
  mid.upper_whisker = 50;
  mid.has_outliers = true;
  CHECK(alpha(mid) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("control points: no outliers gives min/median/max") {
  const auto pts = build_control_points({1, 2, 3, 4, 5, 6, 7, 8, 9});
  REQUIRE(pts.has_value());
  REQUIRE(pts->size() == 3);
  CHECK((*pts)[0].x == 1.0);
  CHECK((*pts)[0].v == 0.0);
  CHECK((*pts)[1].x == 5.0);
  CHECK((*pts)[1].v == 0.0);
  CHECK((*pts)[2].x == 9.0);
  CHECK((*pts)[2].v == 1.0);
}

TEST_CASE("control points: outlier inserts the whisker knot") {
  const auto pts = build_control_points({1, 2, 3, 4, 100});
  REQUIRE(pts.has_value());
  REQUIRE(pts->size() == 4);
  CHECK((*pts)[0].x == 1.0);
  CHECK((*pts)[1].x == 3.0);
  CHECK((*pts)[2].x == 7.0);
  CHECK((*pts)[2].v == doctest::Approx(1.0 - 93.0 / 99.0).epsilon(1e-12));
  CHECK((*pts)[3].x == 100.0);
  CHECK((*pts)[3].v == 1.0);
}

TEST_CASE("control points: degenerate and collapsed cases") {
  CHECK_FALSE(build_control_points({5, 5, 5}).has_value());
  CHECK_THROWS_AS(build_control_points({}), std::invalid_argument);

  // min == median collapses the first knot.
  const auto pts = build_control_points({3, 3, 3, 10});
  REQUIRE(pts.has_value());
  CHECK(pts->front().x == 3.0);
  CHECK(pts->front().v == 0.0);
  for (std::size_t i = 1; i < pts->size(); ++i) {
    CHECK((*pts)[i].x > (*pts)[i - 1].x);
  }
  CHECK(pts->back().x == 10.0);
  CHECK(pts->back().v == 1.0);
}

TEST_CASE("fit_pchip: zero secant forces a flat knot") {
  const auto f = fit_pchip({{0, 0}, {1, 0}, {2, 1}});
  REQUIRE(f.derivatives.size() == 3);
  CHECK(f.derivatives[0] == 0.0);
  CHECK(f.derivatives[1] == 0.0);  // adjacent secants 0 and 1
  CHECK(f.derivatives[2] >= 0.0);
}

TEST_CASE("fit_pchip: two points reduce to the secant line") {
  const auto f = fit_pchip({{0, 0}, {1, 1}});
  CHECK(f.derivatives[0] == 1.0);
  CHECK(f.derivatives[1] == 1.0);
  CHECK(eval_phi(f, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(eval_phi(f, 0.25) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("fit_pchip: derivative values on the outlier example") {
  const auto pts = build_control_points({1, 2, 3, 4, 100});
  REQUIRE(pts.has_value());
  const auto f = fit_pchip(*pts);
  REQUIRE(f.derivatives.size() == 4);
  CHECK(f.derivatives[0] == 0.0);  // flat left edge (first secant is 0)
  CHECK(f.derivatives[1] == 0.0);
  // Interior weighted harmonic mean: secants 1/66 and 1/99, widths 4 and 93
  // give (w1 + w2) / (w1*66 + w2*99) = 291/22539.
  CHECK(f.derivatives[2] ==
        doctest::Approx(291.0 / 22539.0).epsilon(1e-12));
  CHECK(f.derivatives[3] ==
        doctest::Approx((190.0 / 99.0 - 93.0 / 66.0) / 97.0).epsilon(1e-12));
}

TEST_CASE("fit_pchip rejects bad knot lists") {
  CHECK_THROWS_AS(fit_pchip({{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_pchip({{0, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_pchip({{1, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_pchip({{0, 1}, {1, 0}}), std::invalid_argument);  // decreasing v
  CHECK_THROWS_AS(fit_pchip({{0, 0}, {1, 2}}), std::invalid_argument);  // v > 1
}

TEST_CASE("eval_phi: constraints and clamping") {
  const std::vector<double> y{1, 2, 3, 4, 100};
  const auto f = fit_relevance_function(y);
  CHECK(eval_phi(f, 3.0) == 0.0);    // median
  CHECK(eval_phi(f, 100.0) == 1.0);  // max
  CHECK(eval_phi(f, 7.0) ==
        doctest::Approx(1.0 - 93.0 / 99.0).epsilon(1e-12));
  CHECK(eval_phi(f, 2.0) == 0.0);
  CHECK(eval_phi(f, -50.0) == 0.0);   // below domain
  CHECK(eval_phi(f, 1000.0) == 1.0);  // above domain
  CHECK_THROWS_AS(eval_phi(f, std::nan("")), std::invalid_argument);

  const auto g = fit_relevance_function({5, 5, 5});
  CHECK(g.degenerate);
  CHECK(eval_phi(g, 5.0) == 0.0);
  CHECK(eval_phi(g, 123.0) == 0.0);
}

TEST_CASE("phi properties over random samples") {
  std::mt19937_64 rng(20260809);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 98);
    std::vector<double> scores(n);
    const bool heavy_tail = trial % 2 == 0;
    for (auto& s : scores) {
      s = heavy_tail ? std::exp(8.0 * unit(rng)) : 1.0 + 999.0 * unit(rng);
    }
    const auto f = fit_relevance_function(scores);
    const auto summary = summarize_scores(scores);
    if (f.degenerate) continue;

    // Knot interpolation and non-negative derivatives.
    for (std::size_t i = 0; i < f.knots.size(); ++i) {
      CHECK(std::abs(eval_phi(f, f.knots[i].x) - f.knots[i].v) <= 1e-12);
      CHECK(f.derivatives[i] >= 0.0);
    }
    CHECK(f.knots.front().v == 0.0);
    CHECK(f.knots.back().v == 1.0);

    // Monotone and bounded on a dense grid; zero at or below the median.
    const double span = summary.max - summary.min;
    double prev = -1.0;
    bool grid_ok = true;
    for (int i = 0; i <= 2000 && grid_ok; ++i) {
      const double y = summary.min + span * i / 2000.0;
      const double v = eval_phi(f, y);
      grid_ok = v >= 0.0 && v <= 1.0 && v >= prev &&
                (y > summary.median || v == 0.0);
      prev = v;
    }
    CHECK(grid_ok);
    CHECK(eval_phi(f, summary.max) == 1.0);

    // Whisker knot, when present, sits strictly inside (0, 1).
    if (f.knots.size() == 4) {
      CHECK(f.knots[2].v > 0.0);
      CHECK(f.knots[2].v < 1.0);
      CHECK(f.knots[2].v < f.knots[3].v);
    }
  }
}

TEST_CASE("positive-affine invariance of the fitted function") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 50);
    std::vector<double> scores(n);
    for (auto& s : scores) s = std::exp(6.0 * unit(rng));
    const double a = 0.1 + 10.0 * unit(rng);
    const double b = -50.0 + 100.0 * unit(rng);
    std::vector<double> mapped(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) mapped[i] = a * scores[i] + b;

    const auto f = fit_relevance_function(scores);
    const auto g = fit_relevance_function(mapped);
    CHECK(f.degenerate == g.degenerate);
    if (f.degenerate) continue;
    const auto s = summarize_scores(scores);
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double y = s.min + (s.max - s.min) * i / 200.0;
      worst = std::max(worst, std::abs(eval_phi(f, y) - eval_phi(g, a * y + b)));
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("segment evaluation matches the Hermite-basis oracle") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 60);
    std::vector<double> scores(n);
    for (auto& s : scores) s = 1.0 + 999.0 * std::pow(unit(rng), 3.0);
    const auto f = fit_relevance_function(scores);
    if (f.degenerate) continue;
    double worst = 0.0;
    for (int i = 0; i <= 500; ++i) {
      const double y =
          f.domain_min + (f.domain_max - f.domain_min) * i / 500.0;
      worst = std::max(
          worst, std::abs(eval_phi(f, y) - rankeval::testing::phi_oracle(f, y)));
    }
    CHECK(worst <= 1e-12);
  }
}
