#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "rankeval/synth.hpp"

using namespace rankeval;
using rankeval::testing::scenario1_closed_form;

TEST_CASE("uniform_real stream is pinned") {
  // mt19937_64 output mapped through the top-53-bit rule; these anchors
  // guard the seed-dependent regression values below against silent RNG
  // changes.
  std::mt19937_64 rng(0);
  CHECK(uniform_real(rng, 0.0, 1.0) ==
        doctest::Approx(0.15979336337046079).epsilon(1e-15));
  CHECK(uniform_real(rng, 0.0, 1.0) ==
        doctest::Approx(0.99214520962982877).epsilon(1e-15));
  CHECK(uniform_real(rng, 0.0, 1.0) ==
        doctest::Approx(0.039569025844865657).epsilon(1e-15));

  std::mt19937_64 rng42(42);
  const auto scores = gen_balanced(3, rng42);
  CHECK(scores[0] == doctest::Approx(755.40037742158438).epsilon(1e-15));
  CHECK(scores[1] == doctest::Approx(639.39236246084272).epsilon(1e-15));
  CHECK(scores[2] == doctest::Approx(752.39305554727855).epsilon(1e-15));
}

TEST_CASE("gen_balanced draws inside [1, 1000) deterministically") {
  std::mt19937_64 a(7), b(7);
  const auto first = gen_balanced(500, a);
  const auto second = gen_balanced(500, b);
  CHECK(first == second);
  CHECK(std::all_of(first.begin(), first.end(),
                    [](double s) { return s >= 1.0 && s < 1000.0; }));
  CHECK_THROWS_AS(gen_balanced(0, a), std::invalid_argument);

  // Sample mean of 1e5 draws within the CLT band around 500.5.
  std::mt19937_64 c(11);
  const auto big = gen_balanced(100000, c);
  double mean = 0.0;
  for (double s : big) mean += s;
  mean /= static_cast<double>(big.size());
  CHECK(std::abs(mean - 500.5) < 10.0);
}

TEST_CASE("gen_imbalanced splits 90/10 exactly") {
  std::mt19937_64 a(13), b(13);
  const auto first = gen_imbalanced(100, a);
  const auto second = gen_imbalanced(100, b);
  CHECK(first == second);
  const auto low = static_cast<int>(std::count_if(
      first.begin(), first.end(), [](double s) { return s < 100.0; }));
  CHECK(low == 90);
  CHECK(std::all_of(first.begin(), first.end(),
                    [](double s) { return s >= 1.0 && s < 1000.0; }));

  std::mt19937_64 c(13);
  const auto small = gen_imbalanced(10, c);
  CHECK(std::count_if(small.begin(), small.end(),
                      [](double s) { return s < 100.0; }) == 9);
  CHECK_THROWS_AS(gen_imbalanced(-1, c), std::invalid_argument);
}

TEST_CASE("imbalanced samples nearly always carry outliers") {
  // Brute-forced over the same substreams run_experiment uses: every one
  // of the 1000 master-seed-42 samples trips the whisker rule.
  int outliers = 0;
  for (int i = 0; i < 1000; ++i) {
    std::mt19937_64 rng(42ULL ^ static_cast<std::uint64_t>(i));
    if (summarize_scores(gen_imbalanced(100, rng)).has_outliers) ++outliers;
  }
  CHECK(outliers == 1000);
}

TEST_CASE("scenario_swap") {
  CHECK(scenario_swap({"a", "b", "c"}, 1, 2) ==
        std::vector<std::string>{"b", "a", "c"});
  const std::vector<std::string> order{"a", "b", "c", "d", "e"};
  CHECK(scenario_swap(scenario_swap(order, 2, 4), 2, 4) == order);
  CHECK_THROWS_AS(scenario_swap(order, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(scenario_swap(order, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(scenario_swap(order, 1, 6), std::invalid_argument);
}

TEST_CASE("scenario_invert") {
  CHECK(scenario_invert({"a", "b", "c", "d"}, 3) ==
        std::vector<std::string>{"c", "b", "a", "d"});
  CHECK(scenario_invert({"a", "b"}, 1) == std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(scenario_invert({"a"}, 2), std::invalid_argument);
  CHECK_THROWS_AS(scenario_invert({"a"}, 0), std::invalid_argument);
}

namespace {

ExperimentConfig config_for(Scenario scenario, ScoreDistribution distribution,
                            int samples, std::uint64_t seed = 42) {
  ExperimentConfig config;
  config.scenario = scenario;
  config.distribution = distribution;
  config.samples = samples;
  config.seed = seed;
  return config;
}

}  // namespace

TEST_CASE("run_experiment: scenario 1 ad-hoc constant") {
  const auto result = run_experiment(
      config_for(SwapScenario{10, 11}, ScoreDistribution::balanced, 20));
  CHECK(result.adhoc_value ==
        doctest::Approx(scenario1_closed_form()).epsilon(1e-14));
  CHECK(std::abs(result.adhoc_value - 0.963636) < 1e-5);

  // The constant does not depend on the drawn scores.
  const auto other = run_experiment(
      config_for(SwapScenario{10, 11}, ScoreDistribution::imbalanced, 20, 7));
  CHECK(other.adhoc_value == result.adhoc_value);
}

TEST_CASE("run_experiment: scenario 2 ad-hoc value is exactly 1") {
  const auto result = run_experiment(
      config_for(InvertScenario{}, ScoreDistribution::imbalanced, 20));
  CHECK(result.adhoc_value == 1.0);
}

TEST_CASE("run_experiment is bitwise reproducible") {
  const auto config =
      config_for(InvertScenario{}, ScoreDistribution::imbalanced, 50);
  const auto first = run_experiment(config);
  const auto second = run_experiment(config);
  CHECK(first.adhoc_value == second.adhoc_value);
  CHECK(first.phi_values == second.phi_values);

  // Seed-dependent regression anchors (master seed 42, sample 0).
  const auto s1 = run_experiment(
      config_for(SwapScenario{10, 11}, ScoreDistribution::balanced, 1));
  CHECK(s1.phi_values[0] ==
        doctest::Approx(0.99900557779919663).epsilon(1e-12));
  const auto s2 = run_experiment(
      config_for(InvertScenario{}, ScoreDistribution::imbalanced, 1));
  CHECK(s2.phi_values[0] ==
        doctest::Approx(0.68124522368039964).epsilon(1e-12));
}

TEST_CASE("run_experiment: phi summary is consistent with its values") {
  const auto result = run_experiment(
      config_for(SwapScenario{10, 11}, ScoreDistribution::imbalanced, 101));
  REQUIRE(result.phi_values.size() == 101);
  for (double v : result.phi_values) {
    REQUIRE(v >= 0.0);
    REQUIRE(v <= 1.0);
  }
  CHECK(result.phi_summary.min == quantile(result.phi_values, 0.0));
  CHECK(result.phi_summary.q1 == quantile(result.phi_values, 0.25));
  CHECK(result.phi_summary.median == quantile(result.phi_values, 0.5));
  CHECK(result.phi_summary.q3 == quantile(result.phi_values, 0.75));
  CHECK(result.phi_summary.max == quantile(result.phi_values, 1.0));
}

TEST_CASE("run_experiment: direction of effect per scenario") {
  const int samples = 200;

  // Scenario 1: the fixed ad-hoc penalty overstates the tiny score gap
  // between ranks 10 and 11, so most phi values sit above the constant.
  for (auto distribution :
       {ScoreDistribution::balanced, ScoreDistribution::imbalanced}) {
    const auto result =
        run_experiment(config_for(SwapScenario{10, 11}, distribution, samples));
    const auto above = std::count_if(
        result.phi_values.begin(), result.phi_values.end(),
        [&](double v) { return v > result.adhoc_value; });
    CHECK(above > samples / 2);
  }

  // Scenario 2: ad-hoc sees nothing while phi penalizes every inversion.
  const auto balanced = run_experiment(
      config_for(InvertScenario{}, ScoreDistribution::balanced, samples));
  const auto imbalanced = run_experiment(
      config_for(InvertScenario{}, ScoreDistribution::imbalanced, samples));
  CHECK(std::all_of(balanced.phi_values.begin(), balanced.phi_values.end(),
                    [](double v) { return v < 1.0; }));
  CHECK(std::all_of(imbalanced.phi_values.begin(), imbalanced.phi_values.end(),
                    [](double v) { return v < 1.0; }));
  CHECK(imbalanced.phi_summary.median < balanced.phi_summary.median);

  // Inversions spread phi much wider than the single swap.
  const auto swap_balanced = run_experiment(
      config_for(SwapScenario{10, 11}, ScoreDistribution::balanced, samples));
  CHECK(balanced.phi_summary.q3 - balanced.phi_summary.q1 >
        swap_balanced.phi_summary.q3 - swap_balanced.phi_summary.q1);
}

TEST_CASE("run_experiment validates its configuration") {
  ExperimentConfig config;
  config.k = 0;
  CHECK_THROWS_AS(run_experiment(config), std::invalid_argument);
  config.k = 200;  // > n
  CHECK_THROWS_AS(run_experiment(config), std::invalid_argument);
  config.k = 10;
  config.samples = 0;
  CHECK_THROWS_AS(run_experiment(config), std::invalid_argument);
  config.samples = 1;
  config.scenario = SwapScenario{10, 101};  // j > n
  CHECK_THROWS_AS(run_experiment(config), std::invalid_argument);
}
