/*
 * Copyright 2026 The rankeval authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RANKEVAL_SYNTH_HPP_
#define RANKEVAL_SYNTH_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "rankeval/metrics.hpp"
#include "rankeval/relevance.hpp"

namespace rankeval {

enum class ScoreDistribution { balanced, imbalanced };

// Exchange the items at 1-based positions i and j (i < j).
struct SwapScenario {
  int i = 10;
  int j = 11;
};

// Reverse the first k positions of the ideal order (k = the cut-off).
struct InvertScenario {};

using Scenario = std::variant<SwapScenario, InvertScenario>;

struct ExperimentConfig {
  int n = 100;        // candidate-set size per sample
  int k = 10;         // nDCG cut-off
  int samples = 1000; // repetitions
  ScoreDistribution distribution = ScoreDistribution::balanced;
  Scenario scenario = SwapScenario{};
  std::uint64_t seed = 0;
  MetricConfig metric;  // gain, discount and buckets; k is taken from above
};

// Per-sample metric pairs: the ad-hoc value is constant across samples
// (bucket relevance depends only on ranks), the phi value varies with the
// drawn scores.
struct ExperimentResult {
  double adhoc_value = 0.0;
  std::vector<double> phi_values;  // one per sample, in sample order
  ScoreSummary phi_summary;
};

// Uniform draw on [lo, hi) from the top 53 bits of the engine output.
// The mapping is part of the reproducibility contract: identical seeds
// produce identical scores on every platform.
double uniform_real(std::mt19937_64& rng, double lo, double hi);

// n scores uniform on [1, 1000).
std::vector<double> gen_balanced(int n, std::mt19937_64& rng);

// round(0.9*n) scores uniform on [1, 100) and the rest uniform on
// [100, 1000), shuffled.
std::vector<double> gen_imbalanced(int n, std::mt19937_64& rng);

// Ordering-error scenarios on an ideal order (1-based positions).
std::vector<std::string> scenario_swap(std::vector<std::string> ideal_order,
                                       int i, int j);
std::vector<std::string> scenario_invert(std::vector<std::string> ideal_order,
                                         int k);

// For each sample: draw scores, build the ideal ranking (descending score),
// apply the scenario, and evaluate ad-hoc nDCG@k and nDCG_phi@k (phi fitted
// on that sample's scores). Sample s uses the substream seeded with
// config.seed ^ s, so results are bitwise reproducible and independent of
// evaluation order.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace rankeval

#endif  // RANKEVAL_SYNTH_HPP_
