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

#include "rankeval/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace rankeval {

namespace {

// [0, 1) from the top 53 bits, so the value is exactly representable and
// the mapping is identical on every platform.
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::string> make_item_ids(int n) {
  int width = 1;
  for (int v = n; v >= 10; v /= 10) ++width;
  std::vector<std::string> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::string digits = std::to_string(i + 1);
    ids[static_cast<std::size_t>(i)] =
        "i" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') +
        digits;
  }
  return ids;
}

}  // namespace

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

std::vector<double> gen_balanced(int n, std::mt19937_64& rng) {
  if (n < 1) {
    throw std::invalid_argument("gen_balanced: n must be >= 1");
  }
  std::vector<double> scores(static_cast<std::size_t>(n));
  for (auto& s : scores) s = uniform_real(rng, 1.0, 1000.0);
  return scores;
}

std::vector<double> gen_imbalanced(int n, std::mt19937_64& rng) {
  if (n < 1) {
    throw std::invalid_argument("gen_imbalanced: n must be >= 1");
  }
  const int n_low = static_cast<int>(std::lround(0.9 * n));
  std::vector<double> scores;
  scores.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n_low; ++i) scores.push_back(uniform_real(rng, 1.0, 100.0));
  for (int i = n_low; i < n; ++i) {
    scores.push_back(uniform_real(rng, 100.0, 1000.0));
  }
  // Fisher-Yates with engine output directly; the modulo bias is
  // immaterial here and keeps the stream platform-independent.
  for (std::size_t i = scores.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(scores[i], scores[j]);
  }
  return scores;
}

std::vector<std::string> scenario_swap(std::vector<std::string> ideal_order,
                                       int i, int j) {
  const int m = static_cast<int>(ideal_order.size());
  if (i < 1 || j > m || i >= j) {
    throw std::invalid_argument("scenario_swap: need 1 <= i < j <= size");
  }
  std::swap(ideal_order[static_cast<std::size_t>(i - 1)],
            ideal_order[static_cast<std::size_t>(j - 1)]);
  return ideal_order;
}

std::vector<std::string> scenario_invert(std::vector<std::string> ideal_order,
                                         int k) {
  const int m = static_cast<int>(ideal_order.size());
  if (k < 1 || k > m) {
    throw std::invalid_argument("scenario_invert: need 1 <= k <= size");
  }
  std::reverse(ideal_order.begin(), ideal_order.begin() + k);
  return ideal_order;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.n < 1) {
    throw std::invalid_argument("run_experiment: n must be >= 1");
  }
  if (config.k < 1 || config.k > config.n) {
    throw std::invalid_argument("run_experiment: need 1 <= k <= n");
  }
  if (config.samples < 1) {
    throw std::invalid_argument("run_experiment: samples must be >= 1");
  }
  if (const auto* swap = std::get_if<SwapScenario>(&config.scenario)) {
    if (swap->i < 1 || swap->j > config.n || swap->i >= swap->j) {
      throw std::invalid_argument(
          "run_experiment: swap positions must satisfy 1 <= i < j <= n");
    }
  }
  validate(config.metric.buckets);

  const auto ids = make_item_ids(config.n);

  ExperimentResult result;
  result.phi_values.reserve(static_cast<std::size_t>(config.samples));

  for (int sample = 0; sample < config.samples; ++sample) {
    std::mt19937_64 rng(config.seed ^ static_cast<std::uint64_t>(sample));
    const std::vector<double> scores =
        config.distribution == ScoreDistribution::balanced
            ? gen_balanced(config.n, rng)
            : gen_imbalanced(config.n, rng);

    // Ideal order: descending score, ties by ascending id.
    std::vector<std::size_t> index(scores.size());
    for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
    std::sort(index.begin(), index.end(), [&](std::size_t a, std::size_t b) {
      if (scores[a] != scores[b]) return scores[a] > scores[b];
      return ids[a] < ids[b];
    });
    std::vector<std::string> ideal_order(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
      ideal_order[i] = ids[index[i]];
    }

    Ranking ranking;
    ranking.ranking_id = "sample_" + std::to_string(sample);
    if (std::holds_alternative<SwapScenario>(config.scenario)) {
      const auto& swap = std::get<SwapScenario>(config.scenario);
      ranking.system_order =
          scenario_swap(std::move(ideal_order), swap.i, swap.j);
    } else {
      ranking.system_order = scenario_invert(std::move(ideal_order), config.k);
    }
    for (std::size_t i = 0; i < scores.size(); ++i) {
      ranking.scores[ids[i]] = scores[i];
    }

    MetricConfig metric = config.metric;
    metric.k = config.k;

    metric.relevance = RelevanceSource::adhoc;
    const double adhoc = evaluate_ranking(ranking, metric).value;
    if (sample == 0) result.adhoc_value = adhoc;

    const RelevanceFunction phi = fit_relevance_function(scores);
    metric.relevance = RelevanceSource::phi;
    result.phi_values.push_back(evaluate_ranking(ranking, metric, &phi).value);
  }

  result.phi_summary = summarize_scores(result.phi_values);
  return result;
}

}  // namespace rankeval
