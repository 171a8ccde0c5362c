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

#ifndef RANKEVAL_METRICS_HPP_
#define RANKEVAL_METRICS_HPP_

#include <map>
#include <string>
#include <vector>

#include "rankeval/relevance.hpp"

namespace rankeval {

enum class GainKind { linear, exponential };
enum class DiscountKind { logarithmic, zipfian };
enum class RelevanceSource { adhoc, phi };

// An item identifier paired with its ground-truth score.
struct ScoredItem {
  std::string item_id;
  double score = 0.0;
};

// Rank-bucket relevance levels: items ranked (by descending score) within
// ranks[0] get levels[0], within ranks[1] get levels[1], ..., everything
// past the last threshold gets levels.back(). Defaults reproduce the
// top-10 -> 3, top-25 -> 2, top-50 -> 1, rest -> 0 assignment.
struct AdhocBuckets {
  std::vector<int> ranks{10, 25, 50};
  std::vector<double> levels{3.0, 2.0, 1.0, 0.0};
};

struct MetricConfig {
  GainKind gain = GainKind::exponential;
  DiscountKind discount = DiscountKind::logarithmic;
  int k = 10;
  RelevanceSource relevance = RelevanceSource::adhoc;
  AdhocBuckets buckets;
};

// A system-proposed ordering of a candidate set. `scores` holds the
// ground-truth score of every candidate and covers every id in
// system_order; system_order has no duplicates.
struct Ranking {
  std::string ranking_id;
  std::vector<std::string> system_order;  // position 1 first
  std::map<std::string, double> scores;
};

// Per-item relevance judgments (v >= 0; in [0, 1] when phi-sourced).
using RelevanceVector = std::map<std::string, double>;

// nDCG value plus the all-zero-gain flag. A candidate set whose ideal DCG
// is zero has nothing to mis-rank, so it evaluates to 1.0 with
// degenerate = true instead of poisoning batch aggregates with NaN.
struct NdcgResult {
  double value = 0.0;
  bool degenerate = false;
};

void validate(const AdhocBuckets& buckets);
void validate(const MetricConfig& config);
void validate(const Ranking& ranking);

// Positional discounts. Both throw std::invalid_argument for position < 1.
double discount_logarithmic(int position);  // 1 / log2(position + 1)
double discount_zipfian(int position);      // 1 / position

// Gain functions of a relevance judgment. Both throw std::invalid_argument
// for negative or non-finite v.
double gain_exponential(double v);  // 2^v - 1
double gain_linear(double v);       // v

double apply_gain(GainKind kind, double v);
double apply_discount(DiscountKind kind, int position);

// Ranks items by descending score (ties broken by ascending item_id) and
// assigns the bucket levels. Throws std::invalid_argument on empty input
// or invalid bucket parameters.
RelevanceVector adhoc_relevance(const std::map<std::string, double>& scores,
                                const AdhocBuckets& buckets = {});

// Sum of discount(i) * gains[i] over the first min(k, n) positions, summed
// in strictly ascending position order. Throws on negative or non-finite
// gains.
double dcg(const std::vector<double>& gains_in_rank_order,
           DiscountKind discount, int k);

// DCG@k of the system order divided by DCG@k of the ideal order (candidate
// gains sorted descending). `relevance` must cover every item of the
// ranking.
NdcgResult ndcg(const Ranking& ranking, const RelevanceVector& relevance,
                const MetricConfig& config);

// Derives the relevance vector from the configured source (ad-hoc buckets
// over the candidate scores, or phi applied to each score) and returns
// nDCG@k. `phi` is required when config.relevance == RelevanceSource::phi.
NdcgResult evaluate_ranking(const Ranking& ranking, const MetricConfig& config,
                            const RelevanceFunction* phi = nullptr);

}  // namespace rankeval

#endif  // RANKEVAL_METRICS_HPP_
