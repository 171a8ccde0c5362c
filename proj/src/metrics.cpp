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

#include "rankeval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>

namespace rankeval {

void validate(const AdhocBuckets& buckets) {
  if (buckets.levels.size() != buckets.ranks.size() + 1) {
    throw std::invalid_argument(
        "buckets: need one more level than rank thresholds");
  }
  for (std::size_t i = 0; i < buckets.ranks.size(); ++i) {
    if (buckets.ranks[i] < 1) {
      throw std::invalid_argument("buckets: rank thresholds must be >= 1");
    }
    if (i > 0 && buckets.ranks[i] <= buckets.ranks[i - 1]) {
      throw std::invalid_argument(
          "buckets: rank thresholds must increase strictly");
    }
  }
  for (std::size_t i = 0; i < buckets.levels.size(); ++i) {
    if (!std::isfinite(buckets.levels[i]) || buckets.levels[i] < 0.0) {
      throw std::invalid_argument("buckets: levels must be finite and >= 0");
    }
    if (i > 0 && buckets.levels[i] >= buckets.levels[i - 1]) {
      throw std::invalid_argument("buckets: levels must decrease strictly");
    }
  }
}

void validate(const MetricConfig& config) {
  if (config.k < 1) {
    throw std::invalid_argument("config: k must be >= 1");
  }
  if (config.relevance == RelevanceSource::adhoc) {
    validate(config.buckets);
  }
}

void validate(const Ranking& ranking) {
  std::set<std::string> seen;
  for (const auto& id : ranking.system_order) {
    if (!seen.insert(id).second) {
      throw std::invalid_argument("ranking '" + ranking.ranking_id +
                                  "': duplicate item '" + id + "'");
    }
    auto it = ranking.scores.find(id);
    if (it == ranking.scores.end()) {
      throw std::invalid_argument("ranking '" + ranking.ranking_id +
                                  "': no score for item '" + id + "'");
    }
    if (!std::isfinite(it->second)) {
      throw std::invalid_argument("ranking '" + ranking.ranking_id +
                                  "': non-finite score for item '" + id + "'");
    }
  }
}

double discount_logarithmic(int position) {
  if (position < 1) {
    throw std::invalid_argument("discount: position must be >= 1");
  }
  return 1.0 / std::log2(static_cast<double>(position) + 1.0);
}

double discount_zipfian(int position) {
  if (position < 1) {
    throw std::invalid_argument("discount: position must be >= 1");
  }
  return 1.0 / static_cast<double>(position);
}

double gain_exponential(double v) {
  if (!std::isfinite(v) || v < 0.0) {
    throw std::invalid_argument("gain: relevance must be finite and >= 0");
  }
  return std::exp2(v) - 1.0;
}

double gain_linear(double v) {
  if (!std::isfinite(v) || v < 0.0) {
    throw std::invalid_argument("gain: relevance must be finite and >= 0");
  }
  return v;
}

double apply_gain(GainKind kind, double v) {
  return kind == GainKind::exponential ? gain_exponential(v) : gain_linear(v);
}

double apply_discount(DiscountKind kind, int position) {
  return kind == DiscountKind::logarithmic ? discount_logarithmic(position)
                                           : discount_zipfian(position);
}

RelevanceVector adhoc_relevance(const std::map<std::string, double>& scores,
                                const AdhocBuckets& buckets) {
  if (scores.empty()) {
    throw std::invalid_argument("adhoc_relevance: empty candidate set");
  }
  validate(buckets);

  // Descending score, ties by ascending item_id so bucket boundaries are
  // deterministic.
  std::vector<std::pair<std::string, double>> ranked(scores.begin(),
                                                     scores.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });

  RelevanceVector relevance;
  std::size_t bucket = 0;
  for (std::size_t idx = 0; idx < ranked.size(); ++idx) {
    const int rank = static_cast<int>(idx) + 1;
    while (bucket < buckets.ranks.size() && rank > buckets.ranks[bucket]) {
      ++bucket;
    }
    relevance[ranked[idx].first] = buckets.levels[bucket];
  }
  return relevance;
}

double dcg(const std::vector<double>& gains_in_rank_order,
           DiscountKind discount, int k) {
  if (k < 1) {
    throw std::invalid_argument("dcg: k must be >= 1");
  }
  const std::size_t limit =
      std::min<std::size_t>(gains_in_rank_order.size(),
                            static_cast<std::size_t>(k));
  double sum = 0.0;
  for (std::size_t i = 0; i < limit; ++i) {
    const double g = gains_in_rank_order[i];
    if (!std::isfinite(g) || g < 0.0) {
      throw std::invalid_argument("dcg: gains must be finite and >= 0");
    }
    sum += apply_discount(discount, static_cast<int>(i) + 1) * g;
  }
  return sum;
}

NdcgResult ndcg(const Ranking& ranking, const RelevanceVector& relevance,
                const MetricConfig& config) {
  if (config.k < 1) {
    throw std::invalid_argument("ndcg: k must be >= 1");
  }
  const auto judgment = [&](const std::string& id) {
    auto it = relevance.find(id);
    if (it == relevance.end()) {
      throw std::invalid_argument("ndcg: no relevance judgment for item '" +
                                  id + "'");
    }
    return it->second;
  };

  std::vector<double> system_gains;
  system_gains.reserve(ranking.system_order.size());
  for (const auto& id : ranking.system_order) {
    system_gains.push_back(apply_gain(config.gain, judgment(id)));
  }

  std::vector<double> ideal_gains;
  ideal_gains.reserve(ranking.scores.size());
  for (const auto& [id, score] : ranking.scores) {
    (void)score;
    ideal_gains.push_back(apply_gain(config.gain, judgment(id)));
  }
  std::sort(ideal_gains.begin(), ideal_gains.end(), std::greater<>());

  const double ideal = dcg(ideal_gains, config.discount, config.k);
  if (ideal == 0.0) {
    return {1.0, true};  // nothing to mis-rank
  }
  return {dcg(system_gains, config.discount, config.k) / ideal, false};
}

NdcgResult evaluate_ranking(const Ranking& ranking, const MetricConfig& config,
                            const RelevanceFunction* phi) {
  validate(config);
  validate(ranking);
  if (ranking.scores.empty()) {
    throw std::invalid_argument("evaluate_ranking: empty candidate set");
  }

  RelevanceVector relevance;
  if (config.relevance == RelevanceSource::adhoc) {
    relevance = adhoc_relevance(ranking.scores, config.buckets);
  } else {
    if (phi == nullptr) {
      throw std::invalid_argument(
          "evaluate_ranking: relevance source is phi but no fitted "
          "relevance function was supplied");
    }
    for (const auto& [id, score] : ranking.scores) {
      relevance[id] = eval_phi(*phi, score);
    }
  }
  return ndcg(ranking, relevance, config);
}

}  // namespace rankeval
