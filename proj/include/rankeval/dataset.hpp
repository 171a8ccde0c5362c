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

#ifndef RANKEVAL_DATASET_HPP_
#define RANKEVAL_DATASET_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankeval/metrics.hpp"

namespace rankeval {

// Malformed input line (wrong field count, unparseable number, ...).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Structurally valid input that violates a ranking invariant (duplicate or
// non-contiguous positions, duplicate items).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads the `ranking_id,item_id,position,score` CSV. Rows are grouped by
// ranking_id (first-appearance order preserved) and sorted by position;
// positions must form a contiguous 1..m sequence. An empty score field
// reads as 0.
std::vector<Ranking> parse_rankings(std::istream& in);

// Inverse of parse_rankings; scores are written with enough digits to
// round-trip exactly.
void serialize_rankings(const std::vector<Ranking>& rankings,
                        std::ostream& out);

// One evaluated (ranking, k) pair.
struct RankingEvaluation {
  std::string ranking_id;
  int k = 0;
  int k_effective = 0;  // min(k, candidate count)
  double ndcg_adhoc = 0.0;
  double ndcg_phi = 0.0;
  double difference = 0.0;  // ndcg_adhoc - ndcg_phi
  bool degenerate_adhoc = false;
  bool degenerate_phi = false;
};

struct ColumnSummary {
  double mean = 0.0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

ColumnSummary summarize_column(const std::vector<double>& values);

struct KSummary {
  int k = 0;
  int rankings = 0;  // rows contributing to this summary
  ColumnSummary ndcg_adhoc;
  ColumnSummary ndcg_phi;
  ColumnSummary difference;
};

struct RankingFailure {
  std::string ranking_id;
  std::string message;
};

struct EvaluationReport {
  MetricConfig config;
  std::vector<int> ks;
  std::vector<RankingEvaluation> per_ranking;  // input order, k-major inner
  std::vector<KSummary> summary;
  std::vector<RankingFailure> errors;
};

// Evaluates every ranking at every requested cut-off: phi is fitted once
// per ranking on its candidate scores, then both metrics are computed per
// k. A ranking that fails to evaluate is recorded in `errors` without
// aborting the batch. Empty `ks` means {config.k}.
EvaluationReport evaluate_dataset(const std::vector<Ranking>& rankings,
                                  const MetricConfig& config,
                                  std::vector<int> ks = {});

}  // namespace rankeval

#endif  // RANKEVAL_DATASET_HPP_
