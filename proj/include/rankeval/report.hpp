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

#ifndef RANKEVAL_REPORT_HPP_
#define RANKEVAL_REPORT_HPP_

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rankeval/dataset.hpp"
#include "rankeval/synth.hpp"

namespace rankeval {

// Report numbers carry 15 significant digits so regression diffs stay
// readable; ranking serialization elsewhere keeps full precision.
double round_sig(double x, int digits = 15);

std::string to_string(GainKind kind);
std::string to_string(DiscountKind kind);
std::string to_string(ScoreDistribution distribution);
std::string to_string(const Scenario& scenario);  // "swap:i:j" / "invert"

// JSON report with top-level keys config, per_ranking, summary, errors.
nlohmann::json report_to_json(const EvaluationReport& report);

// Per-ranking rows as CSV:
// ranking_id,k,k_effective,ndcg_adhoc,ndcg_phi,difference,
// degenerate_adhoc,degenerate_phi
void write_report_csv(const EvaluationReport& report, std::ostream& out);

nlohmann::json experiment_to_json(const ExperimentConfig& config,
                                  const ExperimentResult& result);

// Long format for external boxplot rendering:
// sample_index,metric,value with metric in {ndcg_adhoc, ndcg_phi}.
void write_experiment_csv(const ExperimentResult& result, std::ostream& out);

// Dense (y, phi(y)) samples preceded by a '#'-commented knot table.
void write_phi_grid(const RelevanceFunction& f, int grid_points,
                    std::ostream& out);

// Knot table alone: x,v,derivative.
void write_phi_knots(const RelevanceFunction& f, std::ostream& out);

}  // namespace rankeval

#endif  // RANKEVAL_REPORT_HPP_
