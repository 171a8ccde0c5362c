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

#include "rankeval/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace rankeval {

namespace {

std::string format_sig(double x, int digits = 15) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

nlohmann::json column_to_json(const ColumnSummary& c) {
  return {{"mean", round_sig(c.mean)}, {"min", round_sig(c.min)},
          {"q1", round_sig(c.q1)},     {"median", round_sig(c.median)},
          {"q3", round_sig(c.q3)},     {"max", round_sig(c.max)}};
}

nlohmann::json config_to_json(const MetricConfig& config,
                              const std::vector<int>& ks) {
  return {{"gain", to_string(config.gain)},
          {"discount", to_string(config.discount)},
          {"k", ks},
          {"bucket_ranks", config.buckets.ranks},
          {"bucket_levels", config.buckets.levels}};
}

}  // namespace

double round_sig(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  return std::strtod(format_sig(x, digits).c_str(), nullptr);
}

std::string to_string(GainKind kind) {
  return kind == GainKind::exponential ? "exponential" : "linear";
}

std::string to_string(DiscountKind kind) {
  return kind == DiscountKind::logarithmic ? "logarithmic" : "zipfian";
}

std::string to_string(ScoreDistribution distribution) {
  return distribution == ScoreDistribution::balanced ? "balanced"
                                                     : "imbalanced";
}

std::string to_string(const Scenario& scenario) {
  if (const auto* swap = std::get_if<SwapScenario>(&scenario)) {
    return "swap:" + std::to_string(swap->i) + ":" + std::to_string(swap->j);
  }
  return "invert";
}

nlohmann::json report_to_json(const EvaluationReport& report) {
  nlohmann::json per_ranking = nlohmann::json::array();
  for (const auto& row : report.per_ranking) {
    per_ranking.push_back(
        {{"ranking_id", row.ranking_id},
         {"k", row.k},
         {"k_effective", row.k_effective},
         {"ndcg_adhoc", round_sig(row.ndcg_adhoc)},
         {"ndcg_phi", round_sig(row.ndcg_phi)},
         {"difference", round_sig(row.difference)},
         {"degenerate_flags",
          {{"adhoc", row.degenerate_adhoc}, {"phi", row.degenerate_phi}}}});
  }

  nlohmann::json summary = nlohmann::json::array();
  for (const auto& s : report.summary) {
    summary.push_back({{"k", s.k},
                       {"rankings", s.rankings},
                       {"ndcg_adhoc", column_to_json(s.ndcg_adhoc)},
                       {"ndcg_phi", column_to_json(s.ndcg_phi)},
                       {"difference", column_to_json(s.difference)}});
  }

  nlohmann::json errors = nlohmann::json::array();
  for (const auto& failure : report.errors) {
    errors.push_back(
        {{"ranking_id", failure.ranking_id}, {"error", failure.message}});
  }

  return {{"config", config_to_json(report.config, report.ks)},
          {"per_ranking", per_ranking},
          {"summary", summary},
          {"errors", errors}};
}

void write_report_csv(const EvaluationReport& report, std::ostream& out) {
  out << "ranking_id,k,k_effective,ndcg_adhoc,ndcg_phi,difference,"
         "degenerate_adhoc,degenerate_phi\n";
  for (const auto& row : report.per_ranking) {
    out << row.ranking_id << ',' << row.k << ',' << row.k_effective << ','
        << format_sig(row.ndcg_adhoc) << ',' << format_sig(row.ndcg_phi) << ','
        << format_sig(row.difference) << ',' << (row.degenerate_adhoc ? 1 : 0)
        << ',' << (row.degenerate_phi ? 1 : 0) << '\n';
  }
}

nlohmann::json experiment_to_json(const ExperimentConfig& config,
                                  const ExperimentResult& result) {
  nlohmann::json phi_values = nlohmann::json::array();
  for (double v : result.phi_values) phi_values.push_back(round_sig(v));
  return {{"config",
           {{"n", config.n},
            {"k", config.k},
            {"samples", config.samples},
            {"distribution", to_string(config.distribution)},
            {"scenario", to_string(config.scenario)},
            {"seed", config.seed},
            {"gain", to_string(config.metric.gain)},
            {"discount", to_string(config.metric.discount)},
            {"bucket_ranks", config.metric.buckets.ranks},
            {"bucket_levels", config.metric.buckets.levels}}},
          {"adhoc_value", round_sig(result.adhoc_value)},
          {"phi_values", phi_values},
          {"phi_summary",
           {{"min", round_sig(result.phi_summary.min)},
            {"q1", round_sig(result.phi_summary.q1)},
            {"median", round_sig(result.phi_summary.median)},
            {"q3", round_sig(result.phi_summary.q3)},
            {"max", round_sig(result.phi_summary.max)}}}};
}

void write_experiment_csv(const ExperimentResult& result, std::ostream& out) {
  out << "sample_index,metric,value\n";
  for (std::size_t i = 0; i < result.phi_values.size(); ++i) {
    out << i << ",ndcg_adhoc," << format_sig(result.adhoc_value) << '\n';
    out << i << ",ndcg_phi," << format_sig(result.phi_values[i]) << '\n';
  }
}

void write_phi_knots(const RelevanceFunction& f, std::ostream& out) {
  out << "x,v,derivative\n";
  for (std::size_t i = 0; i < f.knots.size(); ++i) {
    out << format_sig(f.knots[i].x) << ',' << format_sig(f.knots[i].v) << ','
        << format_sig(f.derivatives[i]) << '\n';
  }
}

void write_phi_grid(const RelevanceFunction& f, int grid_points,
                    std::ostream& out) {
  if (f.degenerate) {
    out << "# degenerate sample (max == median): phi is 0 everywhere\n";
    out << "y,phi\n";
    out << format_sig(f.domain_min) << ",0\n";
    return;
  }
  out << "# knots: x,v,derivative\n";
  for (std::size_t i = 0; i < f.knots.size(); ++i) {
    out << "# " << format_sig(f.knots[i].x) << ',' << format_sig(f.knots[i].v)
        << ',' << format_sig(f.derivatives[i]) << '\n';
  }
  out << "y,phi\n";
  const int points = std::max(grid_points, 2);
  const double span = f.domain_max - f.domain_min;
  for (int i = 0; i < points; ++i) {
    const double y =
        f.domain_min + span * static_cast<double>(i) /
                           static_cast<double>(points - 1);
    out << format_sig(y) << ',' << format_sig(eval_phi(f, y)) << '\n';
  }
}

}  // namespace rankeval
