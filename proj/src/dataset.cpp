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

#include "rankeval/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "rankeval/relevance.hpp"

namespace rankeval {

namespace {

constexpr const char* kHeader = "ranking_id,item_id,position,score";

struct Row {
  std::string item_id;
  int position = 0;
  double score = 0.0;
  int line = 0;
};

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

int parse_position(const std::string& field, int line) {
  char* end = nullptr;
  const long value = std::strtol(field.c_str(), &end, 10);
  if (field.empty() || end != field.c_str() + field.size()) {
    throw ParseError(line, "position '" + field + "' is not an integer");
  }
  if (value < 1) {
    throw ParseError(line, "position must be >= 1");
  }
  return static_cast<int>(value);
}

double parse_score(const std::string& field, int line) {
  if (field.empty()) return 0.0;  // item never scored
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size()) {
    throw ParseError(line, "score '" + field + "' is not a number");
  }
  if (!std::isfinite(value) || value < 0.0) {
    throw ParseError(line, "score must be finite and >= 0");
  }
  return value;
}

}  // namespace

std::vector<Ranking> parse_rankings(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(1, "empty input, expected header '" +
                            std::string(kHeader) + "'");
  }
  strip_cr(line);
  if (line != kHeader) {
    throw ParseError(1, "expected header '" + std::string(kHeader) +
                            "', got '" + line + "'");
  }

  std::vector<std::string> id_order;
  std::map<std::string, std::vector<Row>> groups;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 4) {
      throw ParseError(lineno, "expected 4 fields, got " +
                                   std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw ParseError(lineno, "empty ranking_id");
    if (fields[1].empty()) throw ParseError(lineno, "empty item_id");
    Row row;
    row.item_id = fields[1];
    row.position = parse_position(fields[2], lineno);
    row.score = parse_score(fields[3], lineno);
    row.line = lineno;
    auto [it, inserted] = groups.try_emplace(fields[0]);
    if (inserted) id_order.push_back(fields[0]);
    it->second.push_back(std::move(row));
  }

  std::vector<Ranking> rankings;
  rankings.reserve(id_order.size());
  for (const auto& rid : id_order) {
    auto& rows = groups[rid];
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.position < b.position; });
    Ranking ranking;
    ranking.ranking_id = rid;
    std::set<std::string> items;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int expected = static_cast<int>(i) + 1;
      if (rows[i].position != expected) {
        if (i > 0 && rows[i].position == rows[i - 1].position) {
          throw ValidationError("ranking '" + rid + "': duplicate position " +
                                std::to_string(rows[i].position));
        }
        throw ValidationError("ranking '" + rid +
                              "': positions are not contiguous (expected " +
                              std::to_string(expected) + ", got " +
                              std::to_string(rows[i].position) + ")");
      }
      if (!items.insert(rows[i].item_id).second) {
        throw ValidationError("ranking '" + rid + "': duplicate item '" +
                              rows[i].item_id + "'");
      }
      ranking.system_order.push_back(rows[i].item_id);
      ranking.scores[rows[i].item_id] = rows[i].score;
    }
    rankings.push_back(std::move(ranking));
  }
  return rankings;
}

void serialize_rankings(const std::vector<Ranking>& rankings,
                        std::ostream& out) {
  out << kHeader << '\n';
  char buf[64];
  for (const auto& ranking : rankings) {
    for (std::size_t i = 0; i < ranking.system_order.size(); ++i) {
      const auto& id = ranking.system_order[i];
      std::snprintf(buf, sizeof buf, "%.17g", ranking.scores.at(id));
      out << ranking.ranking_id << ',' << id << ',' << i + 1 << ',' << buf
          << '\n';
    }
  }
}

ColumnSummary summarize_column(const std::vector<double>& values) {
  const ScoreSummary s = summarize_scores(values);
  ColumnSummary c;
  c.mean = std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
  c.min = s.min;
  c.q1 = s.q1;
  c.median = s.median;
  c.q3 = s.q3;
  c.max = s.max;
  return c;
}

EvaluationReport evaluate_dataset(const std::vector<Ranking>& rankings,
                                  const MetricConfig& config,
                                  std::vector<int> ks) {
  if (ks.empty()) ks.push_back(config.k);
  for (int k : ks) {
    if (k < 1) throw std::invalid_argument("evaluate_dataset: k must be >= 1");
  }
  validate(config.buckets);

  EvaluationReport report;
  report.config = config;
  report.ks = ks;

  for (const auto& ranking : rankings) {
    try {
      validate(ranking);
      if (ranking.system_order.empty()) {
        throw std::invalid_argument("empty ranking");
      }
      std::vector<double> scores;
      scores.reserve(ranking.scores.size());
      for (const auto& [id, score] : ranking.scores) {
        (void)id;
        scores.push_back(score);
      }
      const RelevanceFunction phi = fit_relevance_function(scores);

      const RelevanceVector adhoc_rel =
          adhoc_relevance(ranking.scores, config.buckets);
      RelevanceVector phi_rel;
      for (const auto& [id, score] : ranking.scores) {
        phi_rel[id] = eval_phi(phi, score);
      }

      for (int k : ks) {
        MetricConfig mc = config;
        mc.k = k;
        const NdcgResult a = ndcg(ranking, adhoc_rel, mc);
        const NdcgResult p = ndcg(ranking, phi_rel, mc);
        RankingEvaluation row;
        row.ranking_id = ranking.ranking_id;
        row.k = k;
        row.k_effective =
            std::min(k, static_cast<int>(ranking.scores.size()));
        row.ndcg_adhoc = a.value;
        row.ndcg_phi = p.value;
        row.difference = a.value - p.value;
        row.degenerate_adhoc = a.degenerate;
        row.degenerate_phi = p.degenerate;
        report.per_ranking.push_back(std::move(row));
      }
    } catch (const std::exception& e) {
      report.errors.push_back({ranking.ranking_id, e.what()});
    }
  }

  for (int k : ks) {
    std::vector<double> adhoc, phi, diff;
    for (const auto& row : report.per_ranking) {
      if (row.k != k) continue;
      adhoc.push_back(row.ndcg_adhoc);
      phi.push_back(row.ndcg_phi);
      diff.push_back(row.difference);
    }
    if (adhoc.empty()) continue;
    KSummary summary;
    summary.k = k;
    summary.rankings = static_cast<int>(adhoc.size());
    summary.ndcg_adhoc = summarize_column(adhoc);
    summary.ndcg_phi = summarize_column(phi);
    summary.difference = summarize_column(diff);
    report.summary.push_back(std::move(summary));
  }
  return report;
}

}  // namespace rankeval
