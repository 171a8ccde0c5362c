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

#include "rankeval/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankeval/dataset.hpp"
#include "rankeval/report.hpp"
#include "rankeval/synth.hpp"

namespace rankeval {

namespace {

// Malformed flag values (bad --buckets / --scenario syntax). Distinct from
// data validation failures so the exit codes stay 2 vs 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

long parse_long(const std::string& field, const std::string& what) {
  char* end = nullptr;
  const long value = std::strtol(field.c_str(), &end, 10);
  if (field.empty() || end != field.c_str() + field.size()) {
    throw UsageError(what + ": '" + field + "' is not an integer");
  }
  return value;
}

double parse_double(const std::string& field, const std::string& what) {
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size()) {
    throw UsageError(what + ": '" + field + "' is not a number");
  }
  return value;
}

// "r1,r2,...:l0,l1,..." e.g. the default "10,25,50:3,2,1,0".
AdhocBuckets parse_buckets(const std::string& spec) {
  const auto halves = split(spec, ':');
  if (halves.size() != 2) {
    throw UsageError("--buckets: expected 'r1,r2,...:l0,l1,...'");
  }
  AdhocBuckets buckets;
  buckets.ranks.clear();
  buckets.levels.clear();
  for (const auto& field : split(halves[0], ',')) {
    buckets.ranks.push_back(static_cast<int>(parse_long(field, "--buckets")));
  }
  for (const auto& field : split(halves[1], ',')) {
    buckets.levels.push_back(parse_double(field, "--buckets"));
  }
  try {
    validate(buckets);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--buckets: ") + e.what());
  }
  return buckets;
}

// "swap" | "swap:i:j" | "invert".
Scenario parse_scenario(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts[0] == "invert") {
    if (parts.size() != 1) throw UsageError("--scenario: invert takes no arguments");
    return InvertScenario{};
  }
  if (parts[0] == "swap") {
    SwapScenario swap;
    if (parts.size() == 3) {
      swap.i = static_cast<int>(parse_long(parts[1], "--scenario"));
      swap.j = static_cast<int>(parse_long(parts[2], "--scenario"));
    } else if (parts.size() != 1) {
      throw UsageError("--scenario: expected 'swap' or 'swap:i:j'");
    }
    return swap;
  }
  throw UsageError("--scenario: expected 'swap[:i:j]' or 'invert', got '" +
                   spec + "'");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open input file '" + path + "'");
  }
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + path + "'");
  }
  return out;
}

struct CommonOptions {
  std::string gain = "exponential";
  std::string discount = "logarithmic";
  std::string buckets;
  std::string format = "json";
};

void add_metric_flags(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--gain", opts->gain, "Gain function")
      ->check(CLI::IsMember({"linear", "exponential"}));
  cmd->add_option("--discount", opts->discount, "Discount function")
      ->check(CLI::IsMember({"logarithmic", "zipfian"}));
  cmd->add_option("--buckets", opts->buckets,
                  "Ad-hoc relevance buckets as 'r1,r2,...:l0,l1,...' "
                  "(default 10,25,50:3,2,1,0)");
}

MetricConfig make_metric_config(const CommonOptions& opts) {
  MetricConfig config;
  config.gain =
      opts.gain == "linear" ? GainKind::linear : GainKind::exponential;
  config.discount = opts.discount == "zipfian" ? DiscountKind::zipfian
                                               : DiscountKind::logarithmic;
  if (!opts.buckets.empty()) config.buckets = parse_buckets(opts.buckets);
  return config;
}

int run_eval(const std::string& input, const std::string& output,
             std::vector<int> ks, const CommonOptions& opts) {
  auto in = open_input(input);
  const auto rankings = parse_rankings(in);
  if (rankings.empty()) {
    throw ValidationError("input '" + input + "' contains no rankings");
  }
  MetricConfig config = make_metric_config(opts);
  if (ks.empty()) ks.push_back(10);
  config.k = ks.front();
  const EvaluationReport report = evaluate_dataset(rankings, config, ks);

  std::ostringstream body;
  if (opts.format == "csv") {
    write_report_csv(report, body);
  } else {
    nlohmann::json j = report_to_json(report);
    j["config"]["input"] = input;
    body << j.dump(2) << '\n';
  }
  if (output.empty()) {
    std::cout << body.str();
  } else {
    open_output(output) << body.str();
  }
  return 0;
}

int run_synth(const ExperimentConfig& config, const std::string& output,
              const std::string& csv_output, const std::string& format) {
  const ExperimentResult result = run_experiment(config);
  if (output.empty() && csv_output.empty()) {
    if (format == "csv") {
      write_experiment_csv(result, std::cout);
    } else {
      std::cout << experiment_to_json(config, result).dump(2) << '\n';
    }
    return 0;
  }
  if (!output.empty()) {
    open_output(output) << experiment_to_json(config, result).dump(2) << '\n';
  }
  if (!csv_output.empty()) {
    auto out = open_output(csv_output);
    write_experiment_csv(result, out);
  }
  return 0;
}

int run_phi(const std::string& input, const std::string& output,
            const std::string& knots_output, int grid_points) {
  auto in = open_input(input);
  std::vector<double> scores;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t");
    const std::string field = line.substr(first, last - first + 1);
    char* end = nullptr;
    const double value = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size()) {
      throw ParseError(lineno, "score '" + field + "' is not a number");
    }
    scores.push_back(value);
  }
  if (scores.empty()) {
    throw ValidationError("input '" + input + "' contains no scores");
  }
  const RelevanceFunction phi = fit_relevance_function(scores);
  if (output.empty()) {
    write_phi_grid(phi, grid_points, std::cout);
  } else {
    auto out = open_output(output);
    write_phi_grid(phi, grid_points, out);
  }
  if (!knots_output.empty()) {
    auto out = open_output(knots_output);
    write_phi_knots(phi, out);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{
      "Ranking evaluation with standard nDCG@k and the score-interpolated "
      "nDCG_phi@k"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand(
      "eval", "Evaluate a CSV of rankings with both metrics");
  std::string eval_input, eval_output;
  std::vector<int> eval_ks;
  CommonOptions eval_opts;
  eval->add_option("--input", eval_input, "Input CSV "
                   "(ranking_id,item_id,position,score)")
      ->required();
  eval->add_option("--output", eval_output, "Report path (default stdout)");
  eval->add_option("--k", eval_ks, "Cut-off, repeatable (default 10)")
      ->check(CLI::PositiveNumber);
  add_metric_flags(eval, &eval_opts);
  eval->add_option("--format", eval_opts.format,
                   "Report format: json (full report) or csv (per-ranking rows)")
      ->check(CLI::IsMember({"json", "csv"}));

  // synth
  auto* synth = app.add_subcommand(
      "synth", "Run a seeded synthetic ordering-error experiment");
  std::string synth_output, synth_csv, synth_scenario = "swap:10:11",
              synth_distribution = "balanced";
  ExperimentConfig synth_config;
  CommonOptions synth_opts;
  synth->add_option("--n", synth_config.n, "Candidate-set size (default 100)")
      ->check(CLI::PositiveNumber);
  synth->add_option("--k", synth_config.k, "Cut-off (default 10)")
      ->check(CLI::PositiveNumber);
  synth->add_option("--samples", synth_config.samples,
                    "Number of score samples (default 1000)")
      ->check(CLI::PositiveNumber);
  synth->add_option("--seed", synth_config.seed, "Master seed (default 0)");
  synth->add_option("--distribution", synth_distribution,
                    "Score distribution")
      ->check(CLI::IsMember({"balanced", "imbalanced"}));
  synth->add_option("--scenario", synth_scenario,
                    "Ordering error: swap[:i:j] or invert (default swap:10:11)");
  add_metric_flags(synth, &synth_opts);
  synth->add_option("--output", synth_output, "Result JSON path");
  synth->add_option("--csv", synth_csv,
                    "Long-format CSV path (sample_index,metric,value)");
  synth->add_option("--format", synth_opts.format,
                    "Stdout format when no output path is given")
      ->check(CLI::IsMember({"json", "csv"}));

  // phi
  auto* phi = app.add_subcommand(
      "phi", "Fit the relevance function on a score list and dump it");
  std::string phi_input, phi_output, phi_knots;
  int phi_grid = 512;
  phi->add_option("--input", phi_input, "Score list, one per line")
      ->required();
  phi->add_option("--output", phi_output,
                  "Grid CSV path y,phi (default stdout)");
  phi->add_option("--knots", phi_knots, "Knot table CSV path (x,v,derivative)");
  phi->add_option("--grid-points", phi_grid, "Grid resolution (default 512)")
      ->check(CLI::Range(2, 10000000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      return run_eval(eval_input, eval_output, eval_ks, eval_opts);
    }
    if (synth->parsed()) {
      synth_config.distribution = synth_distribution == "imbalanced"
                                      ? ScoreDistribution::imbalanced
                                      : ScoreDistribution::balanced;
      synth_config.scenario = parse_scenario(synth_scenario);
      synth_config.metric = make_metric_config(synth_opts);
      return run_synth(synth_config, synth_output, synth_csv,
                       synth_opts.format);
    }
    return run_phi(phi_input, phi_output, phi_knots, phi_grid);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args);
}

}  // namespace rankeval
