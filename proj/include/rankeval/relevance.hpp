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

#ifndef RANKEVAL_RELEVANCE_HPP_
#define RANKEVAL_RELEVANCE_HPP_

#include <optional>
#include <vector>

namespace rankeval {

// One knot of the relevance function: a score paired with the relevance
// judgment it must map to. Within a knot list the x values are strictly
// increasing and v stays in [0, 1].
struct ControlPoint {
  double x = 0.0;
  double v = 0.0;
};

// Five-number summary plus the boxplot upper-whisker rule. Scores above
// upper_whisker = Q3 + 1.5*IQR count as outliers.
struct ScoreSummary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double iqr = 0.0;
  double upper_whisker = 0.0;
  bool has_outliers = false;
};

// Monotone piecewise-cubic interpolant mapping a score to a relevance
// judgment in [0, 1]. Immutable after fitting. A degenerate function
// (fitted on a sample with max == median) evaluates to 0 everywhere.
struct RelevanceFunction {
  std::vector<ControlPoint> knots;
  std::vector<double> derivatives;  // d(relevance)/d(score) at each knot
  bool degenerate = false;
  double domain_min = 0.0;
  double domain_max = 0.0;

  double operator()(double y) const;
};

// Quantile of `scores` by linear interpolation of order statistics at the
// fractional index h = (n-1)*p + 1 (1-based). Matches the default of R and
// NumPy. Throws std::invalid_argument on empty input or p outside [0, 1].
double quantile(std::vector<double> scores, double p);

ScoreSummary summarize_scores(const std::vector<double>& scores);

// How extreme the maximum score is relative to the whisker:
//   alpha = (max - upper_whisker) / (max - min), in (0, 1).
// Requires an actual outlier; throws std::domain_error when max == min or
// when nothing exceeds the whisker.
double alpha(const ScoreSummary& summary);

// Control points for the relevance function of a score sample:
// (min, 0), (median, 0), (max, 1), plus (upper_whisker, 1 - alpha) when the
// sample has outliers and median < whisker < max. Duplicate abscissas
// collapse to a single knot. Returns nullopt when max == median, in which
// case the relevance function is identically 0.
std::optional<std::vector<ControlPoint>> build_control_points(
    const std::vector<double>& scores);

// Fits a monotone cubic Hermite interpolant through the given knots using
// Fritsch-Carlson derivatives: interior slopes are the weighted harmonic
// mean of the adjacent secants (zero when the secants disagree in sign or
// vanish), endpoint slopes come from the non-centered three-point formula
// clamped to keep monotonicity. Requires >= 2 knots, strictly increasing x
// and non-decreasing v.
RelevanceFunction fit_pchip(std::vector<ControlPoint> points);

// Convenience: build_control_points + fit_pchip, or the degenerate function.
RelevanceFunction fit_relevance_function(const std::vector<double>& scores);

// Evaluates the fitted function. Scores below the first knot map to the
// first knot's relevance, scores above the last knot to the last knot's
// (0 and 1 for functions built from a sample). Throws on non-finite input.
double eval_phi(const RelevanceFunction& f, double y);

inline double RelevanceFunction::operator()(double y) const {
  return eval_phi(*this, y);
}

}  // namespace rankeval

#endif  // RANKEVAL_RELEVANCE_HPP_
