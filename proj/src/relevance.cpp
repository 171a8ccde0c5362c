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

#include "rankeval/relevance.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace rankeval {

namespace {

int sgn(double x) { return (x > 0.0) - (x < 0.0); }

// Quantile on already-sorted data; see quantile() for the rule.
double quantile_sorted(const std::vector<double>& sorted, double p) {
  const std::size_t n = sorted.size();
  const double h = static_cast<double>(n - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= n) return sorted[n - 1];
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

void check_finite(const std::vector<double>& scores) {
  for (double s : scores) {
    if (!std::isfinite(s)) {
      throw std::invalid_argument("scores must be finite");
    }
  }
}

// Non-centered three-point endpoint slope, clamped so the end segment
// stays monotone: zero when sign-inconsistent with the adjacent secant,
// at most 3x that secant otherwise.
double edge_derivative(double h0, double h1, double m0, double m1) {
  const double d = ((2.0 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
  if (sgn(d) != sgn(m0)) return 0.0;
  if (std::abs(d) > 3.0 * std::abs(m0)) return 3.0 * m0;
  return d;
}

// Hermite basis, evaluated in the symmetric two-sided form
//   p(t) = v0*h00(t) + h*d0*h10(t) + v1*h00(1-t) - h*d1*h10(1-t).
double h00(double t) { return (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t); }
double h10(double t) { return t * (1.0 - t) * (1.0 - t); }

}  // namespace

double quantile(std::vector<double> scores, double p) {
  if (scores.empty()) {
    throw std::invalid_argument("quantile: empty input");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("quantile: probability outside [0,1]");
  }
  check_finite(scores);
  std::sort(scores.begin(), scores.end());
  return quantile_sorted(scores, p);
}

ScoreSummary summarize_scores(const std::vector<double>& scores) {
  if (scores.empty()) {
    throw std::invalid_argument("summarize_scores: empty input");
  }
  check_finite(scores);
  std::vector<double> sorted(scores);
  std::sort(sorted.begin(), sorted.end());
  ScoreSummary s;
  s.min = sorted.front();
  s.q1 = quantile_sorted(sorted, 0.25);
  s.median = quantile_sorted(sorted, 0.5);
  s.q3 = quantile_sorted(sorted, 0.75);
  s.max = sorted.back();
  s.iqr = s.q3 - s.q1;
  s.upper_whisker = s.q3 + 1.5 * s.iqr;
  s.has_outliers = s.max > s.upper_whisker;
  return s;
}

double alpha(const ScoreSummary& summary) {
  if (summary.max == summary.min) {
    throw std::domain_error("alpha: degenerate distribution (max == min)");
  }
  if (!summary.has_outliers) {
    throw std::domain_error("alpha: no scores above the upper whisker");
  }
  return (summary.max - summary.upper_whisker) / (summary.max - summary.min);
}

std::optional<std::vector<ControlPoint>> build_control_points(
    const std::vector<double>& scores) {
  if (scores.empty()) {
    throw std::invalid_argument("build_control_points: empty input");
  }
  const ScoreSummary s = summarize_scores(scores);
  if (s.max == s.median) {
    return std::nullopt;  // constraints 0-at-median and 1-at-max collide
  }
  std::vector<ControlPoint> points;
  if (s.min < s.median) points.push_back({s.min, 0.0});
  points.push_back({s.median, 0.0});
  if (s.has_outliers && s.median < s.upper_whisker && s.upper_whisker < s.max) {
    points.push_back({s.upper_whisker, 1.0 - alpha(s)});
  }
  points.push_back({s.max, 1.0});
  return points;
}

RelevanceFunction fit_pchip(std::vector<ControlPoint> points) {
  const std::size_t n = points.size();
  if (n < 2) {
    throw std::invalid_argument("fit_pchip: need at least 2 control points");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].v)) {
      throw std::invalid_argument("fit_pchip: non-finite control point");
    }
    if (points[i].v < 0.0 || points[i].v > 1.0) {
      throw std::invalid_argument("fit_pchip: relevance outside [0,1]");
    }
    if (i > 0 && !(points[i].x > points[i - 1].x)) {
      throw std::invalid_argument("fit_pchip: x values must increase strictly");
    }
    if (i > 0 && points[i].v < points[i - 1].v) {
      throw std::invalid_argument("fit_pchip: v values must be non-decreasing");
    }
  }

  std::vector<double> widths(n - 1), secants(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    widths[i] = points[i + 1].x - points[i].x;
    secants[i] = (points[i + 1].v - points[i].v) / widths[i];
  }

  std::vector<double> derivs(n, 0.0);
  if (n == 2) {
    // Single segment: slope at both ends reduces to the secant, so the
    // interpolant is the secant line itself.
    derivs[0] = derivs[1] = secants[0];
  } else {
    for (std::size_t j = 1; j + 1 < n; ++j) {
      const double prev = secants[j - 1];
      const double next = secants[j];
      if (prev == 0.0 || next == 0.0 || sgn(prev) != sgn(next)) {
        derivs[j] = 0.0;
      } else {
        const double w1 = 2.0 * widths[j] + widths[j - 1];
        const double w2 = widths[j] + 2.0 * widths[j - 1];
        derivs[j] = (w1 + w2) / (w1 / prev + w2 / next);
      }
    }
    derivs[0] = edge_derivative(widths[0], widths[1], secants[0], secants[1]);
    derivs[n - 1] = edge_derivative(widths[n - 2], widths[n - 3],
                                    secants[n - 2], secants[n - 3]);
  }

  RelevanceFunction f;
  f.domain_min = points.front().x;
  f.domain_max = points.back().x;
  f.knots = std::move(points);
  f.derivatives = std::move(derivs);
  return f;
}

RelevanceFunction fit_relevance_function(const std::vector<double>& scores) {
  auto points = build_control_points(scores);
  if (!points) {
    RelevanceFunction f;
    f.degenerate = true;
    f.domain_min = *std::min_element(scores.begin(), scores.end());
    f.domain_max = *std::max_element(scores.begin(), scores.end());
    return f;
  }
  return fit_pchip(std::move(*points));
}

double eval_phi(const RelevanceFunction& f, double y) {
  if (!std::isfinite(y)) {
    throw std::invalid_argument("eval_phi: non-finite score");
  }
  if (f.degenerate) return 0.0;
  const auto& knots = f.knots;
  if (y <= knots.front().x) return knots.front().v;
  if (y >= knots.back().x) return knots.back().v;
  // Largest segment start <= y.
  std::size_t seg = 0;
  {
    std::size_t lo = 0, hi = knots.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (knots[mid].x <= y) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    seg = lo;
  }
  const double h = knots[seg + 1].x - knots[seg].x;
  const double t = (y - knots[seg].x) / h;
  const double u = 1.0 - t;
  const double value = knots[seg].v * h00(t) + h * f.derivatives[seg] * h10(t) +
                       knots[seg + 1].v * h00(u) -
                       h * f.derivatives[seg + 1] * h10(u);
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace rankeval
