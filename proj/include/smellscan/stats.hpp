// Copyright 2026 The smellscan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Descriptive statistics and two-sample tests.

#ifndef SMELLSCAN_STATS_HPP_
#define SMELLSCAN_STATS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace smellscan {

class EmptySample : public std::invalid_argument {
 public:
  EmptySample() : std::invalid_argument("sample is empty") {}
};

class SampleSizeOutOfRange : public std::invalid_argument {
 public:
  explicit SampleSizeOutOfRange(std::size_t n)
      : std::invalid_argument("sample size " + std::to_string(n) + " outside [3, 5000]") {}
};

class DegenerateSample : public std::invalid_argument {
 public:
  DegenerateSample() : std::invalid_argument("sample has zero range") {}
};

class LengthMismatch : public std::invalid_argument {
 public:
  LengthMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("label vectors differ in length: " + std::to_string(a) + " vs " +
                              std::to_string(b)) {}
};

struct DescriptiveStats {
  std::size_t n = 0;
  double mean = 0;
  double std = 0;  // n - 1 denominator; 0 for a single observation
  double min = 0;
  double q1 = 0;
  double median = 0;
  double q3 = 0;
  double max = 0;
};

// Quartiles interpolate linearly between closest ranks.
DescriptiveStats descriptive(const std::vector<double>& sample);

// Quantile p in [0, 1] of an ascending sample, same interpolation.
double quantile_sorted(const std::vector<double>& sorted, double p);

struct MWUResult {
  double u = 0;  // statistic of the first sample
  double p_value = 1;
  double rank_biserial = 0;
  bool exact = false;
};

// Two-sided. Exact null distribution when both samples have at most
// kExactLimit observations and there are no ties; otherwise the normal
// approximation with tie and continuity correction.
inline constexpr std::size_t kExactLimit = 8;
MWUResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b);

// Number of rank arrangements of sizes (m, n) whose first-sample U equals u,
// for u = 0 .. m*n.
std::vector<double> mann_whitney_null_counts(std::size_t m, std::size_t n);

struct SWResult {
  double w = 1;
  double p_value = 1;
};

// Royston's approximation, 3 <= n <= 5000.
SWResult shapiro_wilk(const std::vector<double>& sample);

struct KappaResult {
  double kappa = 1;
  double observed_agreement = 1;
  double expected_agreement = 0;
};

KappaResult cohens_kappa(const std::vector<std::string>& labels_a,
                         const std::vector<std::string>& labels_b);

struct Histogram {
  std::vector<double> edges;  // bins + 1 ascending edges
  std::vector<std::size_t> counts;
};

// Equal-width bins over [lo, hi]; the last bin is closed. A zero-width range
// is widened by 0.5 on each side.
Histogram histogram(const std::vector<double>& sample, std::size_t bins, double lo, double hi);

struct PlotData {
  DescriptiveStats summary_a;
  DescriptiveStats summary_b;
  std::vector<double> edges;
  std::vector<std::size_t> counts_a;
  std::vector<std::size_t> counts_b;
};

// Box-plot summaries of each sample and histograms over the pooled range.
PlotData plot_data(const std::vector<double>& a, const std::vector<double>& b, std::size_t bins);

}  // namespace smellscan

#endif  // SMELLSCAN_STATS_HPP_
