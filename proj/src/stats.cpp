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

#include "smellscan/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <boost/math/distributions/normal.hpp>

namespace smellscan {

namespace {

const boost::math::normal kStandardNormal;

double upper_tail(double z) {
  return boost::math::cdf(boost::math::complement(kStandardNormal, z));
}

double poly(const double* c, int order, double x) {
  double r = c[order - 1];
  for (int i = order - 2; i >= 0; --i) r = r * x + c[i];
  return r;
}

// Average 1-based ranks of the pooled sample, plus the tie term sum(t^3 - t).
std::vector<double> average_ranks(const std::vector<double>& pooled, double& tie_term) {
  std::vector<std::size_t> order(pooled.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return pooled[i] < pooled[j]; });
  std::vector<double> ranks(pooled.size());
  tie_term = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    const double rank = (static_cast<double>(i + j) + 2.0) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    const double t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw EmptySample();
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

DescriptiveStats descriptive(const std::vector<double>& sample) {
  if (sample.empty()) throw EmptySample();
  std::vector<double> sorted = sample;
  std::sort(sorted.begin(), sorted.end());
  DescriptiveStats s;
  s.n = sorted.size();
  const double n = static_cast<double>(s.n);
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / n;
  if (s.n > 1) {
    double ss = 0;
    for (double x : sorted) ss += (x - s.mean) * (x - s.mean);
    s.std = std::sqrt(ss / (n - 1));
  }
  s.min = sorted.front();
  s.q1 = quantile_sorted(sorted, 0.25);
  s.median = quantile_sorted(sorted, 0.5);
  s.q3 = quantile_sorted(sorted, 0.75);
  s.max = sorted.back();
  return s;
}

std::vector<double> mann_whitney_null_counts(std::size_t m, std::size_t n) {
  // counts[i][j][u]: arrangements of i first-sample and j second-sample
  // observations where the first sample's U is u. Adding the largest value
  // to the first sample raises U by j.
  std::vector<std::vector<std::vector<double>>> counts(m + 1,
                                                       std::vector<std::vector<double>>(n + 1));
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      std::vector<double>& c = counts[i][j];
      c.assign(i * j + 1, 0.0);
      if (i == 0 || j == 0) {
        c[0] = 1;
        continue;
      }
      const auto& with_first = counts[i - 1][j];
      for (std::size_t u = 0; u < with_first.size(); ++u) c[u + j] += with_first[u];
      const auto& with_second = counts[i][j - 1];
      for (std::size_t u = 0; u < with_second.size(); ++u) c[u] += with_second[u];
    }
  }
  return counts[m][n];
}

MWUResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) throw EmptySample();
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  double tie_term = 0;
  const std::vector<double> ranks = average_ranks(pooled, tie_term);
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  const double rank_sum = std::accumulate(ranks.begin(), ranks.begin() + a.size(), 0.0);

  MWUResult r;
  r.u = rank_sum - n1 * (n1 + 1) / 2;
  r.rank_biserial = 2 * r.u / (n1 * n2) - 1;
  const double u_max = std::max(r.u, n1 * n2 - r.u);

  if (tie_term == 0 && a.size() <= kExactLimit && b.size() <= kExactLimit) {
    r.exact = true;
    const std::vector<double> counts = mann_whitney_null_counts(a.size(), b.size());
    const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    double tail = 0;
    for (std::size_t u = static_cast<std::size_t>(u_max); u < counts.size(); ++u) {
      tail += counts[u];
    }
    r.p_value = std::min(1.0, 2 * tail / total);
    return r;
  }

  const double n = n1 + n2;
  const double mu = n1 * n2 / 2;
  const double variance = n1 * n2 / 12 * ((n + 1) - tie_term / (n * (n - 1)));
  if (variance <= 0) {
    r.p_value = 1;
    return r;
  }
  const double z = (u_max - mu - 0.5) / std::sqrt(variance);
  r.p_value = std::clamp(2 * upper_tail(z), 0.0, 1.0);
  return r;
}

SWResult shapiro_wilk(const std::vector<double>& sample) {
  const std::size_t n = sample.size();
  if (n < 3 || n > 5000) throw SampleSizeOutOfRange(n);
  std::vector<double> x = sample;
  std::sort(x.begin(), x.end());
  if (x.back() - x.front() < 1e-19 * std::max(1.0, std::fabs(x.back()))) {
    throw DegenerateSample();
  }

  static constexpr double c1[] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
  static constexpr double c2[] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
  static constexpr double c3[] = {0.5440, -0.39978, 0.025054, -6.714e-4};
  static constexpr double c4[] = {1.3822, -0.77857, 0.062767, -0.0020322};
  static constexpr double c5[] = {-1.5861, -0.31082, -0.083751, 0.0038915};
  static constexpr double c6[] = {-0.4803, -0.082676, 0.0030302};
  static constexpr double g[] = {-2.273, 0.459};

  const double an = static_cast<double>(n);
  const std::size_t half = n / 2;
  // Coefficients for the lower half, positive, largest first.
  std::vector<double> coef(half);
  if (n == 3) {
    coef[0] = std::sqrt(0.5);
  } else {
    std::vector<double> m(half);
    double summ2 = 0;
    for (std::size_t i = 0; i < half; ++i) {
      m[i] = boost::math::quantile(kStandardNormal,
                                   (static_cast<double>(i + 1) - 0.375) / (an + 0.25));
      summ2 += m[i] * m[i];
    }
    summ2 *= 2;
    const double ssumm2 = std::sqrt(summ2);
    const double rsn = 1 / std::sqrt(an);
    const double a1 = poly(c1, 6, rsn) - m[0] / ssumm2;
    std::size_t first_scaled = 1;
    double fac = 0;
    if (n > 5) {
      first_scaled = 2;
      const double a2 = -m[1] / ssumm2 + poly(c2, 6, rsn);
      fac =
          std::sqrt((summ2 - 2 * m[0] * m[0] - 2 * m[1] * m[1]) / (1 - 2 * a1 * a1 - 2 * a2 * a2));
      coef[1] = a2;
    } else {
      fac = std::sqrt((summ2 - 2 * m[0] * m[0]) / (1 - 2 * a1 * a1));
    }
    coef[0] = a1;
    for (std::size_t i = first_scaled; i < half; ++i) coef[i] = -m[i] / fac;
  }

  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / an;
  double ssq = 0;
  for (double v : x) ssq += (v - mean) * (v - mean);
  double numerator = 0;
  for (std::size_t i = 0; i < half; ++i) numerator += coef[i] * (x[n - 1 - i] - x[i]);
  SWResult r;
  r.w = std::min(1.0, numerator * numerator / ssq);

  if (n == 3) {
    constexpr double kSixOverPi = 1.90985931710274;
    constexpr double kAsinSqrtThreeQuarters = 1.04719755119660;
    r.p_value = std::max(0.0, kSixOverPi * (std::asin(std::sqrt(r.w)) - kAsinSqrtThreeQuarters));
    return r;
  }
  double y = std::log(1 - r.w);
  double mu = 0;
  double sigma = 0;
  if (n <= 11) {
    const double gamma = poly(g, 2, an);
    if (y >= gamma) {
      r.p_value = 1e-99;
      return r;
    }
    y = -std::log(gamma - y);
    mu = poly(c3, 4, an);
    sigma = std::exp(poly(c4, 4, an));
  } else {
    const double xx = std::log(an);
    mu = poly(c5, 4, xx);
    sigma = std::exp(poly(c6, 3, xx));
  }
  r.p_value = upper_tail((y - mu) / sigma);
  return r;
}

KappaResult cohens_kappa(const std::vector<std::string>& labels_a,
                         const std::vector<std::string>& labels_b) {
  if (labels_a.size() != labels_b.size()) throw LengthMismatch(labels_a.size(), labels_b.size());
  if (labels_a.empty()) throw EmptySample();
  const double n = static_cast<double>(labels_a.size());
  std::map<std::string, std::pair<double, double>> marginals;
  double agree = 0;
  for (std::size_t i = 0; i < labels_a.size(); ++i) {
    if (labels_a[i] == labels_b[i]) ++agree;
    ++marginals[labels_a[i]].first;
    ++marginals[labels_b[i]].second;
  }
  KappaResult r;
  r.observed_agreement = agree / n;
  r.expected_agreement = 0;
  for (const auto& [label, counts] : marginals) {
    r.expected_agreement += (counts.first / n) * (counts.second / n);
  }
  r.kappa = r.expected_agreement >= 1
                ? 1.0
                : (r.observed_agreement - r.expected_agreement) / (1 - r.expected_agreement);
  return r;
}

Histogram histogram(const std::vector<double>& sample, std::size_t bins, double lo, double hi) {
  if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  Histogram h;
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) h.edges.push_back(lo + width * static_cast<double>(i));
  h.edges.back() = hi;
  h.counts.assign(bins, 0);
  for (double v : sample) {
    if (v < lo || v > hi) continue;
    auto bin = static_cast<std::size_t>((v - lo) / width);
    bin = std::min(bin, bins - 1);
    // Guard against rounding across an edge.
    while (bin > 0 && v < h.edges[bin]) --bin;
    while (bin + 1 < bins && v >= h.edges[bin + 1]) ++bin;
    ++h.counts[bin];
  }
  return h;
}

PlotData plot_data(const std::vector<double>& a, const std::vector<double>& b, std::size_t bins) {
  if (a.empty() || b.empty()) throw EmptySample();
  PlotData p;
  p.summary_a = descriptive(a);
  p.summary_b = descriptive(b);
  const double lo = std::min(p.summary_a.min, p.summary_b.min);
  const double hi = std::max(p.summary_a.max, p.summary_b.max);
  Histogram ha = histogram(a, bins, lo, hi);
  Histogram hb = histogram(b, bins, lo, hi);
  p.edges = std::move(ha.edges);
  p.counts_a = std::move(ha.counts);
  p.counts_b = std::move(hb.counts);
  return p;
}

}  // namespace smellscan
