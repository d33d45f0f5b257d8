// Copyright 2026 The orientwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orientwalk/stats.hpp"

#include <cmath>

#include "orientwalk/error.hpp"

namespace orientwalk {

void RunningStats::add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

double RunningStats::variance() const {
  return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

double RunningStats::stderr_of_mean() const {
  return count_ < 2 ? 0.0 : std::sqrt(variance() / static_cast<double>(count_));
}

RunningStats summarize(std::span<const double> values) {
  RunningStats stats;
  for (double v : values) stats.add(v);
  return stats;
}

VarianceEstimate estimate_variance(std::span<const double> values) {
  require(values.size() >= 2, "estimate_variance needs at least two values");
  const double mean = summarize(values).mean();
  const double n = static_cast<double>(values.size());
  double m2 = 0.0;
  double m4 = 0.0;
  for (double v : values) {
    const double d2 = (v - mean) * (v - mean);
    m2 += d2;
    m4 += d2 * d2;
  }
  m2 /= n;
  m4 /= n;
  VarianceEstimate out;
  out.variance = m2 * n / (n - 1.0);
  out.std_error = std::sqrt(std::max(m4 - m2 * m2, 0.0) / n);
  return out;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 2, "fit_line needs paired samples, at least two");
  const double n = static_cast<double>(x.size());
  const double mx = summarize(x).mean();
  const double my = summarize(y).mean();
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  require(sxx > 0.0, "fit_line needs at least two distinct abscissae");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (x.size() > 2) {
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = y[i] - fit.intercept - fit.slope * x[i];
      rss += r * r;
    }
    fit.slope_stderr = std::sqrt(rss / (n - 2.0) / sxx);
  }
  return fit;
}

CovarianceEstimate estimate_covariance(std::span<const double> a, std::span<const double> b) {
  require(a.size() == b.size() && a.size() >= 2, "estimate_covariance needs paired samples");
  const double ma = summarize(a).mean();
  const double mb = summarize(b).mean();
  RunningStats products;
  for (std::size_t i = 0; i < a.size(); ++i) products.add((a[i] - ma) * (b[i] - mb));
  const double n = static_cast<double>(a.size());
  return {products.mean() * n / (n - 1.0), products.stderr_of_mean()};
}

}  // namespace orientwalk
