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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace orientwalk {

/// Welford accumulator. Feeding values in a fixed order gives bit-identical
/// results, which the replicate reductions rely on.
class RunningStats {
 public:
  void add(double x);

  [[nodiscard]] std::size_t count() const { return count_; }
  [[nodiscard]] double mean() const { return mean_; }
  /// Unbiased sample variance; 0 for fewer than two values.
  [[nodiscard]] double variance() const;
  /// Standard error of the mean.
  [[nodiscard]] double stderr_of_mean() const;

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

RunningStats summarize(std::span<const double> values);

struct VarianceEstimate {
  double variance = 0.0;  // unbiased sample variance
  double std_error = 0.0;  // sqrt((m4 - m2^2) / N)
};

/// Sample variance with a fourth-moment based standard error.
VarianceEstimate estimate_variance(std::span<const double> values);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
};

/// Ordinary least squares of y on x. Requires at least two distinct x.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

/// Sample covariance of paired values with the standard error of the mean of
/// centred products.
struct CovarianceEstimate {
  double covariance = 0.0;
  double std_error = 0.0;
};
CovarianceEstimate estimate_covariance(std::span<const double> a, std::span<const double> b);

}  // namespace orientwalk
