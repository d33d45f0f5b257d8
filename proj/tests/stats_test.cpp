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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace orientwalk {
namespace {

TEST(RunningStats, MatchesTwoPassFormulas) {
  const std::vector<double> xs{1.0, 4.0, 2.5, -3.0, 7.25};
  const RunningStats s = summarize(xs);
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= xs.size();
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  EXPECT_NEAR(s.mean(), mean, 1e-14);
  EXPECT_NEAR(s.variance(), ss / (xs.size() - 1), 1e-13);
  EXPECT_NEAR(s.stderr_of_mean(), std::sqrt(ss / (xs.size() - 1) / xs.size()), 1e-13);
}

TEST(RunningStats, ConstantInputHasZeroSpread) {
  const std::vector<double> xs(10, 1.0);
  const RunningStats s = summarize(xs);
  EXPECT_EQ(s.mean(), 1.0);
  EXPECT_EQ(s.variance(), 0.0);
  EXPECT_EQ(s.stderr_of_mean(), 0.0);
}

TEST(FitLine, RecoversExactLine) {
  const std::vector<double> x{0, 1, 2, 3, 4};
  std::vector<double> y;
  for (double v : x) y.push_back(2.5 - 1.5 * v);
  const LinearFit fit = fit_line(x, y);
  EXPECT_NEAR(fit.slope, -1.5, 1e-12);
  EXPECT_NEAR(fit.intercept, 2.5, 1e-12);
  EXPECT_NEAR(fit.slope_stderr, 0.0, 1e-12);
}

TEST(EstimateCovariance, PerfectlyCorrelatedPairs) {
  const std::vector<double> a{1, -1, 1, -1, 1, 1, -1, -1};
  const CovarianceEstimate c = estimate_covariance(a, a);
  EXPECT_NEAR(c.covariance, 1.0 * 8 / 7, 1e-12);
}

}  // namespace
}  // namespace orientwalk
