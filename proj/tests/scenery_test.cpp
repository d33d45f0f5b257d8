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

#include "orientwalk/scenery.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "orientwalk/error.hpp"
#include "orientwalk/exact.hpp"
#include "orientwalk/stats.hpp"
#include "support/oracles.hpp"

namespace orientwalk {
namespace {

using testing::within_sigma;

DeltaSamplerConfig discrete(std::vector<double> times, std::uint64_t n = 4096) {
  DeltaSamplerConfig c;
  c.mode = DeltaMode::kDiscrete;
  c.n = n;
  c.times = std::move(times);
  return c;
}

DeltaSamplerConfig continuum(std::vector<double> times) {
  DeltaSamplerConfig c;
  c.mode = DeltaMode::kContinuum;
  c.times = std::move(times);
  return c;
}

TEST(DeltaSampler, StartsAtZero) {
  for (auto config : {discrete({0.0, 1.0}), continuum({0.0, 1.0})}) {
    const auto draws = draw_deltas(config, 20, StreamKey(1));
    for (const auto& d : draws) EXPECT_EQ(d.values[0], 0.0);
  }
}

TEST(DeltaSampler, RejectsBadConfig) {
  EXPECT_THROW(discrete({}).validate(), Error);
  EXPECT_THROW(discrete({1.0, 0.5}).validate(), Error);
  EXPECT_THROW(discrete({-0.5}).validate(), Error);
  EXPECT_THROW(discrete({1.0}, 10).validate(), Error);
  auto c = continuum({1.0});
  c.dx = 0;
  EXPECT_THROW(c.validate(), Error);
}

TEST(DeltaSampler, DiscreteMomentsMatchFiniteSizeOracle) {
  constexpr std::size_t kDraws = 20000;
  const auto column = delta_column(draw_deltas(discrete({1.0}), kDraws, StreamKey(2)), 0);
  const RunningStats s = summarize(column);
  EXPECT_TRUE(within_sigma(s.mean(), 0.0, s.stderr_of_mean()));
  const double oracle = exact::local_time_square_sum(4096) / std::pow(4096.0, 1.5);
  const VarianceEstimate v = estimate_variance(column);
  EXPECT_TRUE(within_sigma(v.variance, oracle, v.std_error)) << v.variance << " vs " << oracle;
}

TEST(DeltaSampler, VarianceScalesAsThreeHalvesPower) {
  constexpr std::size_t kDraws = 20000;
  const auto draws = draw_deltas(discrete({0.5, 1.0, 2.0}), kDraws, StreamKey(3));
  for (std::size_t i = 0; i < 3; ++i) {
    const double t = std::array{0.5, 1.0, 2.0}[i];
    const auto steps = static_cast<std::uint64_t>(4096 * t);
    const double oracle = exact::local_time_square_sum(steps) / std::pow(4096.0, 1.5);
    const VarianceEstimate v = estimate_variance(delta_column(draws, i));
    EXPECT_TRUE(within_sigma(v.variance, oracle, v.std_error)) << t;
    EXPECT_LT(std::abs(v.variance / exact::delta_variance(t) - 1.0), 0.05) << t;
  }
}

TEST(DeltaSampler, SignSymmetry) {
  constexpr std::size_t kDraws = 5000;
  const auto column = delta_column(draw_deltas(discrete({1.0}), kDraws, StreamKey(4)), 0);
  auto flipped = delta_column(draw_deltas(discrete({1.0}), kDraws, StreamKey(4, {1})), 0);
  for (auto& v : flipped) v = -v;
  EXPECT_GT(ks_two_sample(column, flipped).p_value, 0.01);
}

TEST(DeltaSampler, StationaryIncrements) {
  constexpr std::size_t kDraws = 5000;
  const auto draws = draw_deltas(discrete({0.5, 1.0, 1.5}), kDraws, StreamKey(5));
  std::vector<double> first, later;
  for (const auto& d : draws) {
    first.push_back(d.values[0]);
    later.push_back(d.values[2] - d.values[1]);
  }
  EXPECT_GT(ks_two_sample(first, later).p_value, 0.01);
}

TEST(DeltaSampler, ContinuumAgreesWithDiscrete) {
  constexpr std::size_t kDraws = 2000;
  const auto cont = delta_column(draw_deltas(continuum({1.0}), kDraws, StreamKey(6)), 0);
  const auto disc = delta_column(draw_deltas(discrete({1.0}), kDraws, StreamKey(7)), 0);
  EXPECT_GT(ks_two_sample(cont, disc).p_value, 0.01);
  const VarianceEstimate v = estimate_variance(cont);
  EXPECT_LT(std::abs(v.variance / exact::delta_unit_variance() - 1.0), 0.10) << v.variance;
}

TEST(SelfSimilarity, UnitFactorIsExact) {
  const auto column = delta_column(draw_deltas(discrete({1.0}), 200, StreamKey(8)), 0);
  const KsResult r = check_selfsimilarity(column, column, 1.0);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
}

TEST(SelfSimilarity, RescaledLawsAgree) {
  constexpr std::size_t kDraws = 5000;
  const auto at_1 = delta_column(draw_deltas(discrete({1.0}), kDraws, StreamKey(9)), 0);
  const auto at_2 = delta_column(draw_deltas(discrete({2.0}), kDraws, StreamKey(10)), 0);
  EXPECT_GT(check_selfsimilarity(at_1, at_2, 2.0).p_value, 0.01);
  EXPECT_LT(ks_two_sample(at_1, at_2).p_value, 1e-3);
}

TEST(SelfSimilarity, NeedsEnoughDraws) {
  const std::vector<double> few(50, 0.0);
  EXPECT_THROW(check_selfsimilarity(few, few, 2.0), Error);
}

TEST(DeltaSampler, ThreadCountDoesNotChangeDraws) {
  const auto one = delta_column(draw_deltas(discrete({1.0}), 64, StreamKey(11), 1), 0);
  const auto four = delta_column(draw_deltas(discrete({1.0}), 64, StreamKey(11), 4), 0);
  EXPECT_EQ(one, four);
}

}  // namespace
}  // namespace orientwalk
