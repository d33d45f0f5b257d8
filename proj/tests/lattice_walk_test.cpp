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

#include "orientwalk/lattice_walk.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <map>

#include "support/oracles.hpp"

namespace orientwalk {
namespace {

using testing::within_sigma;

TEST(StepWalk, SuccessorsFromOriginAreEquallyLikely) {
  OrientationEnvironment env(EnvSpec::alternate(), StreamKey(1));
  RandomStream stream = derive_stream(StreamKey(1, {1}));
  constexpr int kSteps = 1'000'000;
  std::map<std::pair<std::int64_t, std::int64_t>, int> counts;
  for (int i = 0; i < kSteps; ++i) {
    const WalkState next = step_walk(WalkState{}, env, stream);
    ++counts[{next.x, next.y}];
    ASSERT_EQ(next.step, 1u);
  }
  ASSERT_EQ(counts.size(), 3u);
  const double se = std::sqrt((1.0 / 3) * (2.0 / 3) / kSteps);
  for (auto key : {std::pair<std::int64_t, std::int64_t>{0, 1}, {0, -1}, {1, 0}}) {
    EXPECT_TRUE(within_sigma(counts[key] / double(kSteps), 1.0 / 3.0, se)) << key.first << "," << key.second;
  }
}

TEST(StepWalk, HorizontalMoveFollowsLevelOrientation) {
  OrientationEnvironment env(EnvSpec::alternate(), StreamKey(1));
  ASSERT_EQ(env.value(3), -1);
  const WalkState next = apply_move(WalkState{2, 3, 0}, Move::kHorizontal, env);
  EXPECT_EQ(next, (WalkState{1, 3, 1}));
  EXPECT_EQ(apply_move(WalkState{2, 3, 5}, Move::kUp, env), (WalkState{2, 4, 6}));
  EXPECT_EQ(apply_move(WalkState{2, 3, 5}, Move::kDown, env), (WalkState{2, 2, 6}));
}

TEST(IsEdge, MatchesLatticeDefinition) {
  OrientationEnvironment env(EnvSpec::alternate(), StreamKey(1));
  EXPECT_TRUE(is_edge({0, 0, 0}, {1, 0, 0}, env));
  EXPECT_FALSE(is_edge({0, 0, 0}, {-1, 0, 0}, env));
  EXPECT_TRUE(is_edge({0, 1, 0}, {-1, 1, 0}, env));
  EXPECT_TRUE(is_edge({5, 1, 0}, {5, 2, 0}, env));
  EXPECT_TRUE(is_edge({5, 1, 0}, {5, 0, 0}, env));
  EXPECT_FALSE(is_edge({5, 1, 0}, {6, 2, 0}, env));
  EXPECT_FALSE(is_edge({5, 1, 0}, {5, 1, 0}, env));
}

// Property: along any simulated path every step is a lattice edge, exactly
// one coordinate moves by one, and horizontal moves at level y equal eps_y.
TEST(SimulateWalk, PathInvariantsHoldForEveryLaw) {
  const std::vector<EnvSpec> laws{EnvSpec::iid(), EnvSpec::alternate(), EnvSpec::constant(),
                                  EnvSpec::ising_nn(0.5), EnvSpec::ising_lr(0.3, 1.0, 3.0, 2000, 5, 8)};
  for (std::size_t l = 0; l < laws.size(); ++l) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      OrientationEnvironment env(laws[l], StreamKey(seed, {l, 0}));
      RandomStream stream = derive_stream(StreamKey(seed, {l, 1}));
      const WalkResult r = simulate_walk(env, 2000, stream, 2000);
      ASSERT_TRUE(r.path.has_value());
      const auto& path = *r.path;
      ASSERT_EQ(path.size(), 2001u);
      for (std::size_t k = 1; k < path.size(); ++k) {
        const WalkState& a = path[k - 1];
        const WalkState& b = path[k];
        ASSERT_EQ(b.step, a.step + 1);
        ASSERT_TRUE(is_edge(a, b, env));
        ASSERT_EQ(std::llabs(b.x - a.x) + std::llabs(b.y - a.y), 1);
        if (b.x != a.x) ASSERT_EQ(b.x - a.x, env.value(a.y));
        ASSERT_LE(std::llabs(b.y), static_cast<std::int64_t>(b.step));
      }
      EXPECT_EQ(path.back(), r.final_state);
    }
  }
}

TEST(SimulateWalk, MoveTypeAndVerticalFrequencies) {
  OrientationEnvironment env(EnvSpec::iid(), StreamKey(2, {0}));
  RandomStream stream = derive_stream(StreamKey(2, {1}));
  constexpr int kSteps = 1'000'000;
  int up = 0, down = 0, horizontal = 0;
  WalkState s;
  for (int i = 0; i < kSteps; ++i) {
    const WalkState next = step_walk(s, env, stream);
    if (next.y > s.y) ++up;
    else if (next.y < s.y) ++down;
    else ++horizontal;
    s = next;
  }
  const double se = std::sqrt((1.0 / 3) * (2.0 / 3) / kSteps);
  for (int c : {up, down, horizontal}) EXPECT_TRUE(within_sigma(c / double(kSteps), 1.0 / 3.0, se));
  const double vertical = up + down;
  EXPECT_TRUE(within_sigma(up / vertical, 0.5, std::sqrt(0.25 / vertical)));
}

TEST(SimulateWalk, ZeroStepsHasNoReturns) {
  OrientationEnvironment env(EnvSpec::iid(), StreamKey(3));
  RandomStream stream = derive_stream(StreamKey(3, {1}));
  const WalkResult r = simulate_walk(env, 0, stream);
  EXPECT_EQ(r.stats.returns_to_origin, 0u);
  EXPECT_FALSE(r.stats.first_return_time.has_value());
  EXPECT_EQ(r.final_state, WalkState{});
  EXPECT_FALSE(r.path.has_value());
}

TEST(SimulateWalk, FirstStepNeverReturns) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    OrientationEnvironment env(EnvSpec::iid(), StreamKey(seed));
    RandomStream stream = derive_stream(StreamKey(seed, {1}));
    const WalkResult r = simulate_walk(env, 1, stream);
    EXPECT_NE(std::pair(r.final_state.x, r.final_state.y), std::pair(std::int64_t{0}, std::int64_t{0}));
    EXPECT_EQ(r.stats.returns_to_origin, 0u);
  }
}

TEST(SimulateWalk, CheckpointsAreCumulativeAndConsistent) {
  OrientationEnvironment env(EnvSpec::alternate(), StreamKey(4));
  RandomStream stream = derive_stream(StreamKey(4, {1}));
  const WalkResult r = simulate_walk(env, 123456, stream);
  ASSERT_EQ(r.stats.checkpoints.size(), 5u);
  EXPECT_EQ(r.stats.checkpoints.back().first, 100000u);
  for (std::size_t i = 1; i < r.stats.checkpoints.size(); ++i) {
    EXPECT_GE(r.stats.checkpoints[i].second, r.stats.checkpoints[i - 1].second);
  }
  EXPECT_LE(r.stats.checkpoints.back().second, r.stats.returns_to_origin);
  if (r.stats.returns_to_origin > 0) {
    ASSERT_TRUE(r.stats.first_return_time.has_value());
    EXPECT_LE(*r.stats.first_return_time, r.stats.horizon);
    EXPECT_EQ(*r.stats.first_return_time % 2, 0u);
  }
}

TEST(SimulateWalk, PathRecordingIsCapped) {
  OrientationEnvironment env(EnvSpec::iid(), StreamKey(5));
  RandomStream stream = derive_stream(StreamKey(5, {1}));
  const WalkResult r = simulate_walk(env, 10000, stream, 100);
  ASSERT_TRUE(r.path.has_value());
  EXPECT_EQ(r.path->size(), 101u);
  EXPECT_EQ(r.final_state.step, 10000u);
}

TEST(SimulateWalk, RecordingDoesNotChangeTheWalk) {
  OrientationEnvironment env_a(EnvSpec::ising_nn(0.5), StreamKey(6));
  OrientationEnvironment env_b(EnvSpec::ising_nn(0.5), StreamKey(6));
  RandomStream sa = derive_stream(StreamKey(6, {1}));
  RandomStream sb = derive_stream(StreamKey(6, {1}));
  const WalkResult a = simulate_walk(env_a, 5000, sa);
  const WalkResult b = simulate_walk(env_b, 5000, sb, 5000);
  EXPECT_EQ(a.final_state, b.final_state);
  EXPECT_EQ(a.stats.returns_to_origin, b.stats.returns_to_origin);
}

TEST(CheckpointHorizons, PowersOfTen) {
  EXPECT_TRUE(checkpoint_horizons(9).empty());
  EXPECT_EQ(checkpoint_horizons(1'000'000), (std::vector<std::uint64_t>{10, 100, 1000, 10000, 100000, 1000000}));
}

TEST(ReturnContrast, AlternateReturnsMoreThanIid) {
  const std::vector<EnvSpec> laws{EnvSpec::alternate(), EnvSpec::iid()};
  const auto rows = return_contrast(laws, 200, 100000, 11);
  ASSERT_EQ(rows.size(), 10u);
  const auto& alt = rows[4];
  const auto& iid = rows[9];
  ASSERT_EQ(alt.n, 100000);
  ASSERT_EQ(iid.law, "iid");
  EXPECT_GT(alt.value, iid.value);
  EXPECT_GT(alt.extra_value("growth_vs_1e4"), iid.extra_value("growth_vs_1e4"));
  for (const auto& row : rows) {
    EXPECT_GE(row.std_error, 0.0);
    EXPECT_EQ(row.replicates, 200);
  }
}

TEST(ReturnContrast, DeterministicAcrossThreadCounts) {
  const std::vector<EnvSpec> laws{EnvSpec::ising_nn(0.5)};
  const auto a = return_contrast(laws, 16, 1000, 12, 1);
  const auto b = return_contrast(laws, 16, 1000, 12, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].value, b[i].value);
    EXPECT_EQ(a[i].std_error, b[i].std_error);
  }
}

}  // namespace
}  // namespace orientwalk
