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

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "orientwalk/orientation.hpp"
#include "orientwalk/random.hpp"
#include "orientwalk/record.hpp"

namespace orientwalk {

struct WalkState {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::uint64_t step = 0;

  friend bool operator==(const WalkState&, const WalkState&) = default;
};

enum class Move : std::uint8_t { kUp, kDown, kHorizontal };

/// True iff (from -> to) is an edge of the oriented lattice: a vertical unit
/// move, or a horizontal unit move in the direction epsilon_{from.y}.
bool is_edge(const WalkState& from, const WalkState& to, OrientationEnvironment& env);

/// Applies `move` at the current level; the horizontal direction is
/// epsilon_{state.y}.
inline WalkState apply_move(WalkState state, Move move, OrientationEnvironment& env) {
  switch (move) {
    case Move::kUp: ++state.y; break;
    case Move::kDown: --state.y; break;
    case Move::kHorizontal: state.x += env.value(state.y); break;
  }
  ++state.step;
  return state;
}

/// Uniform choice among the three outgoing edges.
inline Move draw_move(RandomStream& stream) { return static_cast<Move>(stream.below(3)); }

/// One transition of the simple random walk: each admissible edge with
/// probability 1/3.
inline WalkState step_walk(WalkState state, OrientationEnvironment& env, RandomStream& stream) {
  return apply_move(state, draw_move(stream), env);
}

struct ReturnStats {
  std::uint64_t horizon = 0;
  std::uint64_t returns_to_origin = 0;
  std::optional<std::uint64_t> first_return_time;
  /// (horizon, cumulative returns) at every power of ten in [10, horizon].
  std::vector<std::pair<std::uint64_t, std::uint64_t>> checkpoints;
};

struct WalkResult {
  WalkState final_state;
  ReturnStats stats;
  /// States M_0..M_k when recording was requested; k is capped.
  std::optional<std::vector<WalkState>> path;
};

/// Checkpoint horizons used for n_steps: 10, 100, ... <= n_steps.
std::vector<std::uint64_t> checkpoint_horizons(std::uint64_t n_steps);

/// Runs n_steps transitions from the origin, counting returns to (0, 0) at
/// every step n >= 1. Path storage is opt-in and capped at record_cap steps.
WalkResult simulate_walk(OrientationEnvironment& env, std::uint64_t n_steps, RandomStream& stream,
                         std::optional<std::uint64_t> record_cap = std::nullopt);

/// Mean cumulative returns per (law, checkpoint horizon) over walks_per_law
/// walks, each in a fresh environment. Rows carry extra fields
/// "growth_vs_1e4" where the 10^4 checkpoint exists.
std::vector<EstimateRecord> return_contrast(std::span<const EnvSpec> laws, std::int64_t walks_per_law,
                                            std::uint64_t n_steps, std::uint64_t seed, unsigned threads = 1);

}  // namespace orientwalk
