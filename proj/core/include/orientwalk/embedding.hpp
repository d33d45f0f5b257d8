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
#include <unordered_map>
#include <vector>

#include "orientwalk/lattice_walk.hpp"
#include "orientwalk/orientation.hpp"
#include "orientwalk/random.hpp"
#include "orientwalk/record.hpp"

namespace orientwalk {

/// Mean m of the horizontal run length between vertical moves.
inline constexpr double kMeanJump = 0.5;
/// Variance of the same law, p / (1 - p)^2 with p = 1/3.
inline constexpr double kJumpVariance = 0.75;

/// Y_0..Y_n of the vertical walk, Y_0 = 0.
struct VerticalPath {
  std::vector<std::int64_t> positions;

  [[nodiscard]] std::uint64_t steps() const { return positions.empty() ? 0 : positions.size() - 1; }
};

/// Sparse local times eta(y) = #{k <= time : Y_k = y}.
class LocalTimeTable {
 public:
  void add_visit(std::int64_t level) {
    ++counts_[level];
    ++total_;
  }

  [[nodiscard]] std::uint64_t at(std::int64_t level) const {
    const auto it = counts_.find(level);
    return it == counts_.end() ? 0 : it->second;
  }
  /// Sum over levels; equals time + 1.
  [[nodiscard]] std::uint64_t total() const { return total_; }
  [[nodiscard]] const std::unordered_map<std::int64_t, std::uint64_t>& counts() const { return counts_; }
  /// Dense copy over [lo, hi], zero where unvisited.
  [[nodiscard]] std::vector<std::uint64_t> dense(std::int64_t lo, std::int64_t hi) const;

 private:
  std::unordered_map<std::int64_t, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// +1 or -1 with probability 1/2 each.
inline int draw_vertical_step(RandomStream& stream) { return (stream.next_u64() >> 63) != 0 ? 1 : -1; }

struct VerticalSample {
  VerticalPath path;
  /// eta_{n-1}: visits at times 0..n-1.
  LocalTimeTable local_times;
};

/// Simple symmetric walk of n >= 1 steps and its local times up to n - 1.
VerticalSample simulate_vertical(std::uint64_t n, RandomStream& stream);

/// Number of horizontal moves before the next vertical one when each of the
/// three edges is chosen with probability 1/3: P(k) = (2/3)(1/3)^k.
/// Consumes the same draws as the corresponding full-walk steps.
inline std::uint64_t sample_geometric(RandomStream& stream) {
  std::uint64_t k = 0;
  while (draw_move(stream) == Move::kHorizontal) ++k;
  return k;
}

/// (X_n, Y_n, T_n) together with X = X1 + X2, where X2 = m sum_y eps_y eta(y)
/// is the scenery part and X1 the centred remainder.
struct EmbeddedState {
  std::uint64_t n = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::uint64_t clock = 0;
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Vertical path plus the run length drawn at each visit: jumps[k] belongs to
/// the visit of level Y_k at time k.
struct EmbeddingTrace {
  VerticalPath vertical;
  std::vector<std::uint64_t> jumps;
};

/// Draws an n-step trace. The stream is consumed move by move exactly like
/// step_walk, so the trace is the full walk observed at its vertical moves.
EmbeddingTrace sample_embedding_trace(std::uint64_t n, RandomStream& stream);

/// Evaluates X_n, T_n, X1, X2 from a trace by grouping run lengths per level.
EmbeddedState embed_from_trace(OrientationEnvironment& env, const EmbeddingTrace& trace);

/// Incremental embedding: each advance() performs one vertical move of Y
/// together with the horizontal run drawn for the visit it leaves.
class EmbeddedWalk {
 public:
  EmbeddedWalk(OrientationEnvironment& env, RandomStream& stream) : env_(env), stream_(stream) {}

  void advance();
  void advance(std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) advance();
  }

  [[nodiscard]] std::uint64_t n() const { return n_; }
  [[nodiscard]] std::int64_t x() const { return x_; }
  [[nodiscard]] std::int64_t y() const { return y_; }
  [[nodiscard]] std::uint64_t clock() const { return clock_; }
  [[nodiscard]] EmbeddedState state() const;

 private:
  OrientationEnvironment& env_;
  RandomStream& stream_;
  std::uint64_t n_ = 0;
  std::int64_t x_ = 0;
  std::int64_t y_ = 0;
  std::uint64_t clock_ = 0;
  std::int64_t scenery_ = 0;
};

/// Streaming embedding in O(1) memory; consumes the stream like
/// sample_embedding_trace.
EmbeddedState embed(OrientationEnvironment& env, std::uint64_t n, RandomStream& stream);

/// Builds the full walk by expanding each visit into its horizontal run
/// followed by one vertical move, and checks that the walk sits at (X_j, Y_j)
/// at time T_j for every j <= n, that every step is a lattice edge, and that
/// T_n - n equals the number of horizontal steps.
bool coupled_check(OrientationEnvironment& env, std::uint64_t n, RandomStream& stream);

/// E[(X1_n)^2] / n under IID orientations.
EstimateRecord x1_variance_probe(std::uint64_t n, std::int64_t replicates, std::uint64_t seed,
                                 unsigned threads = 1);

}  // namespace orientwalk
