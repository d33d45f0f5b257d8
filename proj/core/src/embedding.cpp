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

#include "orientwalk/embedding.hpp"

#include <bit>

#include "orientwalk/error.hpp"
#include "orientwalk/parallel.hpp"
#include "orientwalk/stats.hpp"

namespace orientwalk {
namespace {

struct LevelTotals {
  std::uint64_t visits = 0;
  std::uint64_t jump_sum = 0;
};

// Next vertical move and the horizontal run preceding it.
struct Excursion {
  std::uint64_t run = 0;
  int vertical = 0;
};

inline Excursion draw_excursion(RandomStream& stream) {
  Excursion e;
  Move move;
  while ((move = draw_move(stream)) == Move::kHorizontal) ++e.run;
  e.vertical = move == Move::kUp ? 1 : -1;
  return e;
}

}  // namespace

std::vector<std::uint64_t> LocalTimeTable::dense(std::int64_t lo, std::int64_t hi) const {
  std::vector<std::uint64_t> out;
  for (std::int64_t y = lo; y <= hi; ++y) out.push_back(at(y));
  return out;
}

VerticalSample simulate_vertical(std::uint64_t n, RandomStream& stream) {
  require(n >= 1, "simulate_vertical needs n >= 1");
  VerticalSample sample;
  auto& positions = sample.path.positions;
  positions.reserve(n + 1);
  positions.push_back(0);
  for (std::uint64_t k = 0; k < n; ++k) {
    sample.local_times.add_visit(positions.back());
    positions.push_back(positions.back() + draw_vertical_step(stream));
  }
  return sample;
}

EmbeddingTrace sample_embedding_trace(std::uint64_t n, RandomStream& stream) {
  EmbeddingTrace trace;
  trace.vertical.positions.reserve(n + 1);
  trace.jumps.reserve(n);
  trace.vertical.positions.push_back(0);
  for (std::uint64_t k = 0; k < n; ++k) {
    const Excursion e = draw_excursion(stream);
    trace.jumps.push_back(e.run);
    trace.vertical.positions.push_back(trace.vertical.positions.back() + e.vertical);
  }
  return trace;
}

EmbeddedState embed_from_trace(OrientationEnvironment& env, const EmbeddingTrace& trace) {
  const std::uint64_t n = trace.vertical.steps();
  std::unordered_map<std::int64_t, LevelTotals> levels;
  for (std::uint64_t k = 0; k < n; ++k) {
    auto& totals = levels[trace.vertical.positions[k]];
    ++totals.visits;
    totals.jump_sum += trace.jumps[k];
  }

  EmbeddedState state;
  state.n = n;
  state.y = trace.vertical.positions.back();
  state.clock = n;
  std::int64_t scenery = 0;
  for (const auto& [level, totals] : levels) {
    const int eps = env.value(level);
    state.x += eps * static_cast<std::int64_t>(totals.jump_sum);
    state.clock += totals.jump_sum;
    scenery += eps * static_cast<std::int64_t>(totals.visits);
  }
  state.x2 = kMeanJump * static_cast<double>(scenery);
  state.x1 = static_cast<double>(state.x) - state.x2;
  return state;
}

void EmbeddedWalk::advance() {
  const Excursion e = draw_excursion(stream_);
  const int eps = env_.value(y_);
  x_ += eps * static_cast<std::int64_t>(e.run);
  clock_ += 1 + e.run;
  scenery_ += eps;
  y_ += e.vertical;
  ++n_;
}

EmbeddedState EmbeddedWalk::state() const {
  EmbeddedState state;
  state.n = n_;
  state.x = x_;
  state.y = y_;
  state.clock = clock_;
  state.x2 = kMeanJump * static_cast<double>(scenery_);
  state.x1 = static_cast<double>(x_) - state.x2;
  return state;
}

EmbeddedState embed(OrientationEnvironment& env, std::uint64_t n, RandomStream& stream) {
  EmbeddedWalk walk(env, stream);
  walk.advance(n);
  return walk.state();
}

bool coupled_check(OrientationEnvironment& env, std::uint64_t n, RandomStream& stream) {
  const EmbeddingTrace trace = sample_embedding_trace(n, stream);
  const auto& ys = trace.vertical.positions;

  // Embedded side: X_j and T_j accumulated visit by visit from the trace.
  // Walk side: the expanded full walk, which reads epsilon at its own level.
  WalkState walk;
  std::int64_t embedded_x = 0;
  std::uint64_t embedded_clock = 0;
  std::uint64_t horizontal_steps = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    for (std::uint64_t i = 0; i < trace.jumps[j]; ++i) {
      const WalkState next = apply_move(walk, Move::kHorizontal, env);
      if (!is_edge(walk, next, env)) return false;
      walk = next;
      ++horizontal_steps;
    }
    const WalkState next = apply_move(walk, ys[j + 1] > ys[j] ? Move::kUp : Move::kDown, env);
    if (!is_edge(walk, next, env)) return false;
    walk = next;

    embedded_x += env.value(ys[j]) * static_cast<std::int64_t>(trace.jumps[j]);
    embedded_clock += 1 + trace.jumps[j];
    if (walk.step != embedded_clock || walk.x != embedded_x || walk.y != ys[j + 1]) return false;

    // Full per-level evaluation on a doubling schedule and at the end.
    const std::uint64_t done = j + 1;
    if (std::has_single_bit(done) || done == n) {
      EmbeddingTrace prefix;
      prefix.vertical.positions.assign(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(done + 1));
      prefix.jumps.assign(trace.jumps.begin(), trace.jumps.begin() + static_cast<std::ptrdiff_t>(done));
      const EmbeddedState grouped = embed_from_trace(env, prefix);
      if (grouped.x != walk.x || grouped.y != walk.y || grouped.clock != walk.step) return false;
      if (grouped.x1 + grouped.x2 != static_cast<double>(grouped.x)) return false;
    }
  }
  return walk.step - n == horizontal_steps;
}

EstimateRecord x1_variance_probe(std::uint64_t n, std::int64_t replicates, std::uint64_t seed, unsigned threads) {
  require(n >= 1, "x1_variance_probe needs n >= 1");
  require(replicates >= 2, "x1_variance_probe needs at least two replicates");
  const StreamKey base(seed, {0x7831, n});
  const auto squares = parallel_map<double>(static_cast<std::size_t>(replicates), threads, [&](std::size_t r) {
    const StreamKey key = base.child(r);
    OrientationEnvironment env(EnvSpec::iid(), key.child(role::kEnvironment));
    RandomStream stream = derive_stream(key.child(role::kWalk));
    const EmbeddedState s = embed(env, n, stream);
    return s.x1 * s.x1 / static_cast<double>(n);
  });
  const RunningStats stats = summarize(squares);
  EstimateRecord row;
  row.estimator_id = "x1_second_moment_over_n";
  row.law = "iid";
  row.n = static_cast<std::int64_t>(n);
  row.replicates = replicates;
  row.value = stats.mean();
  row.std_error = stats.stderr_of_mean();
  row.seed = seed;
  row.extra = {{"expected", kJumpVariance}};
  return row;
}

}  // namespace orientwalk
