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

#include <cmath>
#include <cstdlib>

#include "orientwalk/error.hpp"
#include "orientwalk/parallel.hpp"
#include "orientwalk/stats.hpp"

namespace orientwalk {

bool is_edge(const WalkState& from, const WalkState& to, OrientationEnvironment& env) {
  if (to.x == from.x) return std::llabs(to.y - from.y) == 1;
  return to.y == from.y && to.x == from.x + env.value(from.y);
}

std::vector<std::uint64_t> checkpoint_horizons(std::uint64_t n_steps) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t h = 10; h <= n_steps; h *= 10) {
    out.push_back(h);
    if (h > UINT64_MAX / 10) break;
  }
  return out;
}

WalkResult simulate_walk(OrientationEnvironment& env, std::uint64_t n_steps, RandomStream& stream,
                         std::optional<std::uint64_t> record_cap) {
  WalkResult result;
  result.stats.horizon = n_steps;
  if (record_cap) {
    result.path.emplace();
    result.path->reserve(static_cast<std::size_t>(std::min(*record_cap, n_steps) + 1));
    result.path->push_back(result.final_state);
  }

  const auto horizons = checkpoint_horizons(n_steps);
  auto next_checkpoint = horizons.begin();
  WalkState state;
  std::uint64_t returns = 0;
  while (state.step < n_steps) {
    state = step_walk(state, env, stream);
    if (state.x == 0 && state.y == 0) {
      if (returns == 0) result.stats.first_return_time = state.step;
      ++returns;
    }
    if (next_checkpoint != horizons.end() && state.step == *next_checkpoint) {
      result.stats.checkpoints.emplace_back(state.step, returns);
      ++next_checkpoint;
    }
    if (result.path && state.step <= *record_cap) result.path->push_back(state);
  }
  result.final_state = state;
  result.stats.returns_to_origin = returns;
  return result;
}

std::vector<EstimateRecord> return_contrast(std::span<const EnvSpec> laws, std::int64_t walks_per_law,
                                            std::uint64_t n_steps, std::uint64_t seed, unsigned threads) {
  require(walks_per_law >= 1, "return_contrast needs at least one walk per law");
  const auto horizons = checkpoint_horizons(n_steps);
  const auto walks = static_cast<std::size_t>(walks_per_law);

  std::vector<EstimateRecord> rows;
  for (std::size_t l = 0; l < laws.size(); ++l) {
    const EnvSpec& spec = laws[l];
    const StreamKey base(seed, {role::kWalk, static_cast<std::uint64_t>(spec.law), l});
    auto counts = parallel_map<std::vector<std::pair<std::uint64_t, std::uint64_t>>>(walks, threads, [&](std::size_t w) {
      const StreamKey key = base.child(w);
      OrientationEnvironment env(spec, key.child(role::kEnvironment));
      RandomStream stream = derive_stream(key.child(role::kWalk));
      return simulate_walk(env, n_steps, stream).stats.checkpoints;
    });

    std::vector<RunningStats> per_horizon(horizons.size());
    for (const auto& c : counts) {
      for (std::size_t h = 0; h < horizons.size(); ++h) per_horizon[h].add(static_cast<double>(c[h].second));
    }
    double base_mean = std::nan("");
    for (std::size_t h = 0; h < horizons.size(); ++h) {
      if (horizons[h] == 10000) base_mean = per_horizon[h].mean();
    }
    for (std::size_t h = 0; h < horizons.size(); ++h) {
      EstimateRecord row;
      row.estimator_id = "returns_to_origin";
      row.law = std::string(law_name(spec.law));
      row.params = spec.params();
      row.n = static_cast<std::int64_t>(horizons[h]);
      row.replicates = walks_per_law;
      row.value = per_horizon[h].mean();
      row.std_error = per_horizon[h].stderr_of_mean();
      row.seed = seed;
      if (!std::isnan(base_mean) && horizons[h] >= 10000) {
        row.extra.emplace_back("growth_vs_1e4", base_mean > 0.0 ? row.value / base_mean : std::nan(""));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace orientwalk
