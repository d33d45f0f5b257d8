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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "orientwalk/embedding.hpp"
#include "orientwalk/error.hpp"
#include "orientwalk/orientation.hpp"
#include "orientwalk/parallel.hpp"

namespace orientwalk {

void DeltaSamplerConfig::validate() const {
  require(!times.empty(), "times must be nonempty");
  require(std::is_sorted(times.begin(), times.end()), "times must be sorted");
  require(times.front() >= 0.0, "times must be nonnegative");
  if (mode == DeltaMode::kDiscrete) {
    require(n >= 100, "discrete Delta sampler needs n >= 100");
    require(times.back() * static_cast<double>(n) >= 1.0, "max(times) * n must be >= 1");
  } else {
    require(dt > 0.0 && dx > 0.0, "dt and dx must be positive");
  }
}

DeltaSample sample_delta_discrete(std::uint64_t n, std::span<const double> times, RandomStream& stream) {
  // Signs come from an independent counter-based stream keyed off this one.
  const std::uint64_t sign_seed = stream.next_u64();
  OrientationEnvironment signs(EnvSpec::iid(), StreamKey(sign_seed, {role::kScenery}));

  const double scale = std::pow(static_cast<double>(n), -0.75);
  DeltaSample out;
  out.values.reserve(times.size());
  std::int64_t y = 0;
  std::int64_t partial = 0;  // sum_{j < k} eps'_{Y_j}
  std::uint64_t k = 0;
  for (double t : times) {
    const auto target = static_cast<std::uint64_t>(std::floor(static_cast<double>(n) * t));
    for (; k < target; ++k) {
      partial += signs.value(y);
      y += draw_vertical_step(stream);
    }
    out.values.push_back(scale * static_cast<double>(partial));
  }
  return out;
}

DeltaSample sample_delta_continuum(double dt, double dx, std::span<const double> times, RandomStream& stream) {
  const RandomStream cells(stream.next_u64(), role::kGaussian);
  std::unordered_map<std::int64_t, double> gaussian;
  auto cell_normal = [&](std::int64_t cell) {
    auto [it, inserted] = gaussian.try_emplace(cell, 0.0);
    if (inserted) {
      const std::uint64_t base = 2 * (cell >= 0 ? 2 * static_cast<std::uint64_t>(cell)
                                                : 2 * static_cast<std::uint64_t>(-cell) - 1);
      const double u1 = 1.0 - cells.uniform_at(base);
      const double u2 = cells.uniform_at(base + 1);
      it->second = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
    return it->second;
  };

  const double sqrt_dt = std::sqrt(dt);
  const double weight = dt / std::sqrt(dx);  // occupation dt, times sqrt(dx) / dx
  DeltaSample out;
  out.values.reserve(times.size());
  double w = 0.0;
  double delta = 0.0;
  std::uint64_t k = 0;
  for (double t : times) {
    const auto target = static_cast<std::uint64_t>(std::llround(t / dt));
    for (; k < target; ++k) {
      delta += weight * cell_normal(static_cast<std::int64_t>(std::floor(w / dx)));
      w += sqrt_dt * standard_normal(stream);
    }
    out.values.push_back(delta);
  }
  return out;
}

DeltaSample sample_delta(const DeltaSamplerConfig& config, RandomStream& stream) {
  return config.mode == DeltaMode::kDiscrete ? sample_delta_discrete(config.n, config.times, stream)
                                             : sample_delta_continuum(config.dt, config.dx, config.times, stream);
}

std::vector<DeltaSample> draw_deltas(const DeltaSamplerConfig& config, std::size_t draws, const StreamKey& key,
                                     unsigned threads) {
  config.validate();
  return parallel_map<DeltaSample>(draws, threads, [&](std::size_t i) {
    RandomStream stream = derive_stream(key.child(i));
    return sample_delta(config, stream);
  });
}

std::vector<double> delta_column(std::span<const DeltaSample> samples, std::size_t index) {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.values.at(index));
  return out;
}

KsResult check_selfsimilarity(std::span<const double> at_t, std::span<const double> at_ct, double c) {
  require(at_t.size() >= 100 && at_ct.size() >= 100, "self-similarity check needs >= 100 draws per side");
  require(c > 0.0, "scale factor c must be positive");
  const double factor = std::pow(c, -0.75);
  std::vector<double> rescaled(at_ct.begin(), at_ct.end());
  for (auto& v : rescaled) v *= factor;
  return ks_two_sample(at_t, rescaled);
}

}  // namespace orientwalk
