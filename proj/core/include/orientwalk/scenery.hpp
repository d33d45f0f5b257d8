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
#include <span>
#include <vector>

#include "orientwalk/ks.hpp"
#include "orientwalk/random.hpp"

namespace orientwalk {

enum class DeltaMode { kDiscrete, kContinuum };

struct DeltaSamplerConfig {
  DeltaMode mode = DeltaMode::kDiscrete;
  /// Internal walk length for kDiscrete.
  std::uint64_t n = 4096;
  /// Grid steps for kContinuum.
  double dt = 1e-4;
  double dx = 1e-2;
  /// Sorted, nonnegative, nonempty.
  std::vector<double> times;

  void validate() const;
};

/// One draw of Delta at each configured time.
struct DeltaSample {
  std::vector<double> values;
};

/// n^{-3/4} sum_y eps'_y eta_{[nt]-1}(y) with IID signs eps', one vertical
/// path of length ceil(n max(times)) shared by all times.
DeltaSample sample_delta_discrete(std::uint64_t n, std::span<const double> times, RandomStream& stream);

/// Brownian path on a dt grid, occupation time binned into cells of width dx,
/// one standard normal per cell: sum_b L_t(x_b) sqrt(dx) G_b.
DeltaSample sample_delta_continuum(double dt, double dx, std::span<const double> times, RandomStream& stream);

DeltaSample sample_delta(const DeltaSamplerConfig& config, RandomStream& stream);

/// `draws` independent samples; draw i uses key.child(i).
std::vector<DeltaSample> draw_deltas(const DeltaSamplerConfig& config, std::size_t draws, const StreamKey& key,
                                     unsigned threads = 1);

/// Column `index` of a batch of samples.
std::vector<double> delta_column(std::span<const DeltaSample> samples, std::size_t index);

/// KS comparison of draws of Delta_t against draws of Delta_{ct} rescaled by
/// c^{-3/4}.
KsResult check_selfsimilarity(std::span<const double> at_t, std::span<const double> at_ct, double c);

}  // namespace orientwalk
