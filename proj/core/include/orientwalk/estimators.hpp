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

#include "orientwalk/orientation.hpp"
#include "orientwalk/record.hpp"

namespace orientwalk {

/// P[X_{2n} = 0, Y_{2n} = 0] per n in n_grid through the embedding, one fresh
/// environment per replicate. Each row also carries "p_return_by", the
/// fraction of replicates whose embedded walk hit the origin at some even
/// time 2k with 1 <= k <= n.
std::vector<EstimateRecord> estimate_return_probability(const EnvSpec& spec, std::span<const std::uint64_t> n_grid,
                                                        std::int64_t replicates, std::uint64_t seed,
                                                        unsigned threads = 1);

/// Largest window verify_newman_bound will enumerate.
inline constexpr std::int64_t kMaxNewmanSites = 21;

struct NewmanCheckReport {
  std::int64_t window_lo = 0;
  std::int64_t window_hi = 0;
  double beta_j = 0.0;
  /// eta[i] is the local time at level window_lo + i.
  std::vector<std::uint64_t> eta;
  std::vector<double> t_grid;
  std::vector<double> lhs;
  std::vector<double> rhs;
  std::vector<bool> holds;

  [[nodiscard]] bool all_hold() const;
};

/// Compares the joint characteristic function of sum_y eps_y eta(y) under the
/// nearest-neighbour Ising law, computed by exact enumeration of the window,
/// with the product of marginals, against (t^2/2) sum_{x != y} eta(x) eta(y)
/// E[eps_x eps_y]. Throws WINDOW_TOO_LARGE beyond kMaxNewmanSites sites.
NewmanCheckReport verify_newman_bound(double beta_j, std::int64_t window_lo, std::span<const std::uint64_t> eta,
                                      std::span<const double> t_grid);

/// Same check with eta = eta_n of a freshly simulated n-step vertical path and
/// the window set to the path's range.
NewmanCheckReport verify_newman_bound_on_path(double beta_j, std::uint64_t n, std::uint64_t seed,
                                              std::span<const double> t_grid);

/// For each n in n_grid:
///   "increment_moment"  E[|X_{[n t2]} - X_{[n t1]}|^2] / n^{3/2}
///   "second_moment"     E[X_n^2], extra "exact" where a closed form exists
/// followed by one "second_moment_slope" row: the least-squares slope of
/// log E[X_n^2] against log n.
std::vector<EstimateRecord> variance_scaling(const EnvSpec& spec, std::span<const std::uint64_t> n_grid, double t1,
                                             double t2, std::int64_t replicates, std::uint64_t seed,
                                             unsigned threads = 1);

/// E[eps_x eps_y] = r^|x-y| for the laws that have that form; NaN otherwise.
double correlation_ratio(const EnvSpec& spec);

struct FltReport {
  /// Var(M_{[nt],x} / n^{3/4}); extra: "target", "ratio".
  EstimateRecord variance;
  /// KS statistic against scale * Delta_t draws; extra: "p_value".
  EstimateRecord ks;
  /// Fraction of replicates with |M_{[nt],y}| / n^{3/4} <= 0.2; extra: "max".
  EstimateRecord vertical;
};

struct FltOptions {
  std::uint64_t reference_n = 4096;
  std::size_t reference_draws = 5000;
  double vertical_threshold = 0.2;
};

/// Runs the full walk for [nt] steps per replicate and compares the rescaled
/// horizontal coordinate with the limit law.
FltReport flt_check(const EnvSpec& spec, std::uint64_t n, std::int64_t replicates, double t, std::uint64_t seed,
                    unsigned threads = 1, const FltOptions& options = {});

/// Mean and standard error of T_n / n; extra "var_over_n" = Var(T_n) / n
/// and its standard error "var_over_n_se".
EstimateRecord tn_ratio(std::uint64_t n, std::int64_t replicates, std::uint64_t seed, unsigned threads = 1);

}  // namespace orientwalk
