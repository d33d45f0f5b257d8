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

/// Closed-form and finite-n exact values that Monte Carlo estimates are
/// compared against.
namespace orientwalk::exact {

/// P(Y_j = 0) for the simple symmetric walk: C(j, j/2) 2^-j for even j.
double srw_return_probability(std::uint64_t j);

/// E[r^|Y_j|] over the binomial law of Y_j. r = 0 gives P(Y_j = 0).
double srw_power_moment(std::uint64_t j, double r);

/// E[sum_y eta_{n-1}(y)^2] = n + 2 sum_{j=1}^{n-1} (n - j) P(Y_j = 0).
double local_time_square_sum(std::uint64_t n);

/// E[X_n^2] for orientations with E[eps_x eps_y] = r^|x-y| (r = 0: IID,
/// r = tanh(beta J): nearest-neighbour Ising, r = -1: alternate,
/// r = 1: constant).
double embedded_second_moment(std::uint64_t n, double r);

/// Var(Delta_1) = 2 int_0^1 (1 - s) (2 pi s)^-1/2 ds = 8 / (3 sqrt(2 pi)).
double delta_unit_variance();

/// Var(Delta_t) = t^{3/2} Var(Delta_1).
double delta_variance(double t);

/// m / (1 + m)^{3/4} with m = 1/2.
double walk_limit_scale();

/// tanh(beta_j)^lag.
double ising_nn_correlation(double beta_j, std::uint64_t lag);

}  // namespace orientwalk::exact
