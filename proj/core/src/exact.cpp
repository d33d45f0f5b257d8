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

#include "orientwalk/exact.hpp"

#include <cmath>
#include <numbers>

#include "orientwalk/embedding.hpp"

namespace orientwalk::exact {
namespace {

double log_binomial_pmf(std::uint64_t j, std::uint64_t k) {
  const double jd = static_cast<double>(j);
  const double kd = static_cast<double>(k);
  return std::lgamma(jd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(jd - kd + 1.0) - jd * std::numbers::ln2;
}

}  // namespace

double srw_return_probability(std::uint64_t j) {
  if (j % 2 != 0) return 0.0;
  return std::exp(log_binomial_pmf(j, j / 2));
}

double srw_power_moment(std::uint64_t j, double r) {
  if (r == 0.0) return srw_return_probability(j);
  double total = 0.0;
  for (std::uint64_t k = 0; k <= j; ++k) {
    const auto distance = static_cast<double>(k > j - k ? 2 * k - j : j - 2 * k);
    total += std::exp(log_binomial_pmf(j, k)) * std::pow(r, distance);
  }
  return total;
}

double local_time_square_sum(std::uint64_t n) {
  double total = static_cast<double>(n);
  for (std::uint64_t j = 2; j < n; j += 2) total += 2.0 * static_cast<double>(n - j) * srw_return_probability(j);
  return total;
}

double embedded_second_moment(std::uint64_t n, double r) {
  // X_n = sum_k eps_{Y_k} xi_k with E[xi^2] = Var + m^2 = 1 and
  // E[xi_k xi_l] = m^2 for k != l.
  const double m2 = kMeanJump * kMeanJump;
  double total = static_cast<double>(n) * (kJumpVariance + m2);
  for (std::uint64_t j = 1; j < n; ++j) total += 2.0 * m2 * static_cast<double>(n - j) * srw_power_moment(j, r);
  return total;
}

double delta_unit_variance() { return 8.0 / (3.0 * std::sqrt(2.0 * std::numbers::pi)); }

double delta_variance(double t) { return std::pow(t, 1.5) * delta_unit_variance(); }

double walk_limit_scale() { return kMeanJump / std::pow(1.0 + kMeanJump, 0.75); }

double ising_nn_correlation(double beta_j, std::uint64_t lag) {
  return std::pow(std::tanh(beta_j), static_cast<double>(lag));
}

}  // namespace orientwalk::exact
