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
#include <string>
#include <string_view>
#include <vector>

#include "orientwalk/random.hpp"
#include "orientwalk/record.hpp"
#include "orientwalk/stats.hpp"

namespace orientwalk {

/// Law of the orientation field (epsilon_y).
enum class Law { kIid, kAlternate, kConstant, kIsingNN, kIsingLR };

/// CLI spelling: "iid", "alternate", "constant", "ising-nn", "ising-lr".
std::string_view law_name(Law law);
Law parse_law(std::string_view name);

/// Law plus its parameters. Fields that a law does not use are ignored.
struct EnvSpec {
  Law law = Law::kIid;
  // Nearest-neighbour Ising: dimensionless product beta*J.
  double beta_j = 0.0;
  // Long-range Ising: inverse temperature, coupling, decay exponent.
  double beta = 0.0;
  double coupling = 1.0;
  double alpha = 2.0;
  std::int64_t window_halfwidth = 0;
  std::int64_t burnin_sweeps = 200;
  /// 0 means "use window_halfwidth".
  std::int64_t truncation_radius = 0;

  static EnvSpec iid() { return {}; }
  static EnvSpec alternate() { return {.law = Law::kAlternate}; }
  static EnvSpec constant() { return {.law = Law::kConstant}; }
  static EnvSpec ising_nn(double beta_j) { return {.law = Law::kIsingNN, .beta_j = beta_j}; }
  static EnvSpec ising_lr(double beta, double coupling, double alpha, std::int64_t window_halfwidth,
                          std::int64_t burnin_sweeps = 200, std::int64_t truncation_radius = 0) {
    return {.law = Law::kIsingLR,
            .beta = beta,
            .coupling = coupling,
            .alpha = alpha,
            .window_halfwidth = window_halfwidth,
            .burnin_sweeps = burnin_sweeps,
            .truncation_radius = truncation_radius};
  }

  [[nodiscard]] std::int64_t effective_truncation() const {
    return truncation_radius > 0 ? truncation_radius : window_halfwidth;
  }

  /// Throws Error(kValidation) for out-of-range parameters.
  void validate() const;

  /// Law-specific parameters, in a fixed order, for output rows.
  [[nodiscard]] Metadata params() const;
};

/// Lazily evaluated orientation field. Values are a pure function of
/// (spec, key, level) and are memoised over a contiguous range around 0.
///
/// For kIsingLR the whole window [-W, W] is sampled at construction by
/// heat-bath sweeps; queries outside it throw OUT_OF_WINDOW.
class OrientationEnvironment {
 public:
  OrientationEnvironment(const EnvSpec& spec, const StreamKey& key);

  /// epsilon at `level`, either +1 or -1.
  int value(std::int64_t level) {
    if (level >= 0) {
      const auto i = static_cast<std::size_t>(level);
      if (i < upper_.size()) return upper_[i];
    } else {
      const auto i = static_cast<std::size_t>(-(level + 1));
      if (i < lower_.size()) return lower_[i];
    }
    return extend(level);
  }
  int operator()(std::int64_t level) { return value(level); }

  [[nodiscard]] const EnvSpec& spec() const { return spec_; }

  /// Levels currently memoised, as [lowest, highest].
  [[nodiscard]] std::pair<std::int64_t, std::int64_t> memo_range() const {
    return {-static_cast<std::int64_t>(lower_.size()), static_cast<std::int64_t>(upper_.size()) - 1};
  }

 private:
  int extend(std::int64_t level);
  int direct_value(std::int64_t level) const;
  void run_glauber();

  EnvSpec spec_;
  RandomStream stream_;
  double persistence_ = 0.5;
  // upper_[i] holds level i, lower_[i] holds level -(i + 1).
  std::vector<std::int8_t> upper_;
  std::vector<std::int8_t> lower_;
};

/// Exact two-sided Markov-chain sample of the 1D nearest-neighbour Ising
/// Gibbs measure, pre-extended over [lo, hi] (lo <= 0 <= hi).
OrientationEnvironment sample_ising_nn(double beta_j, const StreamKey& key, std::int64_t lo,
                                       std::int64_t hi);

/// Long-range Ising window sampled by `burnin_sweeps` single-site heat-bath
/// sweeps from an IID start, couplings J|i-j|^-alpha cut at
/// `truncation_radius`.
OrientationEnvironment sample_ising_lr(double beta, double coupling, double alpha,
                                       std::int64_t window_halfwidth, std::int64_t burnin_sweeps,
                                       std::int64_t truncation_radius, const StreamKey& key);

struct CorrelationProfile {
  std::vector<std::int64_t> lags;
  std::vector<double> estimates;
  std::vector<double> std_errors;
  std::int64_t sample_count = 0;
};

/// Averages epsilon_0 * epsilon_lag over `replicates` independent
/// environments; replicate r uses key.child(r).
CorrelationProfile empirical_correlation(const EnvSpec& spec, std::span<const std::int64_t> lags,
                                         std::int64_t replicates, const StreamKey& key,
                                         unsigned threads = 1);

/// A coordinatewise nondecreasing function of the orientation field on a
/// finite window. Supported spellings:
///   x<k>            epsilon_k                 e.g. "x0", "x-3"
///   sum(k1,k2,...)  sum of the coordinates
///   min(k1,k2,...)  1 if every listed coordinate is +1, else 0
class MonotoneFunction {
 public:
  enum class Kind { kCoordinate, kSum, kMin };

  /// Throws MALFORMED_FUNCTION for anything else.
  static MonotoneFunction parse(std::string_view text);

  double operator()(OrientationEnvironment& env) const;

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const std::vector<std::int64_t>& levels() const { return levels_; }

 private:
  MonotoneFunction(Kind kind, std::vector<std::int64_t> levels) : kind_(kind), levels_(std::move(levels)) {}
  Kind kind_;
  std::vector<std::int64_t> levels_;
};

/// Monte Carlo estimate of Cov[f(epsilon), g(epsilon)].
CovarianceEstimate check_association(const EnvSpec& spec, const MonotoneFunction& f,
                                     const MonotoneFunction& g, std::int64_t replicates,
                                     const StreamKey& key, unsigned threads = 1);

struct DecayFit {
  double exponent = 0.0;
  double std_error = 0.0;
};

/// Least-squares slope of log(estimate) against log(lag) over lags in
/// [lag_lo, lag_hi], sign flipped. Throws NONPOSITIVE_CORRELATION if any
/// estimate in range is <= 0.
DecayFit fit_decay_exponent(const CorrelationProfile& profile, std::int64_t lag_lo, std::int64_t lag_hi);

}  // namespace orientwalk
