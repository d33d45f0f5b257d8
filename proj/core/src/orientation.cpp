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

#include "orientwalk/orientation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "orientwalk/error.hpp"
#include "orientwalk/parallel.hpp"

namespace orientwalk {
namespace {

// Contiguous memo growth beyond this gap falls back to direct evaluation for
// the laws that have a closed form per level.
constexpr std::int64_t kMaxMemoGap = std::int64_t{1} << 20;

// 0, -1, 1, -2, 2, ... -> 0, 1, 2, 3, 4, ...
constexpr std::uint64_t zigzag(std::int64_t level) {
  return level >= 0 ? 2 * static_cast<std::uint64_t>(level) : 2 * static_cast<std::uint64_t>(-level) - 1;
}

int sign_from_bits(std::uint64_t bits) { return (bits >> 63) != 0 ? 1 : -1; }

}  // namespace

std::string_view law_name(Law law) {
  switch (law) {
    case Law::kIid: return "iid";
    case Law::kAlternate: return "alternate";
    case Law::kConstant: return "constant";
    case Law::kIsingNN: return "ising-nn";
    case Law::kIsingLR: return "ising-lr";
  }
  return "unknown";
}

Law parse_law(std::string_view name) {
  for (Law law : {Law::kIid, Law::kAlternate, Law::kConstant, Law::kIsingNN, Law::kIsingLR}) {
    if (law_name(law) == name) return law;
  }
  throw Error(ErrorCode::kValidation, "unknown environment law '" + std::string(name) + "'");
}

void EnvSpec::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kValidation, msg); };
  if (law == Law::kIsingNN && !(std::isfinite(beta_j) && beta_j >= 0.0)) {
    fail("beta_j must be finite and >= 0");
  }
  if (law == Law::kIsingLR) {
    if (!(std::isfinite(beta) && beta >= 0.0)) fail("beta must be finite and >= 0");
    if (!(std::isfinite(coupling) && coupling >= 0.0)) fail("coupling J must be finite and >= 0");
    if (!(alpha > 1.0)) fail("alpha must be > 1 for summable correlation decay");
    if (window_halfwidth < 1) fail("window_halfwidth must be a positive integer");
    if (burnin_sweeps < 1) fail("burnin_sweeps must be a positive integer");
    if (truncation_radius < 0 || truncation_radius > 2 * window_halfwidth + 1) {
      fail("truncation_radius must lie in [1, window width]");
    }
  }
}

Metadata EnvSpec::params() const {
  switch (law) {
    case Law::kIsingNN: return {{"beta_j", beta_j}};
    case Law::kIsingLR:
      return {{"beta", beta},
              {"J", coupling},
              {"alpha", alpha},
              {"window_halfwidth", static_cast<double>(window_halfwidth)},
              {"burnin_sweeps", static_cast<double>(burnin_sweeps)},
              {"truncation_radius", static_cast<double>(effective_truncation())}};
    default: return {};
  }
}

OrientationEnvironment::OrientationEnvironment(const EnvSpec& spec, const StreamKey& key)
    : spec_(spec), stream_(derive_stream(key)) {
  spec_.validate();
  switch (spec_.law) {
    case Law::kIsingNN:
      // P(eps_{y+1} = eps_y) = e^{bJ} / (e^{bJ} + e^{-bJ}).
      persistence_ = 1.0 / (1.0 + std::exp(-2.0 * spec_.beta_j));
      upper_.push_back(static_cast<std::int8_t>(sign_from_bits(stream_.value_at(0))));
      break;
    case Law::kIsingLR:
      run_glauber();
      break;
    default:
      break;
  }
}

int OrientationEnvironment::direct_value(std::int64_t level) const {
  switch (spec_.law) {
    case Law::kIid: return sign_from_bits(stream_.value_at(zigzag(level)));
    case Law::kAlternate: return level % 2 == 0 ? 1 : -1;
    case Law::kConstant: return 1;
    default: break;
  }
  throw Error(ErrorCode::kInvalidArgument, "no closed form for this law");
}

int OrientationEnvironment::extend(std::int64_t level) {
  if (spec_.law == Law::kIsingLR) {
    throw Error(ErrorCode::kOutOfWindow,
                "level " + std::to_string(level) + " outside the pre-sampled window [-" +
                    std::to_string(spec_.window_halfwidth) + ", " + std::to_string(spec_.window_halfwidth) +
                    "]");
  }
  auto& side = level >= 0 ? upper_ : lower_;
  const auto target = static_cast<std::size_t>(level >= 0 ? level : -(level + 1));

  if (spec_.law == Law::kIsingNN) {
    while (side.size() <= target) {
      const std::int64_t next = level >= 0 ? static_cast<std::int64_t>(side.size())
                                           : -static_cast<std::int64_t>(side.size()) - 1;
      const int previous = side.empty() ? upper_[0] : side.back();
      const int current = stream_.uniform_at(zigzag(next)) < persistence_ ? previous : -previous;
      side.push_back(static_cast<std::int8_t>(current));
    }
    return side[target];
  }

  if (static_cast<std::int64_t>(target - std::min(target, side.size())) > kMaxMemoGap) {
    return direct_value(level);
  }
  while (side.size() <= target) {
    const std::int64_t next = level >= 0 ? static_cast<std::int64_t>(side.size())
                                         : -static_cast<std::int64_t>(side.size()) - 1;
    side.push_back(static_cast<std::int8_t>(direct_value(next)));
  }
  return side[target];
}

void OrientationEnvironment::run_glauber() {
  const std::int64_t half = spec_.window_halfwidth;
  const auto sites = static_cast<std::size_t>(2 * half + 1);
  const auto radius = static_cast<std::size_t>(std::min<std::int64_t>(spec_.effective_truncation(), 2 * half));

  std::vector<double> coupling(radius + 1, 0.0);
  for (std::size_t d = 1; d <= radius; ++d) {
    coupling[d] = spec_.coupling * std::pow(static_cast<double>(d), -spec_.alpha);
  }

  std::vector<int> spin(sites);
  for (auto& s : spin) s = sign_from_bits(stream_.next_u64());

  for (std::int64_t sweep = 0; sweep < spec_.burnin_sweeps; ++sweep) {
    for (std::size_t i = 0; i < sites; ++i) {
      double field = 0.0;
      const std::size_t left = std::min(radius, i);
      const std::size_t right = std::min(radius, sites - 1 - i);
      for (std::size_t d = 1; d <= left; ++d) field += coupling[d] * spin[i - d];
      for (std::size_t d = 1; d <= right; ++d) field += coupling[d] * spin[i + d];
      // Heat bath: P(+1 | rest) = 1 / (1 + exp(-2 beta h)).
      const double p_up = 1.0 / (1.0 + std::exp(-2.0 * spec_.beta * field));
      spin[i] = stream_.uniform() < p_up ? 1 : -1;
    }
  }

  const auto center = static_cast<std::size_t>(half);
  upper_.resize(center + 1);
  lower_.resize(center);
  for (std::size_t k = 0; k <= center; ++k) upper_[k] = static_cast<std::int8_t>(spin[center + k]);
  for (std::size_t k = 0; k < center; ++k) lower_[k] = static_cast<std::int8_t>(spin[center - 1 - k]);
}

OrientationEnvironment sample_ising_nn(double beta_j, const StreamKey& key, std::int64_t lo, std::int64_t hi) {
  require(lo <= 0 && 0 <= hi, "sample_ising_nn needs lo <= 0 <= hi");
  OrientationEnvironment env(EnvSpec::ising_nn(beta_j), key);
  env.value(hi);
  env.value(lo);
  return env;
}

OrientationEnvironment sample_ising_lr(double beta, double coupling, double alpha,
                                       std::int64_t window_halfwidth, std::int64_t burnin_sweeps,
                                       std::int64_t truncation_radius, const StreamKey& key) {
  return OrientationEnvironment(
      EnvSpec::ising_lr(beta, coupling, alpha, window_halfwidth, burnin_sweeps, truncation_radius), key);
}

CorrelationProfile empirical_correlation(const EnvSpec& spec, std::span<const std::int64_t> lags,
                                         std::int64_t replicates, const StreamKey& key, unsigned threads) {
  require(replicates >= 2, "empirical_correlation needs at least two replicates");
  for (auto lag : lags) require(lag >= 1, "lags must be positive");
  spec.validate();

  const std::size_t width = lags.size();
  std::vector<std::int8_t> products(static_cast<std::size_t>(replicates) * width);
  parallel_for(static_cast<std::size_t>(replicates), threads, [&](std::size_t r) {
    OrientationEnvironment env(spec, key.child(r));
    const int origin = env.value(0);
    for (std::size_t j = 0; j < width; ++j) {
      products[r * width + j] = static_cast<std::int8_t>(origin * env.value(lags[j]));
    }
  });

  CorrelationProfile profile;
  profile.lags.assign(lags.begin(), lags.end());
  profile.sample_count = replicates;
  for (std::size_t j = 0; j < width; ++j) {
    RunningStats stats;
    for (std::size_t r = 0; r < static_cast<std::size_t>(replicates); ++r) stats.add(products[r * width + j]);
    profile.estimates.push_back(stats.mean());
    profile.std_errors.push_back(stats.stderr_of_mean());
  }
  return profile;
}

MonotoneFunction MonotoneFunction::parse(std::string_view text) {
  auto malformed = [&](const std::string& why) -> Error {
    return Error(ErrorCode::kMalformedFunction, "'" + std::string(text) + "': " + why);
  };
  auto parse_int = [&](std::string_view token) {
    std::int64_t value = 0;
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw malformed("expected an integer level, got '" + std::string(token) + "'");
    }
    return value;
  };

  if (text.size() >= 2 && text.front() == 'x') {
    return MonotoneFunction(Kind::kCoordinate, {parse_int(text.substr(1))});
  }
  for (auto [prefix, kind] : {std::pair{std::string_view("sum("), Kind::kSum},
                              std::pair{std::string_view("min("), Kind::kMin}}) {
    if (text.starts_with(prefix)) {
      if (!text.ends_with(")")) throw malformed("missing ')'");
      std::string_view body = text.substr(prefix.size(), text.size() - prefix.size() - 1);
      std::vector<std::int64_t> levels;
      while (true) {
        const auto comma = body.find(',');
        levels.push_back(parse_int(body.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
      }
      return MonotoneFunction(kind, std::move(levels));
    }
  }
  throw malformed("not one of x<k>, sum(...), min(...)");
}

double MonotoneFunction::operator()(OrientationEnvironment& env) const {
  switch (kind_) {
    case Kind::kCoordinate: return env.value(levels_.front());
    case Kind::kSum: {
      double total = 0.0;
      for (auto level : levels_) total += env.value(level);
      return total;
    }
    case Kind::kMin:
      return std::all_of(levels_.begin(), levels_.end(), [&](auto level) { return env.value(level) == 1; }) ? 1.0
                                                                                                          : 0.0;
  }
  return 0.0;
}

CovarianceEstimate check_association(const EnvSpec& spec, const MonotoneFunction& f, const MonotoneFunction& g,
                                     std::int64_t replicates, const StreamKey& key, unsigned threads) {
  require(replicates >= 2, "check_association needs at least two replicates");
  spec.validate();
  std::vector<double> fv(static_cast<std::size_t>(replicates));
  std::vector<double> gv(fv.size());
  parallel_for(fv.size(), threads, [&](std::size_t r) {
    OrientationEnvironment env(spec, key.child(r));
    fv[r] = f(env);
    gv[r] = g(env);
  });
  return estimate_covariance(fv, gv);
}

DecayFit fit_decay_exponent(const CorrelationProfile& profile, std::int64_t lag_lo, std::int64_t lag_hi) {
  std::vector<double> log_lag;
  std::vector<double> log_est;
  for (std::size_t i = 0; i < profile.lags.size(); ++i) {
    const auto lag = profile.lags[i];
    if (lag < lag_lo || lag > lag_hi) continue;
    if (!(profile.estimates[i] > 0.0)) {
      throw Error(ErrorCode::kNonpositiveCorrelation,
                  "estimate at lag " + std::to_string(lag) + " is " + std::to_string(profile.estimates[i]));
    }
    log_lag.push_back(std::log(static_cast<double>(lag)));
    log_est.push_back(std::log(profile.estimates[i]));
  }
  require(log_lag.size() >= 2, "fit_decay_exponent needs at least two lags in range");
  const LinearFit fit = fit_line(log_lag, log_est);
  return {-fit.slope, fit.slope_stderr};
}

}  // namespace orientwalk
