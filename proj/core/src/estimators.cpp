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

#include "orientwalk/estimators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <string>

#include "orientwalk/embedding.hpp"
#include "orientwalk/error.hpp"
#include "orientwalk/exact.hpp"
#include "orientwalk/ks.hpp"
#include "orientwalk/lattice_walk.hpp"
#include "orientwalk/parallel.hpp"
#include "orientwalk/scenery.hpp"
#include "orientwalk/stats.hpp"

namespace orientwalk {
namespace {

// Experiment tags for stream paths.
constexpr std::uint64_t kReturnsTag = 0x726574;
constexpr std::uint64_t kNewmanTag = 0x6e6577;
constexpr std::uint64_t kScalingTag = 0x73636c;
constexpr std::uint64_t kFltTag = 0x666c74;
constexpr std::uint64_t kClockTag = 0x746e;

EstimateRecord make_record(std::string id, const EnvSpec& spec, std::uint64_t n, std::int64_t replicates,
                           std::uint64_t seed) {
  EstimateRecord row;
  row.estimator_id = std::move(id);
  row.law = std::string(law_name(spec.law));
  row.params = spec.params();
  row.n = static_cast<std::int64_t>(n);
  row.replicates = replicates;
  row.seed = seed;
  return row;
}

}  // namespace

std::vector<EstimateRecord> estimate_return_probability(const EnvSpec& spec, std::span<const std::uint64_t> n_grid,
                                                        std::int64_t replicates, std::uint64_t seed,
                                                        unsigned threads) {
  require(replicates >= 1, "estimate_return_probability needs at least one replicate");
  spec.validate();
  const std::size_t width = n_grid.size();
  const std::uint64_t max_n = n_grid.empty() ? 0 : *std::max_element(n_grid.begin(), n_grid.end());
  const StreamKey base(seed, {kReturnsTag, static_cast<std::uint64_t>(spec.law)});

  // Per replicate and grid point: bit 0 = at origin at time 2n, bit 1 = hit
  // the origin at some time 2k, 1 <= k <= n.
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(replicates) * width, 0);
  parallel_for(static_cast<std::size_t>(replicates), threads, [&](std::size_t r) {
    const StreamKey key = base.child(r);
    OrientationEnvironment env(spec, key.child(role::kEnvironment));
    RandomStream stream = derive_stream(key.child(role::kWalk));
    EmbeddedWalk walk(env, stream);
    bool returned = false;
    std::vector<std::uint8_t> at_time(max_n + 1, 0);
    for (std::uint64_t k = 1; k <= max_n; ++k) {
      walk.advance(2);
      const bool at_origin = walk.x() == 0 && walk.y() == 0;
      returned = returned || at_origin;
      at_time[k] = static_cast<std::uint8_t>((at_origin ? 1 : 0) | (returned ? 2 : 0));
    }
    for (std::size_t g = 0; g < width; ++g) {
      flags[r * width + g] = n_grid[g] == 0 ? 1 : at_time[n_grid[g]];
    }
  });

  std::vector<EstimateRecord> rows;
  for (std::size_t g = 0; g < width; ++g) {
    RunningStats hit, by;
    for (std::size_t r = 0; r < static_cast<std::size_t>(replicates); ++r) {
      hit.add(flags[r * width + g] & 1);
      by.add((flags[r * width + g] >> 1) & 1);
    }
    EstimateRecord row = make_record("return_probability", spec, n_grid[g], replicates, seed);
    row.value = hit.mean();
    row.std_error = std::sqrt(row.value * (1.0 - row.value) / static_cast<double>(replicates));
    row.extra = {{"p_return_by", by.mean()}};
    rows.push_back(std::move(row));
  }
  return rows;
}

bool NewmanCheckReport::all_hold() const {
  return std::all_of(holds.begin(), holds.end(), [](bool h) { return h; });
}

NewmanCheckReport verify_newman_bound(double beta_j, std::int64_t window_lo, std::span<const std::uint64_t> eta,
                                      std::span<const double> t_grid) {
  const auto sites = static_cast<std::int64_t>(eta.size());
  if (sites > kMaxNewmanSites) {
    throw Error(ErrorCode::kWindowTooLarge,
                std::to_string(sites) + " sites exceeds the enumeration limit of " + std::to_string(kMaxNewmanSites));
  }
  require(sites >= 1, "verify_newman_bound needs a nonempty window");
  require(std::isfinite(beta_j) && beta_j >= 0.0, "beta_j must be finite and >= 0");

  NewmanCheckReport report;
  report.window_lo = window_lo;
  report.window_hi = window_lo + sites - 1;
  report.beta_j = beta_j;
  report.eta.assign(eta.begin(), eta.end());
  report.t_grid.assign(t_grid.begin(), t_grid.end());

  // Free-boundary chain weights exp(bJ sum s_i s_{i+1}), shifted by the
  // all-aligned energy: exp(-2 bJ #disagreeing bonds).
  const std::uint64_t configs = std::uint64_t{1} << sites;
  const std::uint64_t bond_mask = sites > 1 ? (std::uint64_t{1} << (sites - 1)) - 1 : 0;
  std::vector<double> weight_by_disagreements(static_cast<std::size_t>(sites));
  for (std::int64_t d = 0; d < sites; ++d) weight_by_disagreements[d] = std::exp(-2.0 * beta_j * static_cast<double>(d));

  std::vector<double> weights(configs);
  std::vector<double> sums(configs);
  double partition = 0.0;
  for (std::uint64_t mask = 0; mask < configs; ++mask) {
    const int disagreements = std::popcount((mask ^ (mask >> 1)) & bond_mask);
    weights[mask] = weight_by_disagreements[disagreements];
    partition += weights[mask];
    double s = 0.0;
    for (std::int64_t i = 0; i < sites; ++i) {
      s += ((mask >> i) & 1) != 0 ? static_cast<double>(eta[i]) : -static_cast<double>(eta[i]);
    }
    sums[mask] = s;
  }

  const double ratio = std::tanh(beta_j);
  double cross = 0.0;  // sum_{x != y} eta(x) eta(y) r^|x-y|
  for (std::int64_t x = 0; x < sites; ++x) {
    for (std::int64_t y = 0; y < sites; ++y) {
      if (x == y) continue;
      cross += static_cast<double>(eta[x]) * static_cast<double>(eta[y]) *
               std::pow(ratio, static_cast<double>(std::llabs(x - y)));
    }
  }

  for (double t : t_grid) {
    std::complex<double> joint = 0.0;
    for (std::uint64_t mask = 0; mask < configs; ++mask) {
      joint += weights[mask] * std::polar(1.0, t * sums[mask]);
    }
    joint /= partition;
    double product = 1.0;
    for (auto e : eta) product *= std::cos(static_cast<double>(e) * t);
    const double lhs = std::abs(joint - product);
    const double rhs = 0.5 * t * t * cross;
    report.lhs.push_back(lhs);
    report.rhs.push_back(rhs);
    report.holds.push_back(lhs <= rhs + 1e-12);
  }
  return report;
}

NewmanCheckReport verify_newman_bound_on_path(double beta_j, std::uint64_t n, std::uint64_t seed,
                                              std::span<const double> t_grid) {
  RandomStream stream = derive_stream(StreamKey(seed, {kNewmanTag, n}));
  // n + 1 steps give eta_n: visits at times 0..n.
  const VerticalSample sample = simulate_vertical(n + 1, stream);
  const auto& pos = sample.path.positions;
  const auto [lo, hi] = std::minmax_element(pos.begin(), pos.end() - 1);
  const auto eta = sample.local_times.dense(*lo, *hi);
  return verify_newman_bound(beta_j, *lo, eta, t_grid);
}

double correlation_ratio(const EnvSpec& spec) {
  switch (spec.law) {
    case Law::kIid: return 0.0;
    case Law::kAlternate: return -1.0;
    case Law::kConstant: return 1.0;
    case Law::kIsingNN: return std::tanh(spec.beta_j);
    case Law::kIsingLR: break;
  }
  return std::nan("");
}

std::vector<EstimateRecord> variance_scaling(const EnvSpec& spec, std::span<const std::uint64_t> n_grid, double t1,
                                             double t2, std::int64_t replicates, std::uint64_t seed,
                                             unsigned threads) {
  require(replicates >= 2, "variance_scaling needs at least two replicates");
  require(0.0 <= t1 && t1 <= t2, "variance_scaling needs 0 <= t1 <= t2");
  spec.validate();
  const double ratio = correlation_ratio(spec);

  std::vector<EstimateRecord> rows;
  std::vector<double> log_n, log_moment;
  for (std::uint64_t n : n_grid) {
    require(n >= 16, "variance_scaling needs n >= 16");
    const auto k1 = static_cast<std::uint64_t>(std::floor(static_cast<double>(n) * t1));
    const auto k2 = static_cast<std::uint64_t>(std::floor(static_cast<double>(n) * t2));
    const StreamKey base(seed, {kScalingTag, static_cast<std::uint64_t>(spec.law), n});

    struct Observation {
      double increment_sq = 0.0;
      double end_sq = 0.0;
    };
    const auto obs = parallel_map<Observation>(static_cast<std::size_t>(replicates), threads, [&](std::size_t r) {
      const StreamKey key = base.child(r);
      OrientationEnvironment env(spec, key.child(role::kEnvironment));
      RandomStream stream = derive_stream(key.child(role::kWalk));
      EmbeddedWalk walk(env, stream);
      std::int64_t x_k1 = 0, x_k2 = 0, x_n = 0;
      const std::uint64_t horizon = std::max(k2, n);
      for (std::uint64_t k = 0; k <= horizon; ++k) {
        if (k == k1) x_k1 = walk.x();
        if (k == k2) x_k2 = walk.x();
        if (k == n) x_n = walk.x();
        if (k < horizon) walk.advance();
      }
      const auto inc = static_cast<double>(x_k2 - x_k1);
      return Observation{inc * inc, static_cast<double>(x_n) * static_cast<double>(x_n)};
    });

    RunningStats increments, moments;
    for (const auto& o : obs) {
      increments.add(o.increment_sq);
      moments.add(o.end_sq);
    }
    const double norm = std::pow(static_cast<double>(n), 1.5);
    EstimateRecord inc = make_record("increment_moment", spec, n, replicates, seed);
    inc.value = increments.mean() / norm;
    inc.std_error = increments.stderr_of_mean() / norm;
    inc.extra = {{"t1", t1}, {"t2", t2}};
    rows.push_back(std::move(inc));

    EstimateRecord second = make_record("second_moment", spec, n, replicates, seed);
    second.value = moments.mean();
    second.std_error = moments.stderr_of_mean();
    if (!std::isnan(ratio)) second.extra = {{"exact", exact::embedded_second_moment(n, ratio)}};
    rows.push_back(std::move(second));

    log_n.push_back(std::log(static_cast<double>(n)));
    log_moment.push_back(std::log(moments.mean()));
  }

  if (n_grid.size() >= 2) {
    const LinearFit fit = fit_line(log_n, log_moment);
    EstimateRecord slope = make_record("second_moment_slope", spec, n_grid.back(), replicates, seed);
    slope.value = fit.slope;
    slope.std_error = fit.slope_stderr;
    slope.extra = {{"n_min", static_cast<double>(n_grid.front())}};
    rows.push_back(std::move(slope));
  }
  return rows;
}

FltReport flt_check(const EnvSpec& spec, std::uint64_t n, std::int64_t replicates, double t, std::uint64_t seed,
                    unsigned threads, const FltOptions& options) {
  require(replicates >= 2, "flt_check needs at least two replicates");
  require(t > 0.0, "flt_check needs t > 0");
  spec.validate();
  const auto steps = static_cast<std::uint64_t>(std::floor(static_cast<double>(n) * t));
  const double norm = std::pow(static_cast<double>(n), 0.75);
  const StreamKey base(seed, {kFltTag, static_cast<std::uint64_t>(spec.law), n});

  struct Endpoint {
    double x = 0.0;
    double y = 0.0;
  };
  const auto ends = parallel_map<Endpoint>(static_cast<std::size_t>(replicates), threads, [&](std::size_t r) {
    const StreamKey key = base.child(r);
    OrientationEnvironment env(spec, key.child(role::kEnvironment));
    RandomStream stream = derive_stream(key.child(role::kWalk));
    WalkState state;
    while (state.step < steps) state = step_walk(state, env, stream);
    return Endpoint{static_cast<double>(state.x) / norm, static_cast<double>(state.y) / norm};
  });

  std::vector<double> xs, abs_ys;
  for (const auto& e : ends) {
    xs.push_back(e.x);
    abs_ys.push_back(std::abs(e.y));
  }

  const double scale = exact::walk_limit_scale();
  const double target = scale * scale * exact::delta_variance(t);
  FltReport report;
  const VarianceEstimate var = estimate_variance(xs);
  report.variance = make_record("flt_variance", spec, n, replicates, seed);
  report.variance.value = var.variance;
  report.variance.std_error = var.std_error;
  report.variance.extra = {{"t", t}, {"target", target}, {"ratio", var.variance / target}};

  DeltaSamplerConfig ref;
  ref.mode = DeltaMode::kDiscrete;
  ref.n = options.reference_n;
  ref.times = {t};
  auto reference = delta_column(draw_deltas(ref, options.reference_draws, base.child(role::kReference), threads), 0);
  for (auto& v : reference) v *= scale;
  const KsResult ks = ks_two_sample(xs, reference);
  report.ks = make_record("flt_ks", spec, n, replicates, seed);
  report.ks.value = ks.statistic;
  report.ks.extra = {{"t", t},
                     {"p_value", ks.p_value},
                     {"reference_n", static_cast<double>(options.reference_n)},
                     {"reference_draws", static_cast<double>(options.reference_draws)}};

  const auto within = std::count_if(abs_ys.begin(), abs_ys.end(), [&](double v) { return v <= options.vertical_threshold; });
  const double fraction = static_cast<double>(within) / static_cast<double>(abs_ys.size());
  report.vertical = make_record("flt_vertical", spec, n, replicates, seed);
  report.vertical.value = fraction;
  report.vertical.std_error = std::sqrt(fraction * (1.0 - fraction) / static_cast<double>(abs_ys.size()));
  report.vertical.extra = {{"t", t},
                           {"threshold", options.vertical_threshold},
                           {"max", *std::max_element(abs_ys.begin(), abs_ys.end())}};
  return report;
}

EstimateRecord tn_ratio(std::uint64_t n, std::int64_t replicates, std::uint64_t seed, unsigned threads) {
  require(n >= 1, "tn_ratio needs n >= 1");
  require(replicates >= 2, "tn_ratio needs at least two replicates");
  const StreamKey base(seed, {kClockTag, n});
  const auto clocks = parallel_map<double>(static_cast<std::size_t>(replicates), threads, [&](std::size_t r) {
    const StreamKey key = base.child(r);
    OrientationEnvironment env(EnvSpec::iid(), key.child(role::kEnvironment));
    RandomStream stream = derive_stream(key.child(role::kWalk));
    return static_cast<double>(embed(env, n, stream).clock);
  });

  const double nd = static_cast<double>(n);
  std::vector<double> ratios;
  for (double c : clocks) ratios.push_back(c / nd);
  const RunningStats stats = summarize(ratios);
  const VarianceEstimate var = estimate_variance(clocks);

  EstimateRecord row = make_record("tn_ratio", EnvSpec::iid(), n, replicates, seed);
  row.value = stats.mean();
  row.std_error = stats.stderr_of_mean();
  row.extra = {{"limit", 1.0 + kMeanJump}, {"var_over_n", var.variance / nd}, {"var_over_n_se", var.std_error / nd}};
  return row;
}

}  // namespace orientwalk
