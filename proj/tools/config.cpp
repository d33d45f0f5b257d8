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

#include "config.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <sstream>

#include "orientwalk/error.hpp"
#include "orientwalk/version.hpp"
#include "format.hpp"

namespace orientwalk::cli {
namespace {

[[noreturn]] void usage_error(const std::string& message) { throw Error(ErrorCode::kUsage, message); }
[[noreturn]] void validation_error(const std::string& message) { throw Error(ErrorCode::kValidation, message); }

template <class T>
T parse_number(std::string_view text, const std::string& flag) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) usage_error(flag + ": cannot parse '" + std::string(text) + "'");
  return value;
}

template <class T>
std::vector<T> parse_list(const std::vector<std::string>& items, const std::string& flag) {
  std::string text;
  for (const auto& item : items) text += (text.empty() ? "" : ",") + item;
  std::vector<T> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(parse_number<T>(rest.substr(0, comma), flag));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

template <class T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_number(values[i]);
  }
  return out;
}

struct RawOptions {
  std::string subcommand;
  std::string env = "iid";
  double beta_j = 0.0;
  double beta = 0.0;
  double coupling = 1.0;
  double alpha = 2.0;
  std::int64_t window = -1;
  std::int64_t burnin = 200;
  std::int64_t truncation = 0;
  // Config files split comma lists into items; flags keep them whole.
  std::vector<std::string> lags, times, n_grid, t_grid;
  std::string mode = "discrete";
  std::string format = "csv";
  std::int64_t record_path = -1;
};

void build_app(CLI::App& app, RawOptions& raw, ExperimentConfig& config) {
  app.set_config("--config", "", "flat key = value file; flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.add_option("subcommand", raw.subcommand, "one of: env-sample walk returns embed-check tn-ratio delta "
                                               "delta-selfsim scaling flt-check newman")
      ->required()
      ->check(CLI::IsMember(subcommands()));

  app.add_option("--env", raw.env, "iid|alternate|constant|ising-nn|ising-lr");
  app.add_option("--beta-j", raw.beta_j, "nearest-neighbour coupling beta*J");
  app.add_option("--beta", raw.beta, "long-range inverse temperature");
  app.add_option("--J", raw.coupling, "long-range coupling");
  app.add_option("--alpha", raw.alpha, "long-range decay exponent, > 1");
  app.add_option("--window", raw.window, "long-range window half-width; newman window half-width");
  app.add_option("--burnin", raw.burnin, "heat-bath sweeps");
  app.add_option("--truncation", raw.truncation, "long-range coupling cutoff");

  app.add_option("--n", config.n, "embedded steps or scaling size");
  app.add_option("--steps", config.steps, "full-walk steps");
  app.add_option("--draws", config.draws, "Delta draws");
  app.add_option("--reps", config.replicates, "replicates");
  app.add_option("--record-path", raw.record_path, "record the first walk up to this many steps");
  app.add_option("--path-out", config.path_out, "file for --record-path");
  app.add_option("--lags", raw.lags, "comma-separated lags");
  app.add_option("--times", raw.times, "comma-separated times");
  app.add_option("--n-grid", raw.n_grid, "comma-separated sizes");
  app.add_option("--t-grid", raw.t_grid, "comma-separated characteristic-function arguments");
  app.add_option("--mode", raw.mode, "discrete|continuum");
  app.add_option("--dt", config.dt, "continuum time step");
  app.add_option("--dx", config.dx, "continuum cell width");
  app.add_option("--c", config.c, "self-similarity factor");
  app.add_option("--t", config.t, "time");
  app.add_option("--t1", config.t1, "increment start");
  app.add_option("--t2", config.t2, "increment end");
  app.add_option("--f", config.f, "monotone function for association checks");
  app.add_option("--g", config.g, "monotone function for association checks");

  app.add_option("--seed", config.seed, "master seed");
  app.add_option("--threads", config.threads, "worker threads");
  app.add_option("--out", config.out, "output path, default stdout");
  app.add_option("--format", raw.format, "csv|json");
}

void finish(const RawOptions& raw, ExperimentConfig& config) {
  config.subcommand = raw.subcommand;
  Law law{};
  try {
    law = parse_law(raw.env);
  } catch (const Error& e) {
    usage_error(std::string("--env: ") + e.what());
  }
  EnvSpec& env = config.env;
  env.law = law;
  env.beta_j = raw.beta_j;
  env.beta = raw.beta;
  env.coupling = raw.coupling;
  env.alpha = raw.alpha;
  env.burnin_sweeps = raw.burnin;
  env.truncation_radius = raw.truncation;
  if (config.subcommand == "newman") {
    if (raw.window >= 0) config.newman_window = raw.window;
  } else {
    env.window_halfwidth = raw.window >= 0 ? raw.window : 1000;
  }

  if (!raw.lags.empty()) config.lags = parse_list<std::int64_t>(raw.lags, "--lags");
  if (!raw.times.empty()) config.times = parse_list<double>(raw.times, "--times");
  if (!raw.n_grid.empty()) config.n_grid = parse_list<std::uint64_t>(raw.n_grid, "--n-grid");
  if (!raw.t_grid.empty()) config.t_grid = parse_list<double>(raw.t_grid, "--t-grid");
  if (raw.record_path >= 0) config.record_path = static_cast<std::uint64_t>(raw.record_path);

  if (raw.mode == "discrete") {
    config.mode = DeltaMode::kDiscrete;
  } else if (raw.mode == "continuum") {
    config.mode = DeltaMode::kContinuum;
  } else {
    usage_error("--mode: expected discrete or continuum, got '" + raw.mode + "'");
  }
  if (raw.format == "csv") {
    config.format = OutputFormat::kCsv;
  } else if (raw.format == "json") {
    config.format = OutputFormat::kJson;
  } else {
    usage_error("--format: expected csv or json, got '" + raw.format + "'");
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  if (!(env.alpha > 1.0)) validation_error("--alpha must be > 1, got " + format_number(env.alpha));
  env.validate();
  if (threads < 1) validation_error("--threads must be >= 1");
  if (replicates < 1) validation_error("--reps must be >= 1");
  if (n < 1) validation_error("--n must be >= 1");
  for (auto lag : lags) {
    if (lag < 0) validation_error("--lags must be nonnegative");
  }
  if (!(c > 0.0)) validation_error("--c must be > 0");
  if (!(t > 0.0)) validation_error("--t must be > 0");
  if (!(0.0 <= t1 && t1 <= t2)) validation_error("--t1 and --t2 must satisfy 0 <= t1 <= t2");
  if (!(dt > 0.0 && dx > 0.0)) validation_error("--dt and --dx must be > 0");
  if (newman_window < 0 || 2 * newman_window + 1 > 21) {
    validation_error("--window for newman must lie in [0, 10] (at most 21 sites)");
  }
  if (subcommand == "delta" || subcommand == "delta-selfsim") {
    DeltaSamplerConfig d;
    d.mode = mode;
    d.n = n;
    d.dt = dt;
    d.dx = dx;
    d.times = subcommand == "delta" ? times : std::vector<double>{t, c * t};
    try {
      d.validate();
    } catch (const Error& e) {
      validation_error(e.what());
    }
  }
  if ((subcommand == "returns" || subcommand == "scaling") && n_grid.empty()) {
    validation_error("--n-grid must be nonempty");
  }
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> out{
      {"subcommand", subcommand},
      {"env", std::string(law_name(env.law))},
  };
  for (const auto& [key, value] : env.params()) out.emplace_back(key, format_number(value));
  out.insert(out.end(), {{"n", format_number(n)},
                         {"steps", format_number(steps)},
                         {"draws", format_number(draws)},
                         {"reps", format_number(replicates)},
                         {"record_path", record_path ? format_number(*record_path) : std::string("none")},
                         {"lags", join(lags)},
                         {"times", join(times)},
                         {"n_grid", join(n_grid)},
                         {"t_grid", join(t_grid)},
                         {"mode", mode == DeltaMode::kDiscrete ? "discrete" : "continuum"},
                         {"dt", format_number(dt)},
                         {"dx", format_number(dx)},
                         {"c", format_number(c)},
                         {"t", format_number(t)},
                         {"t1", format_number(t1)},
                         {"t2", format_number(t2)},
                         {"newman_window", format_number(newman_window)},
                         {"f", f},
                         {"g", g},
                         {"seed", format_number(seed)},
                         {"threads", format_number(threads)},
                         {"format", format == OutputFormat::kCsv ? "csv" : "json"},
                         {"config", config_file}});
  return out;
}

ExperimentConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app("orientwalk", "orientwalk");
  RawOptions raw;
  ExperimentConfig config;
  build_app(app, raw, config);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    usage_error(e.what());
  }
  if (auto* opt = app.get_config_ptr(); opt != nullptr && opt->count() > 0) config.config_file = opt->as<std::string>();
  finish(raw, config);
  config.validate();
  return config;
}

std::string usage() {
  CLI::App app("orientwalk", "orientwalk");
  RawOptions raw;
  ExperimentConfig config;
  build_app(app, raw, config);
  return app.help();
}

}  // namespace orientwalk::cli
