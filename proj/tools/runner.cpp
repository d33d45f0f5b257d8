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

#include "runner.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "format.hpp"
#include "orientwalk/embedding.hpp"
#include "orientwalk/error.hpp"
#include "orientwalk/estimators.hpp"
#include "orientwalk/lattice_walk.hpp"
#include "orientwalk/parallel.hpp"
#include "orientwalk/random.hpp"
#include "orientwalk/scenery.hpp"
#include "orientwalk/version.hpp"

namespace orientwalk::cli {
namespace {

constexpr std::uint64_t kCouplingTag = 0x636f75;
constexpr std::uint64_t kNewmanTag = 0x6e6577;

const std::vector<std::string> kRecordColumns{"estimator_id", "law", "params_json", "n", "reps",
                                              "value", "stderr", "seed", "extra_json"};

Json metadata_json(const Metadata& m) {
  Json out = Json::object();
  for (const auto& [key, value] : m) out[key] = value;
  return out;
}

void add_records(ResultSet& result, std::vector<EstimateRecord> records) {
  std::stable_sort(records.begin(), records.end(), [](const EstimateRecord& a, const EstimateRecord& b) {
    return std::tie(a.estimator_id, a.n) < std::tie(b.estimator_id, b.n);
  });
  result.columns = kRecordColumns;
  for (const auto& r : records) {
    result.rows.push_back({r.estimator_id, r.law, metadata_json(r.params), r.n, r.replicates, r.value, r.std_error,
                           r.seed, metadata_json(r.extra)});
  }
}

EstimateRecord base_record(std::string id, const EnvSpec& spec, const ExperimentConfig& config,
                           std::int64_t n) {
  EstimateRecord row;
  row.estimator_id = std::move(id);
  row.law = std::string(law_name(spec.law));
  row.params = spec.params();
  row.n = n;
  row.replicates = config.replicates;
  row.seed = config.seed;
  return row;
}

void run_env_sample(const ExperimentConfig& config, ResultSet& result) {
  const StreamKey key(config.seed, {role::kEnvironment});
  if (!config.f.empty() || !config.g.empty()) {
    if (config.f.empty() || config.g.empty()) throw Error(ErrorCode::kUsage, "--f and --g must be given together");
    const auto f = MonotoneFunction::parse(config.f);
    const auto g = MonotoneFunction::parse(config.g);
    const auto cov = check_association(config.env, f, g, config.replicates, key, config.threads);
    EstimateRecord row = base_record("association_covariance", config.env, config, 0);
    row.value = cov.covariance;
    row.std_error = cov.std_error;
    add_records(result, {row});
    return;
  }
  std::vector<std::int64_t> lags = config.lags;
  std::stable_sort(lags.begin(), lags.end());
  const auto profile = empirical_correlation(config.env, lags, config.replicates, key, config.threads);
  result.columns = {"law", "params", "lag", "estimate", "stderr", "reps", "seed"};
  const Json params = metadata_json(config.env.params());
  for (std::size_t i = 0; i < profile.lags.size(); ++i) {
    result.rows.push_back({std::string(law_name(config.env.law)), params, profile.lags[i], profile.estimates[i],
                           profile.std_errors[i], config.replicates, config.seed});
  }
}

void run_walk(const ExperimentConfig& config, ResultSet& result) {
  const std::vector<EnvSpec> laws{config.env};
  const auto rows = return_contrast(laws, config.replicates, config.steps, config.seed, config.threads);
  result.columns = {"law", "params", "horizon", "mean_returns", "stderr", "reps", "seed"};
  for (const auto& r : rows) {
    result.rows.push_back({r.law, metadata_json(r.params), r.n, r.value, r.std_error, r.replicates, r.seed});
  }
  if (config.record_path) {
    // Replays walk 0 of the first law with recording on.
    const StreamKey key = StreamKey(config.seed, {role::kWalk, static_cast<std::uint64_t>(config.env.law), 0}).child(0);
    OrientationEnvironment env(config.env, key.child(role::kEnvironment));
    RandomStream stream = derive_stream(key.child(role::kWalk));
    const WalkResult walk = simulate_walk(env, std::min(config.steps, *config.record_path), stream, *config.record_path);
    std::ofstream file(config.path_out);
    if (!file) throw std::runtime_error("cannot open " + config.path_out);
    file << "step,x,y\n";
    for (const auto& s : *walk.path) file << s.step << ',' << s.x << ',' << s.y << '\n';
  }
}

void run_embed_check(const ExperimentConfig& config, ResultSet& result) {
  const StreamKey base(config.seed, {kCouplingTag, static_cast<std::uint64_t>(config.env.law)});
  const auto ok = parallel_map<std::uint8_t>(static_cast<std::size_t>(config.replicates), config.threads,
                                             [&](std::size_t r) {
                                               const StreamKey key = base.child(r);
                                               OrientationEnvironment env(config.env, key.child(role::kEnvironment));
                                               RandomStream stream = derive_stream(key.child(role::kWalk));
                                               return static_cast<std::uint8_t>(coupled_check(env, config.n, stream));
                                             });
  const auto failures = std::count(ok.begin(), ok.end(), std::uint8_t{0});
  EstimateRecord row = base_record("coupling_failures", config.env, config, static_cast<std::int64_t>(config.n));
  row.value = static_cast<double>(failures);
  row.extra = {{"checked", static_cast<double>(config.replicates)}};
  add_records(result, {row});
  if (failures > 0) {
    result.invariant_ok = false;
    result.invariant_message = std::to_string(failures) + " of " + std::to_string(config.replicates) +
                               " coupling checks failed";
  }
}

DeltaSamplerConfig delta_config(const ExperimentConfig& config, std::vector<double> times) {
  DeltaSamplerConfig d;
  d.mode = config.mode;
  d.n = config.n;
  d.dt = config.dt;
  d.dx = config.dx;
  d.times = std::move(times);
  return d;
}

void run_delta(const ExperimentConfig& config, ResultSet& result) {
  const auto draws = draw_deltas(delta_config(config, config.times), config.draws,
                                 StreamKey(config.seed, {role::kScenery}), config.threads);
  result.columns = {"draw", "time", "value"};
  for (std::size_t i = 0; i < draws.size(); ++i) {
    for (std::size_t k = 0; k < config.times.size(); ++k) {
      result.rows.push_back({i, config.times[k], draws[i].values[k]});
    }
  }
}

void run_delta_selfsim(const ExperimentConfig& config, ResultSet& result) {
  const auto at_t = delta_column(draw_deltas(delta_config(config, {config.t}), config.draws,
                                             StreamKey(config.seed, {role::kScenery, 1}), config.threads),
                                 0);
  const auto at_ct = delta_column(draw_deltas(delta_config(config, {config.c * config.t}), config.draws,
                                              StreamKey(config.seed, {role::kScenery, 2}), config.threads),
                                  0);
  const KsResult scaled = check_selfsimilarity(at_t, at_ct, config.c);
  const KsResult unscaled = ks_two_sample(at_t, at_ct);
  EstimateRecord row;
  row.estimator_id = "delta_selfsim";
  row.law = "iid";
  row.n = static_cast<std::int64_t>(config.n);
  row.replicates = static_cast<std::int64_t>(config.draws);
  row.value = scaled.statistic;
  row.seed = config.seed;
  row.extra = {{"p_value", scaled.p_value},
               {"c", config.c},
               {"t", config.t},
               {"unscaled_statistic", unscaled.statistic},
               {"unscaled_p_value", unscaled.p_value}};
  add_records(result, {row});
}

void run_newman(const ExperimentConfig& config, ResultSet& result) {
  const EnvSpec spec = EnvSpec::ising_nn(config.env.beta_j);
  spec.validate();
  RandomStream stream = derive_stream(StreamKey(config.seed, {kNewmanTag, config.n}));
  // n + 1 steps give the local times at times 0..n.
  const VerticalSample sample = simulate_vertical(config.n + 1, stream);
  const auto eta = sample.local_times.dense(-config.newman_window, config.newman_window);
  const auto report = verify_newman_bound(spec.beta_j, -config.newman_window, eta, config.t_grid);
  std::vector<EstimateRecord> rows;
  for (std::size_t i = 0; i < report.t_grid.size(); ++i) {
    EstimateRecord row = base_record("newman_bound", spec, config, static_cast<std::int64_t>(config.n));
    row.replicates = 1;
    row.value = report.lhs[i];
    row.extra = {{"t", report.t_grid[i]},
                 {"rhs", report.rhs[i]},
                 {"holds", report.holds[i] ? 1.0 : 0.0},
                 {"window_lo", static_cast<double>(report.window_lo)},
                 {"window_hi", static_cast<double>(report.window_hi)}};
    rows.push_back(std::move(row));
  }
  add_records(result, std::move(rows));
  if (!report.all_hold()) {
    result.invariant_ok = false;
    result.invariant_message = "correlation bound violated";
  }
}

void dispatch(const ExperimentConfig& config, ResultSet& result) {
  const std::string& cmd = config.subcommand;
  if (cmd == "env-sample") {
    run_env_sample(config, result);
  } else if (cmd == "walk") {
    run_walk(config, result);
  } else if (cmd == "returns") {
    add_records(result, estimate_return_probability(config.env, config.n_grid, config.replicates, config.seed,
                                                    config.threads));
  } else if (cmd == "embed-check") {
    run_embed_check(config, result);
  } else if (cmd == "tn-ratio") {
    add_records(result, {tn_ratio(config.n, config.replicates, config.seed, config.threads)});
  } else if (cmd == "delta") {
    run_delta(config, result);
  } else if (cmd == "delta-selfsim") {
    run_delta_selfsim(config, result);
  } else if (cmd == "scaling") {
    add_records(result, variance_scaling(config.env, config.n_grid, config.t1, config.t2, config.replicates,
                                         config.seed, config.threads));
  } else if (cmd == "flt-check") {
    const FltReport r = flt_check(config.env, config.n, config.replicates, config.t, config.seed, config.threads);
    add_records(result, {r.variance, r.ks, r.vertical});
  } else if (cmd == "newman") {
    run_newman(config, result);
  } else {
    throw Error(ErrorCode::kUsage, "unknown subcommand '" + cmd + "'");
  }
}

std::string csv_cell(const Json& cell) {
  if (cell.is_string()) return csv_escape(cell.get<std::string>());
  if (cell.is_number_float()) return format_number(cell.get<double>());
  if (cell.is_number_unsigned()) return format_number(cell.get<std::uint64_t>());
  if (cell.is_number_integer()) return format_number(cell.get<std::int64_t>());
  return csv_escape(cell.dump());
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage:
    case ErrorCode::kValidation:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kWindowTooLarge:
    case ErrorCode::kMalformedFunction: return 1;
    case ErrorCode::kInvariantFailure: return 2;
    default: return 3;
  }
}

}  // namespace

ResultSet run_experiment(const ExperimentConfig& config) {
  config.validate();
  ResultSet result;
  result.header.emplace_back("version", kVersion);
  for (auto& kv : config.echo()) result.header.push_back(std::move(kv));
  const auto start = std::chrono::steady_clock::now();
  dispatch(config, result);
  result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

void write_csv(const ResultSet& result, std::ostream& out) {
  for (const auto& [key, value] : result.header) out << "# " << key << '=' << value << '\n';
  out << "# wall_time_s=" << format_number(result.wall_time_s) << '\n';
  for (std::size_t i = 0; i < result.columns.size(); ++i) out << (i ? "," : "") << result.columns[i];
  out << '\n';
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

void write_json(const ResultSet& result, std::ostream& out) {
  Json doc;
  Json meta = Json::object();
  for (const auto& [key, value] : result.header) meta[key] = value;
  meta["wall_time_s"] = result.wall_time_s;
  doc["metadata"] = std::move(meta);
  Json rows = Json::array();
  for (const auto& row : result.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[result.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

std::string csv_body(const std::string& document) {
  std::istringstream in(document);
  std::string line, body;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '#') continue;
    body += line;
    body += '\n';
  }
  return body;
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const ExperimentConfig config = parse_config(args);
    const ResultSet result = run_experiment(config);
    std::ofstream file;
    if (!config.out.empty()) {
      file.open(config.out);
      if (!file) throw std::runtime_error("cannot open " + config.out);
    }
    std::ostream& sink = config.out.empty() ? out : file;
    if (config.format == OutputFormat::kJson) {
      write_json(result, sink);
    } else {
      write_csv(result, sink);
    }
    if (!result.invariant_ok) {
      err << "orientwalk: " << to_string(ErrorCode::kInvariantFailure) << ": " << result.invariant_message << '\n';
      return 2;
    }
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << usage();
    return 0;
  } catch (const Error& e) {
    err << "orientwalk: " << e.what() << '\n';
    return exit_status(e.code());
  } catch (const std::exception& e) {
    err << "orientwalk: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace orientwalk::cli
