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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orientwalk/orientation.hpp"
#include "orientwalk/scenery.hpp"

namespace orientwalk::cli {

enum class OutputFormat { kCsv, kJson };

/// Everything one invocation needs. Sizes not used by the subcommand keep
/// their defaults and are still echoed.
struct ExperimentConfig {
  std::string subcommand;
  EnvSpec env;
  std::uint64_t n = 1000;
  std::uint64_t steps = 10000;
  std::uint64_t draws = 1000;
  std::int64_t replicates = 100;
  std::optional<std::uint64_t> record_path;
  std::string path_out = "walk_path.csv";
  std::vector<std::int64_t> lags{1, 2, 3, 4, 5};
  std::vector<double> times{1.0};
  std::vector<std::uint64_t> n_grid{64, 128, 256, 512, 1024};
  std::vector<double> t_grid{0.01, 0.1, 0.5, 1.0};
  DeltaMode mode = DeltaMode::kDiscrete;
  double dt = 1e-4;
  double dx = 1e-2;
  double c = 2.0;
  double t = 1.0;
  double t1 = 0.5;
  double t2 = 1.0;
  std::int64_t newman_window = 8;
  std::string f;
  std::string g;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out;
  OutputFormat format = OutputFormat::kCsv;
  std::string config_file;

  /// Throws Error(kValidation) on out-of-range values.
  void validate() const;
  /// key/value pairs for the output header, in a fixed order.
  [[nodiscard]] std::vector<std::pair<std::string, std::string>> echo() const;
};

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"env-sample", "walk",    "returns",       "embed-check", "tn-ratio",
                                              "delta",      "delta-selfsim", "scaling", "flt-check",   "newman"};
  return names;
}

/// `args` excludes the program name. Flags override values read from
/// `--config <file>` (flat `key = value` lines). Throws Error(kUsage) naming
/// the offending flag or key, Error(kValidation) for bad values.
ExperimentConfig parse_config(const std::vector<std::string>& args);

/// Returns the usage text.
std::string usage();

}  // namespace orientwalk::cli
