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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace orientwalk::cli {

using Json = nlohmann::ordered_json;

/// Rows plus the metadata written ahead of them. Data rows are a pure
/// function of the config minus --threads; wall time lives in the header.
struct ResultSet {
  std::vector<std::pair<std::string, std::string>> header;
  double wall_time_s = 0.0;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  /// False when a checked identity or bound failed.
  bool invariant_ok = true;
  std::string invariant_message;
};

ResultSet run_experiment(const ExperimentConfig& config);

void write_csv(const ResultSet& result, std::ostream& out);
void write_json(const ResultSet& result, std::ostream& out);

/// Data rows of a CSV document: every line not starting with '#'.
std::string csv_body(const std::string& document);

/// Full command-line entry point. Returns the process exit status:
/// 0 success, 1 usage or validation error, 2 invariant failure,
/// 3 runtime error.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orientwalk::cli
