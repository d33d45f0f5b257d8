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
#include <string>
#include <utility>
#include <vector>

namespace orientwalk {

/// Ordered key/value list. Order is part of the output format.
using Metadata = std::vector<std::pair<std::string, double>>;

/// The universal result row.
struct EstimateRecord {
  std::string estimator_id;
  std::string law;
  Metadata params;
  std::int64_t n = 0;
  std::int64_t replicates = 1;
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
  Metadata extra;

  /// Looks up `key` in extra; throws if absent.
  [[nodiscard]] double extra_value(const std::string& key) const;
};

}  // namespace orientwalk
