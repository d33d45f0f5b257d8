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

#include "orientwalk/error.hpp"

#include <algorithm>

#include "orientwalk/record.hpp"

namespace orientwalk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOutOfWindow: return "OUT_OF_WINDOW";
    case ErrorCode::kMalformedFunction: return "MALFORMED_FUNCTION";
    case ErrorCode::kNonpositiveCorrelation: return "NONPOSITIVE_CORRELATION";
    case ErrorCode::kWindowTooLarge: return "WINDOW_TOO_LARGE";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kUsage: return "USAGE_ERROR";
    case ErrorCode::kValidation: return "VALIDATION_ERROR";
    case ErrorCode::kInvariantFailure: return "INVARIANT_FAILURE";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

double EstimateRecord::extra_value(const std::string& key) const {
  const auto it = std::find_if(extra.begin(), extra.end(), [&](const auto& kv) { return kv.first == key; });
  if (it == extra.end()) throw Error(ErrorCode::kInvalidArgument, "no extra field '" + key + "'");
  return it->second;
}

}  // namespace orientwalk
