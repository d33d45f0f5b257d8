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

#include <stdexcept>
#include <string>
#include <string_view>

namespace orientwalk {

enum class ErrorCode {
  kOutOfWindow,
  kMalformedFunction,
  kNonpositiveCorrelation,
  kWindowTooLarge,
  kInvalidArgument,
  kUsage,
  kValidation,
  kInvariantFailure,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-checkable code; what() is prefixed with the
/// code name, e.g. "OUT_OF_WINDOW: level 70 outside [-64, 64]".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Throws kInvalidArgument unless `condition` holds.
inline void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::kInvalidArgument, message);
}

}  // namespace orientwalk
