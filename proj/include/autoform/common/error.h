// Copyright 2026 The Autoform Authors
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

#ifndef AUTOFORM_COMMON_ERROR_H_
#define AUTOFORM_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace autoform {

// Every failure raised by the library carries one of these codes so that the
// CLI and the HTTP service can map it to a machine-readable record.
enum class ErrorCode {
  kInvalidArgument,
  kInvalidFormulation,
  kMissingVariable,
  kDomain,
  kIterationLimit,
  kNodeLimit,
  kInfeasiblePressure,
  kInfeasibleFlow,
  kInfeasible,
  kScaleLimit,
  kGenerationFailure,
  kInsufficientElements,
  kTransport,
  kRetryCapExceeded,
  kMalformedTrajectory,
  kOutOfTurn,
  kAlreadyTerminal,
  kGroupTooSmall,
  kNotFound,
  kParse,
  kCategoryMismatch,
  kSampleShortfall,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace autoform

#endif  // AUTOFORM_COMMON_ERROR_H_
