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

#include "autoform/common/error.h"

namespace autoform {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kInvalidFormulation: return "invalid-formulation";
    case ErrorCode::kMissingVariable: return "missing-variable";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kIterationLimit: return "iteration-limit";
    case ErrorCode::kNodeLimit: return "node-limit";
    case ErrorCode::kInfeasiblePressure: return "infeasible-pressure";
    case ErrorCode::kInfeasibleFlow: return "infeasible-flow";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kScaleLimit: return "scale-limit";
    case ErrorCode::kGenerationFailure: return "generation-failure";
    case ErrorCode::kInsufficientElements: return "insufficient-elements";
    case ErrorCode::kTransport: return "transport";
    case ErrorCode::kRetryCapExceeded: return "retry-cap-exceeded";
    case ErrorCode::kMalformedTrajectory: return "malformed-trajectory";
    case ErrorCode::kOutOfTurn: return "out-of-turn";
    case ErrorCode::kAlreadyTerminal: return "already-terminal";
    case ErrorCode::kGroupTooSmall: return "group-too-small";
    case ErrorCode::kNotFound: return "not-found";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kCategoryMismatch: return "category-mismatch";
    case ErrorCode::kSampleShortfall: return "sample-shortfall";
  }
  return "unknown";
}

}  // namespace autoform
