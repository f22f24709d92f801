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

// Record of one two-turn episode.

#ifndef AUTOFORM_MULTITURN_TRAJECTORY_H_
#define AUTOFORM_MULTITURN_TRAJECTORY_H_

#include <optional>
#include <string>

#include "autoform/backtranslate/description.h"
#include "autoform/reward/candidate.h"

namespace autoform {

struct Trajectory {
  Description incomplete;             // d-minus as served
  std::optional<std::string> query;   // turn 1; absent on commit-without-query
  std::optional<std::string> answer;  // oracle reply to `query`
  std::optional<Candidate> candidate; // turn 2
  double r_i = 0.0;
  double r_o = 0.0;
  bool terminal = false;

  bool operator==(const Trajectory&) const = default;
};

Json to_json(const Trajectory& t);
Trajectory trajectory_from_json(const Json& j);

}  // namespace autoform

#endif  // AUTOFORM_MULTITURN_TRAJECTORY_H_
