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

#include "autoform/multiturn/trajectory.h"

#include "autoform/common/error.h"

namespace autoform {

Json to_json(const Trajectory& t) {
  return {{"incomplete", to_json(t.incomplete)},
          {"query", t.query ? Json(*t.query) : Json(nullptr)},
          {"answer", t.answer ? Json(*t.answer) : Json(nullptr)},
          {"candidate", t.candidate ? to_json(*t.candidate) : Json(nullptr)},
          {"r_i", t.r_i},
          {"r_o", t.r_o},
          {"terminal", t.terminal}};
}

Trajectory trajectory_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "trajectory: expected an object");
  Trajectory t;
  try {
    t.incomplete = description_from_json(j.at("incomplete"));
    if (j.contains("query") && !j["query"].is_null()) t.query = j["query"].get<std::string>();
    if (j.contains("answer") && !j["answer"].is_null()) t.answer = j["answer"].get<std::string>();
    if (j.contains("candidate") && !j["candidate"].is_null()) {
      t.candidate = candidate_from_json(j["candidate"]);
    }
    t.r_i = j.value("r_i", 0.0);
    t.r_o = j.value("r_o", 0.0);
    t.terminal = j.value("terminal", false);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("trajectory: ") + e.what());
  }
  return t;
}

}  // namespace autoform
