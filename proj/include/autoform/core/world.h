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

#ifndef AUTOFORM_CORE_WORLD_H_
#define AUTOFORM_CORE_WORLD_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "autoform/core/formulation.h"

namespace autoform {

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

std::string_view to_string(SolveStatus s);
SolveStatus parse_solve_status(std::string_view s);

struct Solution {
  SolveStatus status = SolveStatus::kInfeasible;
  Assignment assignment;
  double objective = 0.0;
  std::string diagnostics;

  bool optimal() const { return status == SolveStatus::kOptimal; }
  bool operator==(const Solution&) const = default;
};

// Human-facing naming of one formulation element.
struct ElementInfo {
  std::string label;  // "acres of Corn", "water"
  std::string unit;   // "acres", "units"

  bool operator==(const ElementInfo&) const = default;
};

// Minimal metadata; additional keys would be additive.
struct Metadata {
  std::string scenario;
  std::string objective_label;  // "total profit"
  std::string objective_unit;   // "$"
  std::map<std::string, ElementInfo> variables;
  std::map<std::string, ElementInfo> constraints;
  std::vector<std::string> notes;

  bool operator==(const Metadata&) const = default;
};

// Ground truth for one problem: the formulation plays the role of the
// reference solver code, `solution` is the optimal point it produces.
struct WorldDescriptor {
  std::string id;
  FormulationIR formulation;
  Assignment solution;
  double objective_value = 0.0;
  Metadata metadata;
  std::string difficulty = "standard";

  Category category() const { return formulation.category; }
  bool operator==(const WorldDescriptor&) const = default;
};

struct ValidationReport {
  bool feasible = false;
  bool complexity_pass = false;
  double trivial_fraction = 0.0;
  std::vector<std::string> messages;

  bool ok() const { return feasible && complexity_pass; }
};

}  // namespace autoform

#endif  // AUTOFORM_CORE_WORLD_H_
