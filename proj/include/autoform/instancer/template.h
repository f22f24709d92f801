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


#ifndef AUTOFORM_INSTANCER_TEMPLATE_H_
#define AUTOFORM_INSTANCER_TEMPLATE_H_

#include <optional>
#include <string>
#include <vector>

#include "autoform/core/formulation.h"
#include "autoform/core/pump_instance.h"

namespace autoform {

// A standard-form template. LP families: resource-allocation, production,
// blending. MILP families: assignment, scheduling, packing, routing,
// network-flows, integer-program, production-planning, knapsack,
// set-covering. Pump families: easy, hard.
//
// For LP/MILP the size knobs count decision variables; for pumps they count
// pump types. Coefficient bounds scale the sampled data.
struct TemplateSpec {
  Category category = Category::kLp;
  std::string family;
  int min_size = 4;
  int max_size = 12;
  double coefficient_min = 1.0;
  double coefficient_max = 20.0;
  std::vector<std::string> scenarios;
  // Pump only: series / parallel bounds of sampled instances.
  int max_series = 2;
  int max_parallel = 2;
  // Pump only: use this instance verbatim instead of sampling.
  std::optional<PumpInstance> fixed_pump;
  // When false, instantiate keeps ground truths whose trivial-variable share
  // exceeds one quarter (used for the fixed worked-example template).
  bool enforce_complexity = true;

  bool operator==(const TemplateSpec&) const = default;
};

std::vector<std::string> template_families(Category category);

// Default template for a family. Throws kInvalidArgument for unknown names.
TemplateSpec make_template(Category category, const std::string& family);

// Pump template pinned to the worked-example instance.
TemplateSpec worked_pump_template();

// Throws kInvalidArgument: unknown family, empty or inverted ranges, LP/MILP
// sizes outside [2, 20], pump type counts outside [1, 8].
void validate_template(const TemplateSpec& spec);

}  // namespace autoform

#endif  // AUTOFORM_INSTANCER_TEMPLATE_H_
