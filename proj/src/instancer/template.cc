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


#include "autoform/instancer/template.h"

#include <cmath>
#include <string>

#include "autoform/common/error.h"
#include "autoform/instancer/fixtures.h"
#include "families.h"

namespace autoform {
namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "template: " + what);
}

bool known_family(Category category, const std::string& family) {
  for (const auto& f : template_families(category)) {
    if (f == family) return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> template_families(Category category) {
  switch (category) {
    case Category::kLp:
      return {"resource-allocation", "production", "blending"};
    case Category::kMilp:
      return {"assignment", "scheduling",          "packing",  "routing",     "network-flows",
              "integer-program", "production-planning", "knapsack", "set-covering"};
    case Category::kPump:
      return {"easy", "hard"};
  }
  return {};
}

TemplateSpec make_template(Category category, const std::string& family) {
  if (!known_family(category, family)) {
    bad("unknown " + std::string(to_string(category)) + " family '" + family + "'");
  }
  TemplateSpec t;
  t.category = category;
  t.family = family;
  if (category == Category::kPump) {
    t.coefficient_min = 0.5;
    t.coefficient_max = 1.5;
    if (family == "easy") {
      t.min_size = 1;
      t.max_size = 2;
      t.max_series = 1;
      t.max_parallel = 1;
    } else {
      t.min_size = 4;
      t.max_size = 6;
    }
  }
  return t;
}

TemplateSpec worked_pump_template() {
  TemplateSpec t = make_template(Category::kPump, "hard");
  t.fixed_pump = worked_pump_instance();
  t.min_size = t.max_size = static_cast<int>(t.fixed_pump->types.size());
  t.enforce_complexity = false;
  t.scenarios = {"water utility"};
  return t;
}

void validate_template(const TemplateSpec& spec) {
  if (!known_family(spec.category, spec.family)) bad("unknown family '" + spec.family + "'");
  if (spec.min_size > spec.max_size) bad("size range is empty");
  if (spec.category == Category::kPump) {
    if (spec.min_size < 1 || spec.max_size > 8) bad("pump type count must lie in [1, 8]");
    if (spec.max_series < 1 || spec.max_parallel < 1) bad("series/parallel bounds must be >= 1");
  } else if (spec.min_size < 2 || spec.max_size > 20) {
    bad("variable count must lie in [2, 20]");
  }
  if (!std::isfinite(spec.coefficient_min) || !std::isfinite(spec.coefficient_max) ||
      !(spec.coefficient_min > 0.0) || spec.coefficient_min > spec.coefficient_max) {
    bad("coefficient range must be positive and non-empty");
  }
  for (const auto& s : spec.scenarios) {
    if (s.empty()) bad("empty scenario label");
  }
  if (spec.fixed_pump) {
    if (spec.category != Category::kPump) bad("fixed pump instance on a non-pump template");
    validate_pump_instance(*spec.fixed_pump);
  } else if (!internal::family_size_feasible(spec)) {
    bad("family '" + spec.family + "' has no structure within the size range");
  }
}

}  // namespace autoform
