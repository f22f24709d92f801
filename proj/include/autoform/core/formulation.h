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

#ifndef AUTOFORM_CORE_FORMULATION_H_
#define AUTOFORM_CORE_FORMULATION_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autoform/core/pump_instance.h"

namespace autoform {

enum class Category { kLp, kMilp, kPump };
enum class Domain { kContinuous, kInteger, kBinary };
enum class Comparator { kLe, kEq, kGe };
enum class Sense { kMin, kMax };

std::string_view to_string(Category c);
std::string_view to_string(Domain d);
std::string_view to_string(Comparator c);
std::string_view to_string(Sense s);
Category parse_category(std::string_view s);
Domain parse_domain(std::string_view s);
Comparator parse_comparator(std::string_view s);
Sense parse_sense(std::string_view s);

// Ordered so that iteration, hashing and serialization are deterministic.
using CoefficientMap = std::map<std::string, double>;

// Point in variable space, keyed by variable name.
using Assignment = std::map<std::string, double>;

struct Variable {
  std::string name;
  Domain domain = Domain::kContinuous;
  double lower = 0.0;
  std::optional<double> upper;  // nullopt: unbounded above

  bool is_integral() const { return domain != Domain::kContinuous; }
  bool operator==(const Variable&) const = default;
};

struct LinearConstraint {
  std::string name;
  CoefficientMap coefficients;
  Comparator comparator = Comparator::kLe;
  double rhs = 0.0;

  bool operator==(const LinearConstraint&) const = default;
};

struct Objective {
  Sense sense = Sense::kMin;
  CoefficientMap coefficients;
  double constant = 0.0;

  bool operator==(const Objective&) const = default;
};

// Canonical solver-executable problem. Linear categories use `constraints`;
// the pump category carries its physics in `pump` and declares the
// flattened variables produced by make_pump_formulation().
struct FormulationIR {
  Category category = Category::kLp;
  std::vector<Variable> variables;
  std::vector<LinearConstraint> constraints;
  Objective objective;
  std::optional<PumpInstance> pump;

  const Variable* find_variable(std::string_view name) const;
  bool operator==(const FormulationIR&) const = default;
};

// Throws kInvalidFormulation describing the first violated structural rule:
// unique names, declared coefficients, lower <= upper, finite lower bounds,
// category consistency (MILP has an integral variable, LP has none, pump has
// an instance and exactly the flattened variable set).
void validate_formulation(const FormulationIR& ir);

// Builds the flattened pump formulation; variable bounds mirror the
// reference model (power in [0, max_power], speed in [0, max_speed], ...).
FormulationIR make_pump_formulation(const PumpInstance& instance);

}  // namespace autoform

#endif  // AUTOFORM_CORE_FORMULATION_H_
