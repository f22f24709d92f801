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

#include "autoform/core/formulation.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "autoform/common/error.h"

namespace autoform {
namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidFormulation, what);
}

void check_coefficients(const CoefficientMap& coefficients,
                        const std::set<std::string>& declared,
                        const std::string& where) {
  for (const auto& [name, value] : coefficients) {
    if (!declared.contains(name)) {
      invalid(where + " references undeclared variable '" + name + "'");
    }
    if (!std::isfinite(value)) {
      invalid(where + " has a non-finite coefficient on '" + name + "'");
    }
  }
}

}  // namespace

std::string_view to_string(Category c) {
  switch (c) {
    case Category::kLp: return "LP";
    case Category::kMilp: return "MILP";
    case Category::kPump: return "NLP-Pump";
  }
  return "LP";
}

std::string_view to_string(Domain d) {
  switch (d) {
    case Domain::kContinuous: return "continuous";
    case Domain::kInteger: return "integer";
    case Domain::kBinary: return "binary";
  }
  return "continuous";
}

std::string_view to_string(Comparator c) {
  switch (c) {
    case Comparator::kLe: return "<=";
    case Comparator::kEq: return "=";
    case Comparator::kGe: return ">=";
  }
  return "<=";
}

std::string_view to_string(Sense s) {
  return s == Sense::kMax ? "max" : "min";
}

Category parse_category(std::string_view s) {
  if (s == "LP" || s == "lp") return Category::kLp;
  if (s == "MILP" || s == "milp") return Category::kMilp;
  if (s == "NLP-Pump" || s == "pump" || s == "nlp-pump") return Category::kPump;
  throw Error(ErrorCode::kParse, "unknown category '" + std::string(s) + "'");
}

Domain parse_domain(std::string_view s) {
  if (s == "continuous") return Domain::kContinuous;
  if (s == "integer") return Domain::kInteger;
  if (s == "binary") return Domain::kBinary;
  throw Error(ErrorCode::kParse, "unknown domain '" + std::string(s) + "'");
}

Comparator parse_comparator(std::string_view s) {
  if (s == "<=") return Comparator::kLe;
  if (s == "=" || s == "==") return Comparator::kEq;
  if (s == ">=") return Comparator::kGe;
  throw Error(ErrorCode::kParse, "unknown comparator '" + std::string(s) + "'");
}

Sense parse_sense(std::string_view s) {
  if (s == "min" || s == "minimize") return Sense::kMin;
  if (s == "max" || s == "maximize") return Sense::kMax;
  throw Error(ErrorCode::kParse, "unknown sense '" + std::string(s) + "'");
}

const Variable* FormulationIR::find_variable(std::string_view name) const {
  for (const auto& v : variables) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

void validate_formulation(const FormulationIR& ir) {
  std::set<std::string> declared;
  bool any_integral = false;
  for (const auto& v : ir.variables) {
    if (v.name.empty()) invalid("variable with empty name");
    if (!declared.insert(v.name).second) {
      invalid("duplicate variable name '" + v.name + "'");
    }
    if (!std::isfinite(v.lower)) {
      invalid("variable '" + v.name + "' needs a finite lower bound");
    }
    if (v.upper && (!std::isfinite(*v.upper) || *v.upper < v.lower)) {
      invalid("variable '" + v.name + "' has upper bound below lower bound");
    }
    if (v.domain == Domain::kBinary &&
        (v.lower < 0.0 || v.lower > 1.0 || (v.upper && *v.upper > 1.0))) {
      invalid("binary variable '" + v.name + "' has bounds outside [0, 1]");
    }
    any_integral = any_integral || v.is_integral();
  }
  check_coefficients(ir.objective.coefficients, declared, "objective");
  if (!std::isfinite(ir.objective.constant)) invalid("non-finite objective constant");
  std::set<std::string> constraint_names;
  for (const auto& c : ir.constraints) {
    const std::string where = "constraint '" + c.name + "'";
    if (!c.name.empty() && !constraint_names.insert(c.name).second) {
      invalid("duplicate constraint name '" + c.name + "'");
    }
    check_coefficients(c.coefficients, declared, where);
    if (!std::isfinite(c.rhs)) invalid(where + " has a non-finite right-hand side");
  }
  switch (ir.category) {
    case Category::kLp:
      if (any_integral) invalid("LP formulation declares integer variables");
      if (ir.pump) invalid("LP formulation carries a pump instance");
      break;
    case Category::kMilp:
      if (!any_integral) invalid("MILP formulation has no integer variables");
      if (ir.pump) invalid("MILP formulation carries a pump instance");
      break;
    case Category::kPump: {
      if (!ir.pump) invalid("pump formulation without a pump instance");
      try {
        validate_pump_instance(*ir.pump);
      } catch (const Error& e) {
        invalid(e.what());
      }
      if (!ir.constraints.empty()) {
        invalid("pump formulation must not carry linear constraints");
      }
      auto by_name = [](const Variable& a, const Variable& b) { return a.name < b.name; };
      auto expected = make_pump_formulation(*ir.pump).variables;
      auto actual = ir.variables;
      std::sort(expected.begin(), expected.end(), by_name);
      std::sort(actual.begin(), actual.end(), by_name);
      if (actual != expected) {
        invalid("pump formulation variables differ from the flattened pump model");
      }
      if (!ir.objective.coefficients.empty() ||
          ir.objective.sense != Sense::kMin) {
        invalid("pump objective is the installed cost and must be minimized");
      }
      break;
    }
  }
}

FormulationIR make_pump_formulation(const PumpInstance& instance) {
  FormulationIR ir;
  ir.category = Category::kPump;
  ir.pump = instance;
  ir.objective.sense = Sense::kMin;
  const int n = static_cast<int>(instance.types.size());
  for (int i = 0; i < n; ++i) {
    const PumpType& t = instance.types[static_cast<std::size_t>(i)];
    ir.variables.push_back({pump_var_power(i), Domain::kContinuous, 0.0, t.max_power});
    ir.variables.push_back({pump_var_speed(i), Domain::kContinuous, 0.0, instance.max_speed});
    ir.variables.push_back({pump_var_pressure(i), Domain::kContinuous, 0.0, instance.total_pressure});
    ir.variables.push_back({pump_var_flow(i), Domain::kContinuous, 0.0, instance.total_flow});
    ir.variables.push_back({pump_var_fraction(i), Domain::kContinuous, 0.0, 1.0});
    ir.variables.push_back({pump_var_parallel(i), Domain::kInteger, 0.0,
                            static_cast<double>(instance.max_parallel)});
    ir.variables.push_back({pump_var_series(i), Domain::kInteger, 0.0,
                            static_cast<double>(instance.max_series)});
    ir.variables.push_back({pump_var_active(i), Domain::kBinary, 0.0, 1.0});
  }
  return ir;
}

void validate_pump_instance(const PumpInstance& p) {
  auto bad = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, "pump instance: " + what);
  };
  if (!(p.total_flow > 0.0)) bad("total flow must be positive");
  if (!(p.total_pressure > 0.0)) bad("total pressure must be positive");
  if (!(p.max_speed > 0.0)) bad("max speed must be positive");
  if (p.max_series < 1 || p.max_parallel < 1) bad("series/parallel bounds must be >= 1");
  if (p.types.empty()) bad("at least one pump type is required");
  for (std::size_t i = 0; i < p.types.size(); ++i) {
    const PumpType& t = p.types[i];
    for (double v : {t.m1, t.m2, t.m3, t.m4, t.m5, t.m6, t.fixed_cost,
                     t.power_cost, t.max_power}) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        bad("type " + std::to_string(i) + " has a non-positive coefficient");
      }
    }
  }
}

std::string pump_var_power(int i) { return "P_" + std::to_string(i); }
std::string pump_var_speed(int i) { return "w_" + std::to_string(i); }
std::string pump_var_pressure(int i) { return "dp_" + std::to_string(i); }
std::string pump_var_flow(int i) { return "vdot_" + std::to_string(i); }
std::string pump_var_fraction(int i) { return "x_" + std::to_string(i); }
std::string pump_var_parallel(int i) { return "num_p_" + std::to_string(i); }
std::string pump_var_series(int i) { return "num_s_" + std::to_string(i); }
std::string pump_var_active(int i) { return "z_" + std::to_string(i); }

}  // namespace autoform
