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

#include "autoform/core/evaluate.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <tuple>

#include "autoform/common/error.h"
#include "autoform/solver/pump.h"

namespace autoform {
namespace {

double value_of(const Assignment& point, const std::string& name) {
  auto it = point.find(name);
  if (it == point.end()) {
    throw Error(ErrorCode::kMissingVariable,
                "point does not assign variable '" + name + "'");
  }
  return it->second;
}

void require_all_assigned(const FormulationIR& ir, const Assignment& point) {
  for (const auto& v : ir.variables) value_of(point, v.name);
}

double linear_value(const CoefficientMap& coefficients, const Assignment& point) {
  double sum = 0.0;
  for (const auto& [name, coef] : coefficients) {
    sum += coef * value_of(point, name);
  }
  return sum;
}

double pump_cost(const PumpInstance& p, const Assignment& point) {
  double cost = 0.0;
  for (int i = 0; i < static_cast<int>(p.types.size()); ++i) {
    const PumpType& t = p.types[static_cast<std::size_t>(i)];
    const double power = value_of(point, pump_var_power(i));
    const double np = value_of(point, pump_var_parallel(i));
    const double ns = value_of(point, pump_var_series(i));
    const double z = value_of(point, pump_var_active(i));
    cost += (t.fixed_cost + t.power_cost * power) * np * ns * z;
  }
  return cost;
}

std::vector<double> pump_residuals(const PumpInstance& p, const Assignment& pt) {
  std::vector<double> out;
  const int n = static_cast<int>(p.types.size());
  double fraction_sum = 0.0;
  for (int i = 0; i < n; ++i) fraction_sum += value_of(pt, pump_var_fraction(i));
  out.push_back(std::abs(fraction_sum - 1.0));
  for (int i = 0; i < n; ++i) {
    const PumpType& t = p.types[static_cast<std::size_t>(i)];
    const double power = value_of(pt, pump_var_power(i));
    const double speed = value_of(pt, pump_var_speed(i));
    const double dp = value_of(pt, pump_var_pressure(i));
    const double vdot = value_of(pt, pump_var_flow(i));
    const double x = value_of(pt, pump_var_fraction(i));
    const double np = value_of(pt, pump_var_parallel(i));
    const double ns = value_of(pt, pump_var_series(i));
    const double z = value_of(pt, pump_var_active(i));
    const double r = speed / p.max_speed;
    out.push_back(std::abs(power - power_at_ratio(t, r, vdot)));
    out.push_back(std::abs(dp - pressure_at_ratio(t, r, vdot)));
    out.push_back(std::abs(x * p.total_flow - vdot * np));
    out.push_back(std::abs(z * p.total_pressure - dp * ns));
    out.push_back(z - np);
    out.push_back(z - ns);
    out.push_back(speed - p.max_speed * z);
    out.push_back(power - t.max_power * z);
    out.push_back(dp - p.total_pressure * z);
    out.push_back(vdot - p.total_flow * z);
    out.push_back(np - p.max_parallel * z);
    out.push_back(ns - p.max_series * z);
  }
  return out;
}

// Lexicographic fingerprint of a coefficient map (already name-sorted).
std::vector<std::pair<std::string, double>> fingerprint(const CoefficientMap& m) {
  return {m.begin(), m.end()};
}

}  // namespace

double evaluate_objective(const FormulationIR& ir, const Assignment& point) {
  if (ir.category == Category::kPump && ir.pump) {
    require_all_assigned(ir, point);
    return pump_cost(*ir.pump, point);
  }
  require_all_assigned(ir, point);
  return linear_value(ir.objective.coefficients, point) + ir.objective.constant;
}

std::vector<double> constraint_residuals(const FormulationIR& ir,
                                         const Assignment& point) {
  require_all_assigned(ir, point);
  if (ir.category == Category::kPump && ir.pump) {
    return pump_residuals(*ir.pump, point);
  }
  std::vector<double> out;
  out.reserve(ir.constraints.size());
  for (const auto& c : ir.constraints) {
    const double lhs = linear_value(c.coefficients, point);
    switch (c.comparator) {
      case Comparator::kLe: out.push_back(lhs - c.rhs); break;
      case Comparator::kGe: out.push_back(c.rhs - lhs); break;
      case Comparator::kEq: out.push_back(std::abs(lhs - c.rhs)); break;
    }
  }
  return out;
}

double max_violation(const FormulationIR& ir, const Assignment& point) {
  double worst = 0.0;
  for (double r : constraint_residuals(ir, point)) worst = std::max(worst, r);
  for (const auto& v : ir.variables) {
    const double x = point.at(v.name);
    if (!std::isfinite(x)) return INFINITY;
    worst = std::max(worst, v.lower - x);
    if (v.upper) worst = std::max(worst, x - *v.upper);
    if (v.domain == Domain::kBinary) worst = std::max(worst, x - 1.0);
    if (v.is_integral()) worst = std::max(worst, std::abs(x - std::round(x)));
  }
  return worst;
}

bool is_feasible(const FormulationIR& ir, const Assignment& point,
                 double tolerance) {
  return max_violation(ir, point) <= tolerance;
}

double trivial_fraction(const FormulationIR& ir, const Assignment& point) {
  if (ir.category == Category::kPump && ir.pump) {
    const int n = static_cast<int>(ir.pump->types.size());
    int inactive = 0;
    for (int i = 0; i < n; ++i) {
      if (std::abs(value_of(point, pump_var_active(i))) <= kFeasibilityTolerance) {
        ++inactive;
      }
    }
    return n == 0 ? 0.0 : static_cast<double>(inactive) / n;
  }
  if (ir.variables.empty()) return 0.0;
  int trivial = 0;
  for (const auto& v : ir.variables) {
    if (std::abs(value_of(point, v.name) - v.lower) <= kFeasibilityTolerance) {
      ++trivial;
    }
  }
  return static_cast<double>(trivial) / static_cast<double>(ir.variables.size());
}

ValidationReport validate_descriptor(const WorldDescriptor& w) {
  ValidationReport report;
  report.feasible = true;
  try {
    validate_formulation(w.formulation);
  } catch (const Error& e) {
    report.feasible = false;
    report.messages.push_back(std::string("invalid formulation: ") + e.what());
    return report;
  }
  if (w.formulation.category != Category::kPump && w.formulation.constraints.empty()) {
    report.feasible = false;
    report.messages.push_back("formulation has no constraints");
  }
  for (const auto& v : w.formulation.variables) {
    if (!w.solution.contains(v.name)) {
      report.feasible = false;
      report.messages.push_back("ground truth does not assign '" + v.name + "'");
    }
  }
  if (!report.feasible) return report;

  const double violation = max_violation(w.formulation, w.solution);
  if (violation > kFeasibilityTolerance) {
    report.feasible = false;
    report.messages.push_back("ground truth violates the formulation by " +
                              std::to_string(violation));
  }
  const double value = evaluate_objective(w.formulation, w.solution);
  if (std::abs(value - w.objective_value) >
      kFeasibilityTolerance * (1.0 + std::abs(w.objective_value))) {
    report.feasible = false;
    report.messages.push_back("stored objective " + std::to_string(w.objective_value) +
                              " disagrees with evaluated " + std::to_string(value));
  }
  report.trivial_fraction = trivial_fraction(w.formulation, w.solution);
  report.complexity_pass = report.trivial_fraction <= kMaxTrivialFraction + 1e-12;
  if (!report.complexity_pass) {
    report.messages.push_back("trivial-variable fraction " +
                              std::to_string(report.trivial_fraction) +
                              " exceeds one quarter");
  }
  return report;
}

FormulationIR canonicalize(const FormulationIR& ir) {
  std::set<std::string> seen;
  for (const auto& v : ir.variables) {
    if (!seen.insert(v.name).second) {
      throw Error(ErrorCode::kInvalidFormulation,
                  "duplicate variable name '" + v.name + "'");
    }
  }
  FormulationIR out = ir;
  std::sort(out.variables.begin(), out.variables.end(),
            [](const Variable& a, const Variable& b) { return a.name < b.name; });
  std::sort(out.constraints.begin(), out.constraints.end(),
            [](const LinearConstraint& a, const LinearConstraint& b) {
              return std::make_tuple(a.comparator, fingerprint(a.coefficients), a.rhs,
                                     a.name) <
                     std::make_tuple(b.comparator, fingerprint(b.coefficients), b.rhs,
                                     b.name);
            });
  return out;
}

}  // namespace autoform
