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

#ifndef AUTOFORM_CORE_EVALUATE_H_
#define AUTOFORM_CORE_EVALUATE_H_

#include <vector>

#include "autoform/core/formulation.h"
#include "autoform/core/world.h"

namespace autoform {

// Absolute tolerance on normalized residuals, bounds and integrality.
inline constexpr double kFeasibilityTolerance = 1e-6;

// Maximum fraction of variables (pump: types) allowed to sit at their lower
// bound (pump: inactive) in an accepted ground truth.
inline constexpr double kMaxTrivialFraction = 0.25;

// Raw objective value (no sign flip for maximization). Pump formulations
// evaluate the total installed cost. Throws kMissingVariable naming the
// first unassigned variable.
double evaluate_objective(const FormulationIR& ir, const Assignment& point);

// One residual per constraint in g(x) <= 0 form: "<=" gives lhs - rhs,
// ">=" gives rhs - lhs, "=" gives |lhs - rhs|. Pump formulations return the
// residuals of the network equations in a fixed order. Throws
// kMissingVariable.
std::vector<double> constraint_residuals(const FormulationIR& ir,
                                         const Assignment& point);

// Largest violation over constraints, variable bounds and integrality.
double max_violation(const FormulationIR& ir, const Assignment& point);

bool is_feasible(const FormulationIR& ir, const Assignment& point,
                 double tolerance = kFeasibilityTolerance);

// Fraction of variables within tolerance of their lower bound; for pump
// formulations, the fraction of inactive types.
double trivial_fraction(const FormulationIR& ir, const Assignment& point);

// Report never throws; every failure is a message.
ValidationReport validate_descriptor(const WorldDescriptor& w);

// Sorted variables, coefficient maps and constraints (by comparator, then
// coefficient fingerprint, then rhs, then name). Idempotent. Throws
// kInvalidFormulation on duplicate variable names.
FormulationIR canonicalize(const FormulationIR& ir);

}  // namespace autoform

#endif  // AUTOFORM_CORE_EVALUATE_H_
