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

// Dense two-phase primal simplex with Bland's rule.

#ifndef AUTOFORM_SOLVER_LP_H_
#define AUTOFORM_SOLVER_LP_H_

#include <optional>
#include <vector>

#include "autoform/core/formulation.h"
#include "autoform/core/world.h"

namespace autoform {

struct LpOptions {
  // Pivot cap; 0 means 1000 * (rows + columns).
  long long max_iterations = 0;
};

// Optimal, infeasible or unbounded; iteration-limit if the pivot cap is hit.
// Throws kCategoryMismatch unless ir is an LP, kInvalidFormulation if it does
// not validate.
Solution solve_lp(const FormulationIR& ir, const LpOptions& options = {});

// Continuous relaxation of a linear formulation with the variable bounds
// replaced by `lower` / `upper` (indexed like ir.variables). Integrality is
// ignored.
Solution solve_relaxation(const FormulationIR& ir, const std::vector<double>& lower,
                          const std::vector<std::optional<double>>& upper,
                          const LpOptions& options = {});

}  // namespace autoform

#endif  // AUTOFORM_SOLVER_LP_H_
