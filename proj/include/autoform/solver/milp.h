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

// Depth-first branch-and-bound over simplex relaxations.

#ifndef AUTOFORM_SOLVER_MILP_H_
#define AUTOFORM_SOLVER_MILP_H_

#include "autoform/core/formulation.h"
#include "autoform/core/world.h"
#include "autoform/solver/lp.h"

namespace autoform {

struct MilpOptions {
  long long max_nodes = 100'000;
  double integrality_tolerance = 1e-6;
  LpOptions lp;
};

// Branches on the most fractional variable; both children are solved and the
// one with the better bound is explored first. Returns iteration-limit with a
// "node limit" diagnostic if max_nodes relaxations were not enough. Integer
// variables are rounded in the returned assignment.
Solution solve_milp(const FormulationIR& ir, const MilpOptions& options = {});

}  // namespace autoform

#endif  // AUTOFORM_SOLVER_MILP_H_
