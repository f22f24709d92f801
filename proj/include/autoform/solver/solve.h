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

#ifndef AUTOFORM_SOLVER_SOLVE_H_
#define AUTOFORM_SOLVER_SOLVE_H_

#include "autoform/core/formulation.h"
#include "autoform/core/world.h"

namespace autoform {

// Dispatches on the category. Pump formulations are solved by solve_pump and
// flattened; an infeasible pump instance yields status infeasible. Throws
// kInvalidFormulation for IRs that do not validate.
Solution solve(const FormulationIR& ir);

}  // namespace autoform

#endif  // AUTOFORM_SOLVER_SOLVE_H_
