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


#include "autoform/solver/solve.h"

#include "autoform/common/error.h"
#include "autoform/solver/lp.h"
#include "autoform/solver/milp.h"
#include "autoform/solver/pump.h"

namespace autoform {

Solution solve(const FormulationIR& ir) {
  validate_formulation(ir);
  switch (ir.category) {
    case Category::kLp: return solve_lp(ir);
    case Category::kMilp: return solve_milp(ir);
    case Category::kPump: break;
  }
  Solution sol;
  try {
    const PumpSolveResult r = solve_pump(*ir.pump);
    sol.status = SolveStatus::kOptimal;
    sol.assignment = flatten_pump_config(*ir.pump, r.config);
    sol.objective = r.cost;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasible) throw;
    sol.status = SolveStatus::kInfeasible;
    sol.diagnostics = e.what();
  }
  return sol;
}

}  // namespace autoform
