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


// The three worked examples used as golden fixtures: a farming LP, a
// warehouse MILP and a six-type pump network. Ground truth is produced by
// the solvers on first use and cached.

#ifndef AUTOFORM_INSTANCER_FIXTURES_H_
#define AUTOFORM_INSTANCER_FIXTURES_H_

#include <vector>

#include "autoform/core/pump_instance.h"
#include "autoform/core/world.h"

namespace autoform {

FormulationIR farming_lp_formulation();
FormulationIR warehouse_milp_formulation();
PumpInstance worked_pump_instance();

const WorldDescriptor& farming_lp_world();
const WorldDescriptor& warehouse_milp_world();
// Ground truth is the global solve_pump optimum.
const WorldDescriptor& worked_pump_world();

std::vector<WorldDescriptor> worked_examples();

// Metadata shared by every pump world (labels for the flattened variables).
Metadata pump_metadata(const PumpInstance& instance, const std::string& scenario);

}  // namespace autoform

#endif  // AUTOFORM_INSTANCER_FIXTURES_H_
