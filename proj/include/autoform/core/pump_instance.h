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

#ifndef AUTOFORM_CORE_PUMP_INSTANCE_H_
#define AUTOFORM_CORE_PUMP_INSTANCE_H_

#include <string>
#include <vector>

namespace autoform {

// Characteristic-curve coefficients and costs of one centrifugal pump type.
//
//   power     P  = m1 r^3 + m2 r^2 v - m3 r v^2
//   pressure  dp = m4 r v + m5 r^2 - m6 v^2
//
// where r = speed / max_speed and v is the flow through a single pump.
struct PumpType {
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  double m5 = 0.0;
  double m6 = 0.0;
  double fixed_cost = 0.0;  // per installed pump
  double power_cost = 0.0;  // per unit of power per installed pump
  double max_power = 0.0;

  bool operator==(const PumpType&) const = default;
};

// A pump network synthesis instance: choose which types to install, how many
// in series and in parallel, and at which speed and flow, to deliver
// total_flow at total_pressure for minimum cost.
struct PumpInstance {
  double total_flow = 0.0;
  double total_pressure = 0.0;
  double max_speed = 0.0;
  int max_series = 1;
  int max_parallel = 1;
  std::vector<PumpType> types;

  bool operator==(const PumpInstance&) const = default;
};

// Throws kInvalidArgument unless every coefficient is positive, there is at
// least one type and both count bounds are >= 1.
void validate_pump_instance(const PumpInstance& instance);

// Variable names of the flattened pump formulation for type `i`.
std::string pump_var_power(int i);
std::string pump_var_speed(int i);
std::string pump_var_pressure(int i);
std::string pump_var_flow(int i);
std::string pump_var_fraction(int i);
std::string pump_var_parallel(int i);
std::string pump_var_series(int i);
std::string pump_var_active(int i);

}  // namespace autoform

#endif  // AUTOFORM_CORE_PUMP_INSTANCE_H_
