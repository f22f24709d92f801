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

// Pump network synthesis.
//
// A configuration activates a subset of pump types; an active type i installs
// n_s(i) pumps in series times n_p(i) in parallel, every pump running at
// speed w(i) with flow v(i). Each active type must deliver the full pressure
// target through its series chain, and the parallel flows of all active
// types add up to the total flow:
//
//   dp(i) * n_s(i) = total_pressure
//   sum_i n_p(i) * v(i) = total_flow
//
// Cost = sum_i (fixed_cost(i) + power_cost(i) * P(i)) * n_p(i) * n_s(i).
//
// The discrete part is enumerated exhaustively. For a fixed pattern the
// pressure equation fixes the speed as the positive root of a quadratic in
// the speed ratio, which turns every type into a one-dimensional cost curve
// in its flow; the flow split is then optimized by pairwise exchange (a
// 256-point grid on the transfer between two types refined by golden-section
// search) until no exchange improves the cost.

#ifndef AUTOFORM_SOLVER_PUMP_H_
#define AUTOFORM_SOLVER_PUMP_H_

#include <string>
#include <vector>

#include "autoform/core/formulation.h"
#include "autoform/core/pump_instance.h"

namespace autoform {

// Characteristic curves at speed ratio r = speed / max_speed, without domain
// checks; used when scoring arbitrary candidate points.
inline double power_at_ratio(const PumpType& t, double r, double flow) {
  return t.m1 * r * r * r + t.m2 * r * r * flow - t.m3 * r * flow * flow;
}
inline double pressure_at_ratio(const PumpType& t, double r, double flow) {
  return t.m4 * r * flow + t.m5 * r * r - t.m6 * flow * flow;
}

// Shaft power of one pump. Throws kDomain unless 0 <= speed <= max_speed
// and flow >= 0.
double pump_power(const PumpType& type, double speed, double max_speed,
                  double flow);

// Pressure rise across one pump. Same domain as pump_power.
double pump_pressure(const PumpType& type, double speed, double max_speed,
                     double flow);

struct PumpTypeState {
  bool active = false;
  int series = 0;
  int parallel = 0;
  double speed = 0.0;
  double flow = 0.0;  // per pump
  double power = 0.0;
  double pressure = 0.0;
  double fraction = 0.0;  // share of total flow carried by this type

  bool operator==(const PumpTypeState&) const = default;
};

struct PumpConfig {
  std::vector<PumpTypeState> types;

  int active_count() const;
  int total_pumps() const;
  bool operator==(const PumpConfig&) const = default;
};

double pump_total_cost(const PumpInstance& instance, const PumpConfig& config);

// Active type with fixed counts.
struct PumpPatternEntry {
  int type = 0;
  int series = 1;
  int parallel = 1;

  bool operator==(const PumpPatternEntry&) const = default;
};

struct PumpSolveResult {
  PumpConfig config;
  double cost = 0.0;
};

struct PumpSolverOptions {
  int grid_points = 256;
  int golden_iterations = 80;
  int max_sweeps = 200;
  // Largest number of discrete patterns solve_pump will enumerate.
  long long max_patterns = 10'000'000;
};

// Highest pressure one pump of `type` can deliver at or below max speed:
// m5 + m4^2 / (4 m6).
double max_pump_pressure(const PumpType& type);

// Optimal continuous operating point for a fixed discrete pattern. Throws
// kInfeasiblePressure if some type cannot reach total_pressure / series,
// kInfeasibleFlow if speed and power caps make the total flow unreachable,
// kInvalidArgument for an empty or malformed pattern.
PumpSolveResult solve_pump_continuous(
    const PumpInstance& instance, const std::vector<PumpPatternEntry>& pattern,
    const PumpSolverOptions& options = {});

// Global optimum over all discrete patterns, enumerated lexicographically
// per type over (active, series, parallel); equal costs prefer fewer pumps.
// Throws kInfeasible if no pattern is feasible, kScaleLimit if the pattern
// count exceeds options.max_patterns.
PumpSolveResult solve_pump(const PumpInstance& instance,
                           const PumpSolverOptions& options = {});

// Flattened assignment over the make_pump_formulation() variables.
Assignment flatten_pump_config(const PumpInstance& instance,
                               const PumpConfig& config);

// Inverse of flatten_pump_config; counts are rounded to integers.
PumpConfig unflatten_pump_config(const PumpInstance& instance,
                                 const Assignment& point);

// Table with columns Pump, On/Off, Series, Parallel, Power, Speed and Flow
// Fraction; pumps are numbered from 1.
std::string format_pump_table(const PumpConfig& config, double cost);

}  // namespace autoform

#endif  // AUTOFORM_SOLVER_PUMP_H_
