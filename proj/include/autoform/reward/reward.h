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

// Composite verifiable reward: execution, feasibility and optimality
// components, gated in that order, plus the two-turn reward pair.

#ifndef AUTOFORM_REWARD_REWARD_H_
#define AUTOFORM_REWARD_REWARD_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "autoform/backtranslate/description.h"
#include "autoform/core/world.h"
#include "autoform/multiturn/trajectory.h"
#include "autoform/reward/candidate.h"

namespace autoform {

struct RewardConfig {
  double alpha_exec = 0.1;
  double alpha_feas = 0.1;
  double alpha_opt = 1.0;
  double feasibility_tolerance = 1e-6;
  int lp_decimals = 2;
  int milp_decimals = 2;
  double pump_cost_rel_tol = 0.02;
  double pump_power_rel_tol = 0.05;
  double query_reward = 0.2;
  std::string query_open_tag = "<query>";
  std::string query_close_tag = "</query>";

  bool operator==(const RewardConfig&) const = default;
};

struct RewardBreakdown {
  double r_exec = 0.0;
  double r_feas = 0.0;
  double r_opt = 0.0;
  double total = 0.0;
  bool power_bonus = false;  // pump only
  // Objective reported by the executed candidate (solver output for a
  // formulation, evaluated value for a bundle); unset when nothing ran.
  std::optional<double> objective;
  // Keys "exec", "feas", "opt"; one line per stage that ran.
  std::map<std::string, std::string> diagnostics;

  bool operator==(const RewardBreakdown&) const = default;
};

// Never throws for a bad candidate; failures show up as zero components.
RewardBreakdown evaluate_candidate(const Candidate& candidate, const WorldDescriptor& w,
                                   const RewardConfig& config = {});

// Category match rule against w's ground truth. False unless the status is
// optimal.
//   LP    objective and every variable equal after rounding
//   MILP  objective equal after rounding
//   pump  cost within the relative tolerance and identical on/off pattern
bool check_optimality(const Solution& solution, const WorldDescriptor& w, Category category,
                      const RewardConfig& config = {});

// Pump only: every active type's per-pump power within pump_power_rel_tol of
// the ground truth, with the same on/off pattern.
bool pump_power_match(const Assignment& point, const WorldDescriptor& w,
                      const RewardConfig& config = {});

// Text between the first open tag and the following close tag, trimmed;
// nullopt when the pair is missing or encloses only whitespace.
std::optional<std::string> extract_tagged_query(std::string_view text,
                                                const RewardConfig& config = {});

// (R_I, R_O). R_I is earned when the query is tagged and names at least one
// ledgered element. Throws kMalformedTrajectory when no candidate was
// committed.
std::pair<double, double> multi_turn_reward(const Trajectory& t, const WorldDescriptor& w,
                                            const OmissionLedger& ledger,
                                            const RewardConfig& config = {});

Json to_json(const RewardBreakdown& b);
RewardBreakdown reward_breakdown_from_json(const Json& j);

}  // namespace autoform

#endif  // AUTOFORM_REWARD_REWARD_H_
