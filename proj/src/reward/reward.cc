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

#include "autoform/reward/reward.h"

#include <cmath>
#include <string>

#include "autoform/common/error.h"
#include "autoform/common/numeric_text.h"
#include "autoform/core/evaluate.h"
#include "autoform/solver/solve.h"

namespace autoform {
namespace {

bool same_rounded(double a, double b, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::llround(a * scale) == std::llround(b * scale);
}

bool relative_match(double value, double truth, double tol) {
  if (!std::isfinite(value)) return false;
  return std::abs(value - truth) <= tol * std::abs(truth);
}

std::optional<double> lookup(const Assignment& a, const std::string& name) {
  auto it = a.find(name);
  if (it == a.end() || !std::isfinite(it->second)) return std::nullopt;
  return it->second;
}

bool same_pump_pattern(const Assignment& point, const WorldDescriptor& w) {
  const int n = static_cast<int>(w.formulation.pump->types.size());
  for (int i = 0; i < n; ++i) {
    const auto z = lookup(point, pump_var_active(i));
    const auto truth = lookup(w.solution, pump_var_active(i));
    if (!z || !truth || std::lround(*z) != std::lround(*truth)) return false;
  }
  return true;
}

// Feasibility of `point` against the ground-truth formulation.
bool feasible_under(const WorldDescriptor& w, const Assignment& point, double tol,
                    std::string& why) {
  for (const auto& v : w.formulation.variables) {
    if (!lookup(point, v.name)) {
      why = "no finite value for '" + v.name + "'";
      return false;
    }
  }
  const double violation = max_violation(w.formulation, point);
  if (violation > tol) {
    why = "violates the ground-truth constraints by " + format_number(violation);
    return false;
  }
  why = "feasible";
  return true;
}

}  // namespace

bool check_optimality(const Solution& solution, const WorldDescriptor& w, Category category,
                      const RewardConfig& config) {
  if (!solution.optimal() || !std::isfinite(solution.objective)) return false;
  switch (category) {
    case Category::kLp: {
      if (!same_rounded(solution.objective, w.objective_value, config.lp_decimals)) return false;
      for (const auto& [name, truth] : w.solution) {
        const auto x = lookup(solution.assignment, name);
        if (!x || !same_rounded(*x, truth, config.lp_decimals)) return false;
      }
      return true;
    }
    case Category::kMilp:
      return same_rounded(solution.objective, w.objective_value, config.milp_decimals);
    case Category::kPump:
      if (!w.formulation.pump) return false;
      return relative_match(solution.objective, w.objective_value, config.pump_cost_rel_tol) &&
             same_pump_pattern(solution.assignment, w);
  }
  return false;
}

bool pump_power_match(const Assignment& point, const WorldDescriptor& w,
                      const RewardConfig& config) {
  if (!w.formulation.pump || !same_pump_pattern(point, w)) return false;
  const int n = static_cast<int>(w.formulation.pump->types.size());
  for (int i = 0; i < n; ++i) {
    if (std::lround(w.solution.at(pump_var_active(i))) == 0) continue;
    const auto p = lookup(point, pump_var_power(i));
    if (!p || !relative_match(*p, w.solution.at(pump_var_power(i)), config.pump_power_rel_tol)) {
      return false;
    }
  }
  return true;
}

RewardBreakdown evaluate_candidate(const Candidate& candidate, const WorldDescriptor& w,
                                   const RewardConfig& config) {
  RewardBreakdown b;
  const Category category = w.formulation.category;
  Solution solution;

  if (candidate.kind == CandidateKind::kFormulation) {
    if (!candidate.formulation) {
      b.diagnostics["exec"] = "formulation does not parse: " + candidate.parse_error;
      return b;
    }
    const FormulationIR& ir = *candidate.formulation;
    if (ir.category != category) {
      b.diagnostics["exec"] = "category " + std::string(to_string(ir.category)) +
                              " does not match " + std::string(to_string(category));
      return b;
    }
    try {
      solution = solve(ir);
    } catch (const Error& e) {
      b.diagnostics["exec"] = std::string(error_code_name(e.code())) + ": " + e.what();
      return b;
    }
    b.r_exec = config.alpha_exec;
    b.diagnostics["exec"] = "solver status " + std::string(to_string(solution.status));
    if (solution.optimal()) b.objective = solution.objective;
    if (!solution.optimal()) {
      b.diagnostics["feas"] = "no solution to check";
      b.total = b.r_exec;
      return b;
    }
  } else {
    for (const auto& v : w.formulation.variables) {
      if (!candidate.assignment.contains(v.name)) {
        b.diagnostics["exec"] = "assignment does not cover '" + v.name + "'";
        return b;
      }
    }
    b.r_exec = config.alpha_exec;
    b.diagnostics["exec"] = "assignment covers all variables";
    solution.status = SolveStatus::kOptimal;
    solution.assignment = candidate.assignment;
    try {
      b.objective = evaluate_objective(w.formulation, solution.assignment);
    } catch (const std::exception&) {
    }
    if (b.objective && !std::isfinite(*b.objective)) b.objective.reset();
  }

  std::string why;
  bool feasible = false;
  try {
    feasible = feasible_under(w, solution.assignment, config.feasibility_tolerance, why);
  } catch (const std::exception& e) {
    why = e.what();
  }
  b.diagnostics["feas"] = why;
  if (!feasible) {
    b.total = b.r_exec;
    return b;
  }
  b.r_feas = config.alpha_feas;

  if (candidate.kind == CandidateKind::kBundle) {
    solution.objective = b.objective.value_or(NAN);
    if (candidate.claimed_objective &&
        !same_rounded(*candidate.claimed_objective, solution.objective, 2)) {
      b.diagnostics["opt"] = "claimed objective " + format_number(*candidate.claimed_objective) +
                             " differs from evaluated " + format_number(solution.objective);
      b.total = b.r_exec + b.r_feas;
      return b;
    }
  }
  if (check_optimality(solution, w, category, config)) {
    b.r_opt = config.alpha_opt;
    b.diagnostics["opt"] = "matches ground truth";
  } else {
    b.diagnostics["opt"] = "objective " + format_number(solution.objective) +
                           " versus ground truth " + format_number(w.objective_value);
  }
  if (category == Category::kPump) {
    b.power_bonus = pump_power_match(solution.assignment, w, config);
  }
  b.total = b.r_exec + b.r_feas + b.r_opt;
  return b;
}

std::optional<std::string> extract_tagged_query(std::string_view text,
                                                const RewardConfig& config) {
  const auto open = text.find(config.query_open_tag);
  if (open == std::string_view::npos) return std::nullopt;
  const auto start = open + config.query_open_tag.size();
  const auto close = text.find(config.query_close_tag, start);
  if (close == std::string_view::npos) return std::nullopt;
  std::string_view inner = text.substr(start, close - start);
  const auto first = inner.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return std::nullopt;
  const auto last = inner.find_last_not_of(" \t\r\n");
  return std::string(inner.substr(first, last - first + 1));
}

std::pair<double, double> multi_turn_reward(const Trajectory& t, const WorldDescriptor& w,
                                            const OmissionLedger& ledger,
                                            const RewardConfig& config) {
  if (!t.candidate) {
    throw Error(ErrorCode::kMalformedTrajectory, "trajectory has no committed candidate");
  }
  double r_i = 0.0;
  if (t.query) {
    if (auto inner = extract_tagged_query(*t.query, config)) {
      for (const auto& o : ledger.omissions) {
        if (query_names_element(*inner, w, o.element)) {
          r_i = config.query_reward;
          break;
        }
      }
    }
  }
  return {r_i, evaluate_candidate(*t.candidate, w, config).total};
}

Json to_json(const RewardBreakdown& b) {
  return {{"r_exec", b.r_exec}, {"r_feas", b.r_feas},           {"r_opt", b.r_opt},
          {"total", b.total},   {"power_bonus", b.power_bonus}, {"diagnostics", b.diagnostics},
          {"objective", b.objective ? Json(*b.objective) : Json(nullptr)}};
}

RewardBreakdown reward_breakdown_from_json(const Json& j) {
  try {
    RewardBreakdown b;
    b.r_exec = j.at("r_exec").get<double>();
    b.r_feas = j.at("r_feas").get<double>();
    b.r_opt = j.at("r_opt").get<double>();
    b.total = j.at("total").get<double>();
    b.power_bonus = j.value("power_bonus", false);
    if (j.contains("objective") && !j["objective"].is_null()) {
      b.objective = j["objective"].get<double>();
    }
    if (j.contains("diagnostics")) {
      b.diagnostics = j["diagnostics"].get<std::map<std::string, std::string>>();
    }
    return b;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("reward breakdown: ") + e.what());
  }
}

}  // namespace autoform
