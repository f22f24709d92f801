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


#include "autoform/solver/milp.h"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "autoform/common/error.h"

namespace autoform {
namespace {

struct Node {
  std::vector<double> lower;
  std::vector<std::optional<double>> upper;
  Solution relaxation;
};

// Minimization view of an objective value.
double key(const FormulationIR& ir, double value) {
  return ir.objective.sense == Sense::kMax ? -value : value;
}

}  // namespace

Solution solve_milp(const FormulationIR& ir, const MilpOptions& options) {
  if (ir.category != Category::kMilp) {
    throw Error(ErrorCode::kCategoryMismatch,
                "solve_milp needs a MILP, got " + std::string(to_string(ir.category)));
  }
  validate_formulation(ir);
  const std::size_t n = ir.variables.size();

  Node root;
  for (const auto& v : ir.variables) {
    double lo = v.lower;
    std::optional<double> hi = v.upper;
    if (v.is_integral()) {
      lo = std::ceil(lo - options.integrality_tolerance);
      if (hi) hi = std::floor(*hi + options.integrality_tolerance);
    }
    if (v.domain == Domain::kBinary) hi = hi ? std::min(*hi, 1.0) : 1.0;
    root.lower.push_back(lo);
    root.upper.push_back(hi);
  }

  long long nodes = 0;
  Solution result;
  result.status = SolveStatus::kInfeasible;
  result.diagnostics = "no integer-feasible point";
  std::optional<double> incumbent;

  auto relax = [&](Node& node) {
    ++nodes;
    node.relaxation = solve_relaxation(ir, node.lower, node.upper, options.lp);
  };
  relax(root);
  if (root.relaxation.status == SolveStatus::kUnbounded) {
    result.status = SolveStatus::kUnbounded;
    result.diagnostics = "relaxation unbounded";
    return result;
  }
  if (root.relaxation.status == SolveStatus::kIterationLimit) return root.relaxation;

  auto prunable = [&](const Node& node) {
    if (node.relaxation.status != SolveStatus::kOptimal) return true;
    if (!incumbent) return false;
    const double bound = key(ir, node.relaxation.objective);
    return bound >= *incumbent - 1e-9 * (1.0 + std::abs(*incumbent));
  };

  std::vector<Node> stack;
  stack.push_back(std::move(root));
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (prunable(node)) continue;

    int branch = -1;
    double best_frac = options.integrality_tolerance;
    for (std::size_t j = 0; j < n; ++j) {
      if (!ir.variables[j].is_integral()) continue;
      const double x = node.relaxation.assignment.at(ir.variables[j].name);
      const double frac = std::abs(x - std::round(x));
      if (frac > best_frac + 1e-12) {
        best_frac = frac;
        branch = static_cast<int>(j);
      }
    }
    if (branch < 0) {
      Solution s = node.relaxation;
      for (const auto& v : ir.variables) {
        if (v.is_integral()) s.assignment[v.name] = std::round(s.assignment[v.name]);
      }
      s.objective = ir.objective.constant;
      for (const auto& [name, coef] : ir.objective.coefficients) {
        s.objective += coef * s.assignment.at(name);
      }
      incumbent = key(ir, s.objective);
      result = std::move(s);
      result.diagnostics.clear();
      continue;
    }
    if (nodes + 2 > options.max_nodes) {
      result.status = SolveStatus::kIterationLimit;
      result.diagnostics = "node limit of " + std::to_string(options.max_nodes) + " reached";
      return result;
    }
    const auto b = static_cast<std::size_t>(branch);
    const double x = node.relaxation.assignment.at(ir.variables[b].name);
    Node down{node.lower, node.upper, {}};
    down.upper[b] = std::floor(x);
    Node up{node.lower, node.upper, {}};
    up.lower[b] = std::ceil(x);
    relax(down);
    relax(up);
    for (Node* child : {&down, &up}) {
      if (child->relaxation.status == SolveStatus::kIterationLimit) return child->relaxation;
    }
    const bool down_ok = down.relaxation.status == SolveStatus::kOptimal;
    const bool up_ok = up.relaxation.status == SolveStatus::kOptimal;
    bool down_first = true;
    if (down_ok && up_ok) {
      down_first = key(ir, down.relaxation.objective) <= key(ir, up.relaxation.objective);
    } else if (!down_ok) {
      down_first = false;
    }
    // The stack pops the last push first.
    if (down_first) {
      stack.push_back(std::move(up));
      stack.push_back(std::move(down));
    } else {
      stack.push_back(std::move(down));
      stack.push_back(std::move(up));
    }
  }
  return result;
}

}  // namespace autoform
