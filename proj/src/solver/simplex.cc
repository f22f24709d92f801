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


#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "autoform/common/error.h"
#include "autoform/solver/lp.h"

namespace autoform {
namespace {

constexpr double kEps = 1e-9;

class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols), a_((rows + 1) * (cols + 1), 0.0) {}

  double& at(int r, int c) { return a_[static_cast<std::size_t>(r * (cols_ + 1) + c)]; }
  double& rhs(int r) { return at(r, cols_); }
  // Row `rows_` holds the reduced costs; its rhs is minus the objective.
  double& cost(int c) { return at(rows_, c); }

  void pivot(int r, int c) {
    const double p = at(r, c);
    for (int j = 0; j <= cols_; ++j) at(r, j) /= p;
    for (int i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_;
  int cols_;
  std::vector<double> a_;
};

enum class Outcome { kOptimal, kUnbounded, kLimit };

// Minimizes with Bland's rule over columns where allowed[c] is set.
Outcome run_simplex(Tableau& t, std::vector<int>& basis, const std::vector<char>& allowed,
                    long long& budget) {
  while (true) {
    int enter = -1;
    for (int c = 0; c < t.cols(); ++c) {
      if (allowed[static_cast<std::size_t>(c)] && t.cost(c) < -kEps) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return Outcome::kOptimal;
    int leave = -1;
    double best = 0.0;
    for (int r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, enter);
      if (a <= kEps) continue;
      const double ratio = t.rhs(r) / a;
      if (leave < 0 || ratio < best - kEps ||
          (ratio <= best + kEps && basis[static_cast<std::size_t>(r)] <
                                       basis[static_cast<std::size_t>(leave)])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) return Outcome::kUnbounded;
    if (budget-- <= 0) return Outcome::kLimit;
    t.pivot(leave, enter);
    basis[static_cast<std::size_t>(leave)] = enter;
  }
}

struct Row {
  std::vector<double> coef;
  Comparator cmp;
  double rhs;
};

void load_costs(Tableau& t, const std::vector<int>& basis, const std::vector<double>& c) {
  for (int j = 0; j <= t.cols(); ++j) t.cost(j) = j < t.cols() ? c[static_cast<std::size_t>(j)] : 0.0;
  for (int r = 0; r < t.rows(); ++r) {
    const double cb = c[static_cast<std::size_t>(basis[static_cast<std::size_t>(r)])];
    if (cb == 0.0) continue;
    for (int j = 0; j <= t.cols(); ++j) t.cost(j) -= cb * t.at(r, j);
  }
}

}  // namespace

Solution solve_relaxation(const FormulationIR& ir, const std::vector<double>& lower,
                          const std::vector<std::optional<double>>& upper,
                          const LpOptions& options) {
  const int n = static_cast<int>(ir.variables.size());
  if (lower.size() != ir.variables.size() || upper.size() != ir.variables.size()) {
    throw Error(ErrorCode::kInvalidArgument, "bound vectors do not match the variable count");
  }
  std::map<std::string, int> index;
  for (int j = 0; j < n; ++j) index[ir.variables[static_cast<std::size_t>(j)].name] = j;

  Solution sol;
  // Shift x = lower + y so every structural column is y >= 0.
  std::vector<Row> rows;
  for (const auto& c : ir.constraints) {
    Row row{std::vector<double>(static_cast<std::size_t>(n), 0.0), c.comparator, c.rhs};
    for (const auto& [name, coef] : c.coefficients) {
      const int j = index.at(name);
      row.coef[static_cast<std::size_t>(j)] += coef;
      row.rhs -= coef * lower[static_cast<std::size_t>(j)];
    }
    rows.push_back(std::move(row));
  }
  for (int j = 0; j < n; ++j) {
    const auto& u = upper[static_cast<std::size_t>(j)];
    if (!u) continue;
    const double width = *u - lower[static_cast<std::size_t>(j)];
    if (width < -kEps) {
      sol.status = SolveStatus::kInfeasible;
      sol.diagnostics = "empty bound interval on " + ir.variables[static_cast<std::size_t>(j)].name;
      return sol;
    }
    Row row{std::vector<double>(static_cast<std::size_t>(n), 0.0), Comparator::kLe,
            std::max(0.0, width)};
    row.coef[static_cast<std::size_t>(j)] = 1.0;
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    if (row.rhs < 0.0) {
      for (double& v : row.coef) v = -v;
      row.rhs = -row.rhs;
      if (row.cmp == Comparator::kLe) {
        row.cmp = Comparator::kGe;
      } else if (row.cmp == Comparator::kGe) {
        row.cmp = Comparator::kLe;
      }
    }
  }

  const int m = static_cast<int>(rows.size());
  int slack_count = 0;
  int art_count = 0;
  for (const auto& row : rows) {
    if (row.cmp != Comparator::kEq) ++slack_count;
    if (row.cmp != Comparator::kLe) ++art_count;
  }
  const int art_start = n + slack_count;
  const int cols = art_start + art_count;
  Tableau t(m, cols);
  std::vector<int> basis(static_cast<std::size_t>(m));
  int next_slack = n;
  int next_art = art_start;
  for (int r = 0; r < m; ++r) {
    const Row& row = rows[static_cast<std::size_t>(r)];
    for (int j = 0; j < n; ++j) t.at(r, j) = row.coef[static_cast<std::size_t>(j)];
    t.rhs(r) = row.rhs;
    if (row.cmp == Comparator::kLe) {
      t.at(r, next_slack) = 1.0;
      basis[static_cast<std::size_t>(r)] = next_slack++;
    } else {
      if (row.cmp == Comparator::kGe) t.at(r, next_slack++) = -1.0;
      t.at(r, next_art) = 1.0;
      basis[static_cast<std::size_t>(r)] = next_art++;
    }
  }

  long long budget = options.max_iterations > 0 ? options.max_iterations
                                                : 1000LL * (m + cols);
  auto limit = [&](const char* phase) {
    sol.status = SolveStatus::kIterationLimit;
    sol.diagnostics = std::string("pivot limit reached in ") + phase;
    return sol;
  };

  std::vector<char> allowed(static_cast<std::size_t>(cols), 1);
  if (art_count > 0) {
    std::vector<double> phase1(static_cast<std::size_t>(cols), 0.0);
    for (int c = art_start; c < cols; ++c) phase1[static_cast<std::size_t>(c)] = 1.0;
    load_costs(t, basis, phase1);
    if (run_simplex(t, basis, allowed, budget) == Outcome::kLimit) return limit("phase 1");
    double scale = 1.0;
    for (const auto& row : rows) scale = std::max(scale, std::abs(row.rhs));
    if (-t.cost(cols) > 1e-7 * scale) {
      sol.status = SolveStatus::kInfeasible;
      sol.diagnostics = "phase 1 ended with positive infeasibility";
      return sol;
    }
    for (int r = 0; r < m; ++r) {
      if (basis[static_cast<std::size_t>(r)] < art_start) continue;
      for (int c = 0; c < art_start; ++c) {
        if (std::abs(t.at(r, c)) > kEps) {
          t.pivot(r, c);
          basis[static_cast<std::size_t>(r)] = c;
          break;
        }
      }
    }
    for (int c = art_start; c < cols; ++c) allowed[static_cast<std::size_t>(c)] = 0;
  }

  std::vector<double> phase2(static_cast<std::size_t>(cols), 0.0);
  const double sign = ir.objective.sense == Sense::kMax ? -1.0 : 1.0;
  for (const auto& [name, coef] : ir.objective.coefficients) {
    phase2[static_cast<std::size_t>(index.at(name))] += sign * coef;
  }
  load_costs(t, basis, phase2);
  switch (run_simplex(t, basis, allowed, budget)) {
    case Outcome::kLimit: return limit("phase 2");
    case Outcome::kUnbounded:
      sol.status = SolveStatus::kUnbounded;
      sol.diagnostics = "objective unbounded";
      return sol;
    case Outcome::kOptimal: break;
  }

  std::vector<double> y(static_cast<std::size_t>(n), 0.0);
  for (int r = 0; r < m; ++r) {
    const int b = basis[static_cast<std::size_t>(r)];
    if (b < n) y[static_cast<std::size_t>(b)] = std::max(0.0, t.rhs(r));
  }
  for (int j = 0; j < n; ++j) {
    double x = lower[static_cast<std::size_t>(j)] + y[static_cast<std::size_t>(j)];
    const auto& u = upper[static_cast<std::size_t>(j)];
    if (u) x = std::min(x, *u);
    if (std::abs(x) < 1e-12) x = 0.0;
    sol.assignment[ir.variables[static_cast<std::size_t>(j)].name] = x;
  }
  double value = ir.objective.constant;
  for (const auto& [name, coef] : ir.objective.coefficients) {
    value += coef * sol.assignment.at(name);
  }
  sol.status = SolveStatus::kOptimal;
  sol.objective = value;
  return sol;
}

Solution solve_lp(const FormulationIR& ir, const LpOptions& options) {
  if (ir.category != Category::kLp) {
    throw Error(ErrorCode::kCategoryMismatch,
                "solve_lp needs an LP, got " + std::string(to_string(ir.category)));
  }
  validate_formulation(ir);
  std::vector<double> lower;
  std::vector<std::optional<double>> upper;
  for (const auto& v : ir.variables) {
    lower.push_back(v.lower);
    upper.push_back(v.upper);
  }
  return solve_relaxation(ir, lower, upper, options);
}

}  // namespace autoform
