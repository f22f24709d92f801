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

#include "autoform/common/error.h"
#include "autoform/common/rng.h"
#include "autoform/core/evaluate.h"
#include "autoform/core/serialize.h"
#include "autoform/instancer/fixtures.h"
#include "doctest.h"
#include "oracles/reference_values.h"

using namespace autoform;

namespace {

FormulationIR two_var_lp() {
  FormulationIR ir;
  ir.category = Category::kLp;
  ir.variables = {{"x", Domain::kContinuous, 0, std::nullopt},
                  {"y", Domain::kContinuous, 0, 10.0}};
  ir.constraints = {{"cap", {{"x", 1}}, Comparator::kLe, 1},
                    {"floor", {{"x", 1}}, Comparator::kGe, 2},
                    {"sum", {{"x", 1}, {"y", 1}}, Comparator::kEq, 3}};
  ir.objective = {Sense::kMax, {{"x", 2}, {"y", 3}}, 0};
  return ir;
}

WorldDescriptor four_var_world(const std::vector<double>& x) {
  WorldDescriptor w;
  w.id = "w";
  w.formulation.category = Category::kLp;
  CoefficientMap sum;
  for (int j = 0; j < 4; ++j) {
    const std::string name = "v" + std::to_string(j);
    w.formulation.variables.push_back({name, Domain::kContinuous, 0, 10.0});
    w.formulation.objective.coefficients[name] = 1;
    sum[name] = 1;
    w.solution[name] = x[static_cast<std::size_t>(j)];
  }
  w.formulation.constraints = {{"total", sum, Comparator::kLe, 40}};
  w.formulation.objective.sense = Sense::kMax;
  w.objective_value = x[0] + x[1] + x[2] + x[3];
  return w;
}

}  // namespace

TEST_CASE("evaluate_objective") {
  FormulationIR ir = two_var_lp();
  CHECK(evaluate_objective(ir, {{"x", 1}, {"y", 1}}) == 5);
  ir.objective.coefficients.clear();
  ir.objective.constant = 7;
  CHECK(evaluate_objective(ir, {{"x", 1}, {"y", 1}}) == 7);
  try {
    evaluate_objective(two_var_lp(), {{"x", 1}});
    FAIL("expected missing-variable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMissingVariable);
    CHECK(std::string(e.what()).find("'y'") != std::string::npos);
  }
  const WorldDescriptor& farm = farming_lp_world();
  CHECK(evaluate_objective(farm.formulation, farm.solution) ==
        doctest::Approx(oracle::kFarmingObjective).epsilon(1e-6));
}

TEST_CASE("constraint_residuals") {
  const FormulationIR ir = two_var_lp();
  const auto r = constraint_residuals(ir, {{"x", 1}, {"y", 1}});
  REQUIRE(r.size() == 3);
  CHECK(r[0] == 0);
  CHECK(r[1] == 1);
  CHECK(r[2] == 1);
  CHECK_THROWS_AS(constraint_residuals(ir, {{"x", 1}}), Error);
  CHECK(max_violation(ir, {{"x", 1}, {"y", 11}}) == 9);
}

TEST_CASE("constraint residuals are permutation-equivariant") {
  Rng rng(5);
  FormulationIR ir = farming_lp_formulation();
  for (int trial = 0; trial < 20; ++trial) {
    Assignment pt;
    for (const auto& v : ir.variables) pt[v.name] = rng.uniform(0, 3000);
    const auto before = constraint_residuals(ir, pt);
    std::vector<std::size_t> order(ir.constraints.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    FormulationIR shuffled = ir;
    for (std::size_t i = 0; i < order.size(); ++i) shuffled.constraints[i] = ir.constraints[order[i]];
    const auto after = constraint_residuals(shuffled, pt);
    for (std::size_t i = 0; i < order.size(); ++i) CHECK(after[i] == before[order[i]]);
  }
}

TEST_CASE("validate_descriptor") {
  SUBCASE("three of four variables at the lower bound") {
    const ValidationReport r = validate_descriptor(four_var_world({0, 0, 0, 5}));
    CHECK(r.feasible);
    CHECK(r.trivial_fraction == 0.75);
    CHECK_FALSE(r.complexity_pass);
  }
  SUBCASE("one of four at the lower bound") {
    const ValidationReport r = validate_descriptor(four_var_world({0, 1, 2, 5}));
    CHECK(r.trivial_fraction == 0.25);
    CHECK(r.complexity_pass);
  }
  SUBCASE("all strictly above") {
    CHECK(validate_descriptor(four_var_world({1, 1, 2, 5})).ok());
  }
  SUBCASE("objective disagreement") {
    WorldDescriptor w = four_var_world({1, 1, 2, 5});
    w.objective_value += 0.1;
    CHECK_FALSE(validate_descriptor(w).feasible);
  }
  SUBCASE("infeasible ground truth") {
    WorldDescriptor w = four_var_world({10, 10, 10, 11});
    CHECK_FALSE(validate_descriptor(w).feasible);
  }
  SUBCASE("missing assignment and no constraints") {
    WorldDescriptor w = four_var_world({1, 1, 2, 5});
    w.solution.erase("v0");
    CHECK_FALSE(validate_descriptor(w).feasible);
    w = four_var_world({1, 1, 2, 5});
    w.formulation.constraints.clear();
    CHECK_FALSE(validate_descriptor(w).feasible);
  }
  SUBCASE("pump fixture: two of six types inactive") {
    const ValidationReport r = validate_descriptor(worked_pump_world());
    CHECK(r.feasible);
    CHECK(r.trivial_fraction == doctest::Approx(2.0 / 6.0));
    CHECK_FALSE(r.complexity_pass);
  }
}

TEST_CASE("validate_formulation rejects structural errors") {
  FormulationIR ir = two_var_lp();
  ir.objective.coefficients["z"] = 1;
  CHECK_THROWS_AS(validate_formulation(ir), Error);
  ir = two_var_lp();
  ir.variables.push_back(ir.variables[0]);
  CHECK_THROWS_AS(validate_formulation(ir), Error);
  ir = two_var_lp();
  ir.variables[1].upper = -1.0;
  CHECK_THROWS_AS(validate_formulation(ir), Error);
  ir = two_var_lp();
  ir.category = Category::kMilp;
  CHECK_THROWS_AS(validate_formulation(ir), Error);
  ir = two_var_lp();
  ir.variables[0].domain = Domain::kInteger;
  CHECK_THROWS_AS(validate_formulation(ir), Error);
  FormulationIR pump = make_pump_formulation(worked_pump_instance());
  validate_formulation(pump);
  pump.variables.pop_back();
  CHECK_THROWS_AS(validate_formulation(pump), Error);
}

TEST_CASE("canonicalize") {
  FormulationIR ir = two_var_lp();
  std::swap(ir.variables[0], ir.variables[1]);
  const FormulationIR c = canonicalize(ir);
  CHECK(c.variables[0].name == "x");
  CHECK(c.variables[1].name == "y");
  CHECK(canonicalize(c) == c);
  FormulationIR reordered = two_var_lp();
  std::reverse(reordered.constraints.begin(), reordered.constraints.end());
  CHECK(canonicalize(reordered) == canonicalize(two_var_lp()));
  FormulationIR dup = two_var_lp();
  dup.variables.push_back(dup.variables[0]);
  try {
    canonicalize(dup);
    FAIL("expected invalid formulation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidFormulation);
  }
}

TEST_CASE("canonicalize preserves the residual multiset") {
  Rng rng(11);
  for (const FormulationIR& ir : {farming_lp_formulation(), warehouse_milp_formulation()}) {
    const FormulationIR c = canonicalize(ir);
    for (int k = 0; k < 200; ++k) {
      Assignment pt;
      for (const auto& v : ir.variables) pt[v.name] = rng.uniform(-10, 600);
      auto a = constraint_residuals(ir, pt);
      auto b = constraint_residuals(c, pt);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-9);
    }
  }
}

TEST_CASE("JSON round trips") {
  for (const WorldDescriptor& w : worked_examples()) {
    const Json j = to_json(w);
    CHECK(j.contains("id"));
    CHECK(j.contains("formulation"));
    CHECK(j.contains("solution"));
    CHECK(j.contains("objective_value"));
    CHECK(j.contains("metadata"));
    CHECK(j.contains("difficulty"));
    for (const char* key : {"variables", "constraints", "objective", "category", "pump"}) {
      CHECK(j["formulation"].contains(key));
    }
    const WorldDescriptor back = world_from_json(Json::parse(dump_line(j)));
    CHECK(back == w);
    CHECK(dump_line(to_json(back)) == dump_line(j));
  }
  const Json lp = to_json(farming_lp_formulation());
  CHECK(lp["variables"][0]["upper"].is_null());
  CHECK(lp["category"] == "LP");
  Solution s;
  s.status = SolveStatus::kIterationLimit;
  s.assignment = {{"x", 1.5}};
  CHECK(solution_from_json(to_json(s)) == s);
}

TEST_CASE("JSON decoding errors name the field") {
  Json j = to_json(farming_lp_formulation());
  j["variables"][2].erase("lower");
  try {
    formulation_from_json(j);
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("variables[2]") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_solve_status("done"), Error);
  CHECK_THROWS_AS(parse_category("QP"), Error);
}
