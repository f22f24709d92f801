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


#include "autoform/instancer/fixtures.h"

#include <string>

#include "autoform/common/error.h"
#include "autoform/core/evaluate.h"
#include "autoform/solver/pump.h"
#include "autoform/solver/solve.h"

namespace autoform {
namespace {

Variable continuous(const std::string& name) {
  return {name, Domain::kContinuous, 0.0, std::nullopt};
}

Variable integer(const std::string& name, double upper) {
  return {name, Domain::kInteger, 0.0, upper};
}

Variable binary(const std::string& name) { return {name, Domain::kBinary, 0.0, 1.0}; }

WorldDescriptor solved_world(std::string id, FormulationIR ir, Metadata meta) {
  WorldDescriptor w;
  w.id = std::move(id);
  const Solution s = solve(ir);
  if (!s.optimal()) {
    throw Error(ErrorCode::kInfeasible, "fixture " + w.id + " did not solve: " + s.diagnostics);
  }
  w.solution = s.assignment;
  w.objective_value = evaluate_objective(ir, s.assignment);
  w.formulation = std::move(ir);
  w.metadata = std::move(meta);
  return w;
}

}  // namespace

FormulationIR farming_lp_formulation() {
  FormulationIR ir;
  ir.category = Category::kLp;
  for (const char* name : {"x_corn_acres", "x_soy_acres", "x_wheat_acres", "x_corn_sold",
                           "x_soy_sold", "x_cattle_units"}) {
    ir.variables.push_back(continuous(name));
  }
  ir.objective.sense = Sense::kMax;
  ir.objective.coefficients = {{"x_corn_sold", 4},     {"x_soy_sold", 10},
                               {"x_corn_acres", -300}, {"x_soy_acres", -250},
                               {"x_wheat_acres", 160}, {"x_cattle_units", 1000}};
  ir.constraints = {
      {"land", {{"x_corn_acres", 1}, {"x_soy_acres", 1}, {"x_wheat_acres", 1}},
       Comparator::kLe, 2000},
      {"water",
       {{"x_corn_acres", 3}, {"x_soy_acres", 2}, {"x_wheat_acres", 1.5}, {"x_cattle_units", 10}},
       Comparator::kLe, 5000},
      {"labor",
       {{"x_corn_acres", 2.5}, {"x_soy_acres", 2}, {"x_wheat_acres", 1}, {"x_cattle_units", 15}},
       Comparator::kLe, 4000},
      {"corn_balance", {{"x_corn_sold", 1}, {"x_cattle_units", 50}, {"x_corn_acres", -180}},
       Comparator::kLe, 0},
      {"soy_balance", {{"x_soy_sold", 1}, {"x_cattle_units", 20}, {"x_soy_acres", -50}},
       Comparator::kLe, 0},
      {"wheat_share",
       {{"x_wheat_acres", 0.8}, {"x_corn_acres", -0.2}, {"x_soy_acres", -0.2}},
       Comparator::kGe, 0},
      {"silo", {{"x_corn_sold", 1}, {"x_soy_sold", 1}}, Comparator::kLe, 100000},
  };
  return ir;
}

FormulationIR warehouse_milp_formulation() {
  FormulationIR ir;
  ir.category = Category::kMilp;
  const char* sites[] = {"north", "south", "east"};
  const double capacity[] = {500, 400, 300};
  const double fixed[] = {1000, 800, 600};
  const double widget_ub[] = {100, 80, 60};
  const double gadget_ub[] = {41, 33, 25};
  const double gizmo_ub[] = {62, 50, 37};
  for (const char* s : sites) ir.variables.push_back(binary(std::string("open_") + s));
  for (int k = 0; k < 3; ++k) {
    ir.variables.push_back(integer(std::string("widget_a_") + sites[k], widget_ub[k]));
  }
  for (int k = 0; k < 3; ++k) {
    ir.variables.push_back(integer(std::string("gadget_b_") + sites[k], gadget_ub[k]));
  }
  for (int k = 0; k < 3; ++k) {
    ir.variables.push_back(integer(std::string("gizmo_c_") + sites[k], gizmo_ub[k]));
  }
  ir.objective.sense = Sense::kMax;
  LinearConstraint mix{"product_mix", {}, Comparator::kGe, 0};
  for (int k = 0; k < 3; ++k) {
    const std::string s = sites[k];
    ir.objective.coefficients["widget_a_" + s] = 60;
    ir.objective.coefficients["gadget_b_" + s] = 150;
    ir.objective.coefficients["gizmo_c_" + s] = 110;
    ir.objective.coefficients["open_" + s] = -fixed[k];
    CoefficientMap volume = {{"widget_a_" + s, 5}, {"gadget_b_" + s, 12}, {"gizmo_c_" + s, 8}};
    CoefficientMap upper = volume;
    upper["open_" + s] = -capacity[k];
    CoefficientMap lower = volume;
    lower["open_" + s] = -0.1 * capacity[k];
    ir.constraints.push_back({"capacity_" + s, upper, Comparator::kLe, 0});
    ir.constraints.push_back({"min_use_" + s, lower, Comparator::kGe, 0});
    mix.coefficients["gadget_b_" + s] = 1;
    mix.coefficients["widget_a_" + s] = -0.2;
  }
  ir.constraints.push_back(mix);
  return ir;
}

PumpInstance worked_pump_instance() {
  PumpInstance p;
  p.total_flow = 407.0;
  p.total_pressure = 640.0;
  p.max_speed = 3294.0;
  p.max_series = 2;
  p.max_parallel = 2;
  // m1..m6, fixed cost, power cost, max power.
  p.types = {
      {21.5, 0.17, 0.00058, 0.72, 345.0, 0.0125, 8200.0, 1950.0, 165.0},
      {28.0, 0.24, 0.00065, 0.88, 410.0, 0.0190, 9800.0, 1850.0, 185.0},
      {36.5, 0.31, 0.00082, 1.05, 465.0, 0.0260, 11500.0, 1750.0, 210.0},
      {19.8, 0.15, 0.00049, 0.68, 325.0, 0.0110, 7800.0, 2050.0, 155.0},
      {42.0, 0.36, 0.00095, 1.15, 520.0, 0.0320, 13000.0, 1650.0, 230.0},
      {24.5, 0.21, 0.00062, 0.82, 375.0, 0.0175, 9100.0, 1900.0, 175.0},
  };
  return p;
}

Metadata pump_metadata(const PumpInstance& instance, const std::string& scenario) {
  Metadata m;
  m.scenario = scenario;
  m.objective_label = "total cost";
  m.objective_unit = "$";
  for (int i = 0; i < static_cast<int>(instance.types.size()); ++i) {
    const std::string t(1, static_cast<char>('A' + i));
    m.variables[pump_var_power(i)] = {"power of each type " + t + " pump", "kW"};
    m.variables[pump_var_speed(i)] = {"speed of type " + t + " pumps", "RPM"};
    m.variables[pump_var_pressure(i)] = {"pressure rise of each type " + t + " pump", "units"};
    m.variables[pump_var_flow(i)] = {"flow through each type " + t + " pump", "units"};
    m.variables[pump_var_fraction(i)] = {"share of total flow carried by type " + t, ""};
    m.variables[pump_var_parallel(i)] = {"number of type " + t + " pumps in parallel", "pumps"};
    m.variables[pump_var_series(i)] = {"number of type " + t + " pumps in series", "pumps"};
    m.variables[pump_var_active(i)] = {"whether type " + t + " is installed", ""};
  }
  m.notes = {"z variables are binary activation switches",
             "num_p and num_s are integer pump counts", "x variables are flow fractions"};
  return m;
}

const WorldDescriptor& farming_lp_world() {
  static const WorldDescriptor w = [] {
    Metadata m;
    m.scenario = "agriculture";
    m.objective_label = "total profit";
    m.objective_unit = "$";
    m.variables = {
        {"x_corn_acres", {"acres of corn", "acres"}},
        {"x_soy_acres", {"acres of soybeans", "acres"}},
        {"x_wheat_acres", {"acres of wheat", "acres"}},
        {"x_corn_sold", {"bushels of corn sold", "bushels"}},
        {"x_soy_sold", {"bushels of soybeans sold", "bushels"}},
        {"x_cattle_units", {"cattle units", "units"}},
    };
    m.constraints = {
        {"land", {"arable land", "acres"}},
        {"water", {"water supply", "units"}},
        {"labor", {"labor hours", "hours"}},
        {"corn_balance", {"corn harvest balance", "bushels"}},
        {"soy_balance", {"soybean harvest balance", "bushels"}},
        {"wheat_share", {"wheat diversity share", "acres"}},
        {"silo", {"silo and transport capacity", "bushels"}},
    };
    return solved_world("fixture-farming-lp", farming_lp_formulation(), std::move(m));
  }();
  return w;
}

const WorldDescriptor& warehouse_milp_world() {
  static const WorldDescriptor w = [] {
    Metadata m;
    m.scenario = "logistics";
    m.objective_label = "net profit";
    m.objective_unit = "$";
    const char* sites[] = {"north", "south", "east"};
    const char* site_names[] = {"North", "South", "East"};
    for (int k = 0; k < 3; ++k) {
      const std::string s = sites[k];
      const std::string n = site_names[k];
      m.variables["open_" + s] = {"opening of the " + n + " warehouse", ""};
      m.variables["widget_a_" + s] = {"Widget_A units stored at " + n, "units"};
      m.variables["gadget_b_" + s] = {"Gadget_B units stored at " + n, "units"};
      m.variables["gizmo_c_" + s] = {"Gizmo_C units stored at " + n, "units"};
      m.constraints["capacity_" + s] = {n + " storage capacity", "m3"};
      m.constraints["min_use_" + s] = {n + " minimum utilization", "m3"};
    }
    m.constraints["product_mix"] = {"product mix requirement", "units"};
    m.notes = {"open variables are binary", "stored quantities are integers"};
    return solved_world("fixture-warehouse-milp", warehouse_milp_formulation(), std::move(m));
  }();
  return w;
}

const WorldDescriptor& worked_pump_world() {
  static const WorldDescriptor w = [] {
    const PumpInstance p = worked_pump_instance();
    WorldDescriptor out = solved_world("fixture-pump-network", make_pump_formulation(p),
                                       pump_metadata(p, "water utility"));
    out.difficulty = "hard";
    return out;
  }();
  return w;
}

std::vector<WorldDescriptor> worked_examples() {
  return {farming_lp_world(), warehouse_milp_world(), worked_pump_world()};
}

}  // namespace autoform
