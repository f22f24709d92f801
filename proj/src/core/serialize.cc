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

#include "autoform/core/serialize.h"

#include <string>

#include "autoform/common/error.h"

namespace autoform {
namespace {

[[noreturn]] void parse_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParse, path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) parse_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(path, std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) parse_error(path, "expected a number");
  return j.get<double>();
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) parse_error(path, "expected a string");
  return j.get<std::string>();
}

int integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) parse_error(path, "expected an integer");
  return j.get<int>();
}

CoefficientMap coefficients_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) parse_error(path, "expected an object of coefficients");
  CoefficientMap out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out[it.key()] = number(it.value(), path + "." + it.key());
  }
  return out;
}

Json element_map_to_json(const std::map<std::string, ElementInfo>& m) {
  Json out = Json::object();
  for (const auto& [name, info] : m) {
    out[name] = {{"label", info.label}, {"unit", info.unit}};
  }
  return out;
}

std::map<std::string, ElementInfo> element_map_from_json(const Json& j,
                                                        const std::string& path) {
  std::map<std::string, ElementInfo> out;
  if (j.is_null()) return out;
  if (!j.is_object()) parse_error(path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string p = path + "." + it.key();
    out[it.key()] = {text(field(it.value(), "label", p), p + ".label"),
                     text(field(it.value(), "unit", p), p + ".unit")};
  }
  return out;
}

}  // namespace

Json to_json(const PumpInstance& p) {
  Json types = Json::array();
  for (const auto& t : p.types) {
    types.push_back({{"m1", t.m1}, {"m2", t.m2}, {"m3", t.m3}, {"m4", t.m4},
                     {"m5", t.m5}, {"m6", t.m6}, {"fixed_cost", t.fixed_cost},
                     {"power_cost", t.power_cost}, {"max_power", t.max_power}});
  }
  return {{"total_flow", p.total_flow},
          {"total_pressure", p.total_pressure},
          {"max_speed", p.max_speed},
          {"max_series", p.max_series},
          {"max_parallel", p.max_parallel},
          {"types", types}};
}

PumpInstance pump_instance_from_json(const Json& j) {
  const std::string path = "pump";
  PumpInstance p;
  p.total_flow = number(field(j, "total_flow", path), path + ".total_flow");
  p.total_pressure = number(field(j, "total_pressure", path), path + ".total_pressure");
  p.max_speed = number(field(j, "max_speed", path), path + ".max_speed");
  p.max_series = integer(field(j, "max_series", path), path + ".max_series");
  p.max_parallel = integer(field(j, "max_parallel", path), path + ".max_parallel");
  const Json& types = field(j, "types", path);
  if (!types.is_array()) parse_error(path + ".types", "expected an array");
  for (std::size_t i = 0; i < types.size(); ++i) {
    const std::string tp = path + ".types[" + std::to_string(i) + "]";
    const Json& t = types[i];
    PumpType pt;
    pt.m1 = number(field(t, "m1", tp), tp + ".m1");
    pt.m2 = number(field(t, "m2", tp), tp + ".m2");
    pt.m3 = number(field(t, "m3", tp), tp + ".m3");
    pt.m4 = number(field(t, "m4", tp), tp + ".m4");
    pt.m5 = number(field(t, "m5", tp), tp + ".m5");
    pt.m6 = number(field(t, "m6", tp), tp + ".m6");
    pt.fixed_cost = number(field(t, "fixed_cost", tp), tp + ".fixed_cost");
    pt.power_cost = number(field(t, "power_cost", tp), tp + ".power_cost");
    pt.max_power = number(field(t, "max_power", tp), tp + ".max_power");
    p.types.push_back(pt);
  }
  return p;
}

Json to_json(const FormulationIR& ir) {
  Json vars = Json::array();
  for (const auto& v : ir.variables) {
    vars.push_back({{"name", v.name},
                    {"domain", std::string(to_string(v.domain))},
                    {"lower", v.lower},
                    {"upper", v.upper ? Json(*v.upper) : Json(nullptr)}});
  }
  Json cons = Json::array();
  for (const auto& c : ir.constraints) {
    cons.push_back({{"name", c.name},
                    {"coefficients", Json(c.coefficients)},
                    {"comparator", std::string(to_string(c.comparator))},
                    {"rhs", c.rhs}});
  }
  return {{"category", std::string(to_string(ir.category))},
          {"variables", vars},
          {"constraints", cons},
          {"objective",
           {{"sense", std::string(to_string(ir.objective.sense))},
            {"coefficients", Json(ir.objective.coefficients)},
            {"constant", ir.objective.constant}}},
          {"pump", ir.pump ? to_json(*ir.pump) : Json(nullptr)}};
}

FormulationIR formulation_from_json(const Json& j) {
  const std::string path = "formulation";
  FormulationIR ir;
  ir.category = parse_category(text(field(j, "category", path), path + ".category"));
  if (auto it = j.find("pump"); it != j.end() && !it->is_null()) {
    ir.pump = pump_instance_from_json(*it);
  }
  const Json& vars = field(j, "variables", path);
  if (!vars.is_array()) parse_error(path + ".variables", "expected an array");
  if (vars.empty() && ir.category == Category::kPump && ir.pump) {
    ir.variables = make_pump_formulation(*ir.pump).variables;
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string vp = path + ".variables[" + std::to_string(i) + "]";
    Variable v;
    v.name = text(field(vars[i], "name", vp), vp + ".name");
    v.domain = parse_domain(text(field(vars[i], "domain", vp), vp + ".domain"));
    v.lower = number(field(vars[i], "lower", vp), vp + ".lower");
    if (auto it = vars[i].find("upper"); it != vars[i].end() && !it->is_null()) {
      v.upper = number(*it, vp + ".upper");
    }
    ir.variables.push_back(std::move(v));
  }
  const Json& cons = field(j, "constraints", path);
  if (!cons.is_array()) parse_error(path + ".constraints", "expected an array");
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const std::string cp = path + ".constraints[" + std::to_string(i) + "]";
    LinearConstraint c;
    if (auto it = cons[i].find("name"); it != cons[i].end()) c.name = text(*it, cp + ".name");
    c.coefficients = coefficients_from_json(field(cons[i], "coefficients", cp),
                                            cp + ".coefficients");
    c.comparator = parse_comparator(text(field(cons[i], "comparator", cp),
                                         cp + ".comparator"));
    c.rhs = number(field(cons[i], "rhs", cp), cp + ".rhs");
    ir.constraints.push_back(std::move(c));
  }
  const Json& obj = field(j, "objective", path);
  const std::string op = path + ".objective";
  ir.objective.sense = parse_sense(text(field(obj, "sense", op), op + ".sense"));
  ir.objective.coefficients =
      coefficients_from_json(field(obj, "coefficients", op), op + ".coefficients");
  if (auto it = obj.find("constant"); it != obj.end()) {
    ir.objective.constant = number(*it, op + ".constant");
  }
  return ir;
}

Json assignment_to_json(const Assignment& a) { return Json(a); }

Assignment assignment_from_json(const Json& j) {
  return coefficients_from_json(j, "assignment");
}

Json to_json(const Solution& s) {
  return {{"status", std::string(to_string(s.status))},
          {"assignment", assignment_to_json(s.assignment)},
          {"objective", s.objective},
          {"diagnostics", s.diagnostics}};
}

Solution solution_from_json(const Json& j) {
  Solution s;
  s.status = parse_solve_status(text(field(j, "status", "solution"), "solution.status"));
  s.assignment = assignment_from_json(field(j, "assignment", "solution"));
  s.objective = number(field(j, "objective", "solution"), "solution.objective");
  if (auto it = j.find("diagnostics"); it != j.end()) {
    s.diagnostics = text(*it, "solution.diagnostics");
  }
  return s;
}

Json to_json(const Metadata& m) {
  return {{"scenario", m.scenario},
          {"objective_label", m.objective_label},
          {"objective_unit", m.objective_unit},
          {"variables", element_map_to_json(m.variables)},
          {"constraints", element_map_to_json(m.constraints)},
          {"notes", m.notes}};
}

Metadata metadata_from_json(const Json& j) {
  Metadata m;
  if (j.is_null()) return m;
  if (!j.is_object()) parse_error("metadata", "expected an object");
  m.scenario = j.value("scenario", "");
  m.objective_label = j.value("objective_label", "");
  m.objective_unit = j.value("objective_unit", "");
  if (auto it = j.find("variables"); it != j.end()) {
    m.variables = element_map_from_json(*it, "metadata.variables");
  }
  if (auto it = j.find("constraints"); it != j.end()) {
    m.constraints = element_map_from_json(*it, "metadata.constraints");
  }
  if (auto it = j.find("notes"); it != j.end() && it->is_array()) {
    for (const auto& n : *it) m.notes.push_back(text(n, "metadata.notes"));
  }
  return m;
}

Json to_json(const WorldDescriptor& w) {
  return {{"id", w.id},
          {"formulation", to_json(w.formulation)},
          {"solution", assignment_to_json(w.solution)},
          {"objective_value", w.objective_value},
          {"metadata", to_json(w.metadata)},
          {"difficulty", w.difficulty}};
}

WorldDescriptor world_from_json(const Json& j) {
  WorldDescriptor w;
  w.id = text(field(j, "id", "world"), "world.id");
  w.formulation = formulation_from_json(field(j, "formulation", "world"));
  w.solution = assignment_from_json(field(j, "solution", "world"));
  w.objective_value = number(field(j, "objective_value", "world"), "world.objective_value");
  if (auto it = j.find("metadata"); it != j.end()) w.metadata = metadata_from_json(*it);
  if (auto it = j.find("difficulty"); it != j.end()) {
    w.difficulty = text(*it, "world.difficulty");
  }
  return w;
}

Json to_json(const ValidationReport& r) {
  return {{"feasible", r.feasible},
          {"complexity_pass", r.complexity_pass},
          {"trivial_fraction", r.trivial_fraction},
          {"messages", r.messages}};
}

std::string dump_line(const Json& j) { return j.dump(); }

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kUnbounded: return "unbounded";
    case SolveStatus::kIterationLimit: return "iteration-limit";
  }
  return "infeasible";
}

SolveStatus parse_solve_status(std::string_view s) {
  if (s == "optimal") return SolveStatus::kOptimal;
  if (s == "infeasible") return SolveStatus::kInfeasible;
  if (s == "unbounded") return SolveStatus::kUnbounded;
  if (s == "iteration-limit") return SolveStatus::kIterationLimit;
  throw Error(ErrorCode::kParse, "unknown solve status '" + std::string(s) + "'");
}

}  // namespace autoform
