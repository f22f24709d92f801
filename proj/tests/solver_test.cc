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


#include <chrono>
#include <cmath>

#include "autoform/common/error.h"
#include "autoform/common/numeric_text.h"
#include "autoform/common/rng.h"
#include "autoform/core/evaluate.h"
#include "autoform/core/serialize.h"
#include "autoform/instancer/fixtures.h"
#include "autoform/solver/lp.h"
#include "autoform/solver/milp.h"
#include "autoform/solver/pump.h"
#include "autoform/solver/solve.h"
#include "doctest.h"
#include "oracles/lattice_enumeration.h"
#include "oracles/random_programs.h"
#include "oracles/pump_grid.h"
#include "oracles/reference_values.h"
#include "oracles/vertex_enumeration.h"
#include "oracles/warehouse.h"

using namespace autoform;

namespace {

PumpInstance random_two_type(Rng& rng) {
  const PumpInstance base = worked_pump_instance();
  PumpInstance p;
  p.max_series = 2;
  p.max_parallel = 2;
  p.max_speed = 3000;
  double min_m5 = 1e9;
  double cap = 0.0;
  for (int i = 0; i < 2; ++i) {
    PumpType t = base.types[static_cast<std::size_t>(rng.integer(0, 5))];
    for (double* v : {&t.m1, &t.m2, &t.m3, &t.m4, &t.m5, &t.m6, &t.fixed_cost, &t.power_cost}) {
      *v *= rng.uniform(0.8, 1.2);
    }
    t.max_power = 400;
    min_m5 = std::min(min_m5, t.m5);
    cap += t.m4 / t.m6;
    p.types.push_back(t);
  }
  p.total_pressure = round_to(min_m5 * rng.uniform(0.5, 1.6), 1);
  p.total_flow = round_to(cap * rng.uniform(0.3, 1.2), 1);
  return p;
}

}  // namespace

TEST_CASE("pump characteristic curves") {
  const PumpType t0 = worked_pump_instance().types[0];
  CHECK(pump_power(t0, 3294, 3294, 0) == doctest::Approx(21.5).epsilon(1e-12));
  CHECK(pump_power(t0, 0, 3294, 55) == 0.0);
  CHECK(pump_power(t0, 3294, 3294, 100) == doctest::Approx(32.7).epsilon(1e-12));
  CHECK(pump_pressure(t0, 3294, 3294, 0) == doctest::Approx(345).epsilon(1e-12));
  CHECK(pump_pressure(t0, 0, 3294, 0) == 0.0);
  CHECK(pump_pressure(t0, 3294, 3294, 50) == doctest::Approx(349.75).epsilon(1e-12));
  for (double bad : {-1.0, 3295.0}) {
    try {
      pump_power(t0, bad, 3294, 10);
      FAIL("expected a domain error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kDomain);
    }
    CHECK_THROWS_AS(pump_pressure(t0, bad, 3294, 10), Error);
  }
}

TEST_CASE("pump total cost") {
  PumpInstance p = worked_pump_instance();
  PumpConfig c;
  c.types.assign(6, PumpTypeState{});
  CHECK(pump_total_cost(p, c) == 0.0);
  c.types[0] = {true, 2, 1, 3294, 10, 100, 320, 0.1};
  CHECK(pump_total_cost(p, c) == doctest::Approx(406400.0).epsilon(1e-12));
}

TEST_CASE("maximum pump pressure matches a dense grid") {
  for (const PumpType& t : worked_pump_instance().types) {
    double best = 0.0;
    const double vmax = 2.0 * t.m4 / t.m6;
    for (int i = 0; i <= 400; ++i) {
      for (int k = 0; k <= 4000; ++k) {
        const double r = i / 400.0;
        const double v = vmax * k / 4000.0;
        best = std::max(best, pressure_at_ratio(t, r, v));
      }
    }
    CHECK(max_pump_pressure(t) == doctest::Approx(best).epsilon(1e-6));
  }
}

TEST_CASE("continuous pump subproblem") {
  const PumpInstance p = worked_pump_instance();
  SUBCASE("single type is determined by the flow") {
    PumpInstance one = p;
    one.types = {p.types[4]};
    one.total_flow = 60;
    one.total_pressure = 400;
    one.max_series = 1;
    one.max_parallel = 1;
    const PumpSolveResult r = solve_pump_continuous(one, {{0, 1, 1}});
    const PumpTypeState& s = r.config.types[0];
    CHECK(s.flow == doctest::Approx(60));
    CHECK(pump_pressure(one.types[0], s.speed, one.max_speed, s.flow) ==
          doctest::Approx(400).epsilon(1e-9));
    const double power = pump_power(one.types[0], s.speed, one.max_speed, s.flow);
    CHECK(r.cost == doctest::Approx(13000 + 1650 * power).epsilon(1e-12));
    CHECK(solve_pump(one).cost == doctest::Approx(r.cost).epsilon(1e-12));
  }
  SUBCASE("pressure out of reach") {
    PumpInstance one = p;
    one.types = {p.types[0]};
    one.total_pressure = max_pump_pressure(p.types[0]) * 1.01;
    one.max_series = 1;
    try {
      solve_pump_continuous(one, {{0, 1, 1}});
      FAIL("expected infeasible-pressure");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInfeasiblePressure);
    }
  }
  SUBCASE("flow out of reach") {
    PumpInstance one = p;
    one.types = {p.types[0]};
    one.total_flow = 5000;
    try {
      solve_pump_continuous(one, {{0, 2, 2}});
      FAIL("expected infeasible-flow");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInfeasibleFlow);
    }
  }
  SUBCASE("reported pattern of the worked example") {
    std::vector<PumpPatternEntry> pattern;
    for (int i : {0, 1, 2, 3, 5}) pattern.push_back({i, 2, 1});
    const PumpSolveResult r = solve_pump_continuous(p, pattern);
    CHECK(std::abs(r.cost - oracle::kPumpReportedCost) / oracle::kPumpReportedCost < 0.02);
    CHECK(r.cost == doctest::Approx(oracle::kPumpRestrictedCost).epsilon(1e-4));
    int k = 0;
    for (int i : {0, 1, 2, 3, 5}) {
      const double power = r.config.types[static_cast<std::size_t>(i)].power;
      CHECK(std::abs(power - oracle::kPumpReportedPowers[k]) / oracle::kPumpReportedPowers[k] <
            0.05);
      ++k;
    }
    CHECK_FALSE(r.config.types[4].active);
  }
  SUBCASE("malformed patterns") {
    CHECK_THROWS_AS(solve_pump_continuous(p, {}), Error);
    CHECK_THROWS_AS(solve_pump_continuous(p, {{0, 3, 1}}), Error);
    CHECK_THROWS_AS(solve_pump_continuous(p, {{0, 1, 1}, {0, 2, 1}}), Error);
  }
}

TEST_CASE("global pump enumeration on the worked example") {
  const PumpInstance p = worked_pump_instance();
  const auto start = std::chrono::steady_clock::now();
  const PumpSolveResult r = solve_pump(p);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("solve_pump took " << seconds << " s, cost " << r.cost);
  CHECK(r.cost == doctest::Approx(oracle::kPumpGlobalCost).epsilon(1e-4));
  CHECK(r.config.types[0].parallel == 2);
  CHECK(r.config.active_count() == 4);
  double fraction = 0.0;
  for (std::size_t i = 0; i < p.types.size(); ++i) {
    const PumpTypeState& s = r.config.types[i];
    fraction += s.fraction;
    if (!s.active) {
      CHECK(s == PumpTypeState{});
      continue;
    }
    CHECK(s.pressure * s.series == doctest::Approx(p.total_pressure).epsilon(1e-6));
    CHECK(s.power <= p.types[i].max_power + 1e-9);
    CHECK(s.speed <= p.max_speed);
    CHECK(s.fraction == doctest::Approx(s.flow * s.parallel / p.total_flow).epsilon(1e-12));
  }
  CHECK(fraction == doctest::Approx(1.0).epsilon(1e-6));
  const FormulationIR ir = make_pump_formulation(p);
  const Assignment flat = flatten_pump_config(p, r.config);
  CHECK(max_violation(ir, flat) <= 1e-6);
  CHECK(evaluate_objective(ir, flat) == doctest::Approx(r.cost).epsilon(1e-12));
  CHECK(unflatten_pump_config(p, flat) == r.config);
  const std::string table = format_pump_table(r.config, r.cost);
  CHECK(table.find("Flow Fraction") != std::string::npos);
  CHECK(table.find("Total Objective (Cost): $746") != std::string::npos);
}

TEST_CASE("two-type pump instances agree with the grid oracle") {
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Rng rng(seed);
    const PumpInstance p = random_two_type(rng);
    const oracle::PumpGridResult g = oracle::pump_grid(p);
    try {
      const PumpSolveResult r = solve_pump(p);
      REQUIRE(std::isfinite(g.cost));
      CHECK(std::abs(r.cost - g.cost) / g.cost < 0.02);
      CHECK(r.cost <= g.cost * (1 + 1e-6));
      ++compared;
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInfeasible);
      CHECK_FALSE(std::isfinite(g.cost));
    }
  }
  CHECK(compared >= 6);
}

TEST_CASE("pump enumeration scale limit") {
  PumpInstance p = worked_pump_instance();
  PumpSolverOptions opt;
  opt.max_patterns = 100;
  try {
    solve_pump(p, opt);
    FAIL("expected scale-limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kScaleLimit);
  }
}

TEST_CASE("simplex examples") {
  FormulationIR ir;
  ir.category = Category::kLp;
  ir.variables = {{"x", Domain::kContinuous, 0, std::nullopt}, {"y", Domain::kContinuous, 0, std::nullopt}};
  ir.constraints = {{"cx", {{"x", 1}}, Comparator::kLe, 1}, {"cy", {{"y", 1}}, Comparator::kLe, 1}};
  ir.objective = {Sense::kMax, {{"x", 1}, {"y", 1}}, 0};
  Solution s = solve_lp(ir);
  REQUIRE(s.optimal());
  CHECK(s.objective == doctest::Approx(2));
  CHECK(s.assignment["x"] == doctest::Approx(1));
  CHECK(s.assignment["y"] == doctest::Approx(1));

  FormulationIR minx;
  minx.category = Category::kLp;
  minx.variables = {{"x", Domain::kContinuous, 0, std::nullopt}};
  minx.constraints = {{"c", {{"x", 1}}, Comparator::kGe, 0}};
  minx.objective = {Sense::kMin, {{"x", 1}}, 0};
  s = solve_lp(minx);
  REQUIRE(s.optimal());
  CHECK(s.objective == 0.0);

  minx.objective.sense = Sense::kMax;
  CHECK(solve_lp(minx).status == SolveStatus::kUnbounded);

  minx.constraints.push_back({"d", {{"x", 1}}, Comparator::kLe, -1});
  CHECK(solve_lp(minx).status == SolveStatus::kInfeasible);

  LpOptions tight;
  tight.max_iterations = 1;
  CHECK(solve_lp(ir, tight).status == SolveStatus::kIterationLimit);
  CHECK_THROWS_AS(solve_lp(warehouse_milp_formulation()), Error);
}

TEST_CASE("simplex agrees with vertex enumeration on seeded LPs") {
  int feasible = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng = Rng::substream(2024, seed);
    const FormulationIR ir = oracle::random_lp(rng);
    const auto expected = oracle::lp_by_vertices(ir);
    const Solution s = solve_lp(ir);
    REQUIRE(expected.has_value());
    REQUIRE(s.optimal());
    CHECK(std::abs(s.objective - expected->objective) <= 1e-6 * (1 + std::abs(expected->objective)));
    CHECK(max_violation(ir, s.assignment) <= 1e-6);
    ++feasible;
  }
  CHECK(feasible == 50);
}

TEST_CASE("relaxing a constraint never worsens a minimum") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng = Rng::substream(77, seed);
    FormulationIR ir = oracle::random_lp(rng);
    ir.objective.sense = Sense::kMin;
    const Solution before = solve_lp(ir);
    REQUIRE(before.optimal());
    for (auto& c : ir.constraints) {
      if (c.comparator == Comparator::kLe) c.rhs += 0.5;
      if (c.comparator == Comparator::kGe) c.rhs -= 0.5;
    }
    const Solution after = solve_lp(ir);
    REQUIRE(after.optimal());
    CHECK(after.objective <= before.objective + 1e-9);
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("farming LP fixture") {
  const Solution s = solve_lp(farming_lp_formulation());
  REQUIRE(s.optimal());
  CHECK(s.objective == doctest::Approx(oracle::kFarmingObjective).epsilon(1e-9));
  const char* names[] = {"x_corn_acres", "x_soy_acres", "x_wheat_acres",
                         "x_corn_sold",  "x_soy_sold",  "x_cattle_units"};
  for (int j = 0; j < 6; ++j) {
    CHECK(s.assignment.at(names[j]) == doctest::Approx(oracle::kFarmingPoint[j]).epsilon(1e-7));
  }
  const WorldDescriptor& w = farming_lp_world();
  CHECK(evaluate_objective(w.formulation, w.solution) ==
        doctest::Approx(oracle::kFarmingObjective).epsilon(1e-9));
  CHECK(validate_descriptor(w).ok());
}

TEST_CASE("branch and bound examples") {
  FormulationIR knap;
  knap.category = Category::kMilp;
  for (const char* v : {"a", "b", "c"}) knap.variables.push_back({v, Domain::kBinary, 0, 1});
  knap.constraints = {{"weight", {{"a", 10}, {"b", 20}, {"c", 30}}, Comparator::kLe, 50}};
  knap.objective = {Sense::kMax, {{"a", 60}, {"b", 100}, {"c", 120}}, 0};
  const auto brute = oracle::ip_by_enumeration(knap);
  REQUIRE(brute);
  CHECK(brute->objective == 220);
  Solution s = solve_milp(knap);
  REQUIRE(s.optimal());
  CHECK(s.objective == doctest::Approx(220));
  CHECK(s.assignment["a"] == 0);
  CHECK(s.assignment["b"] == 1);
  CHECK(s.assignment["c"] == 1);

  FormulationIR assign;
  assign.category = Category::kMilp;
  const double cost[2][2] = {{4, 7}, {3, 9}};
  for (int i = 0; i < 2; ++i) {
    LinearConstraint row{"worker" + std::to_string(i), {}, Comparator::kEq, 1};
    LinearConstraint col{"task" + std::to_string(i), {}, Comparator::kEq, 1};
    for (int j = 0; j < 2; ++j) {
      const std::string v = "x" + std::to_string(i) + std::to_string(j);
      assign.variables.push_back({v, Domain::kBinary, 0, 1});
      assign.objective.coefficients[v] = cost[i][j];
      row.coefficients[v] = 1;
      col.coefficients["x" + std::to_string(j) + std::to_string(i)] = 1;
    }
    assign.constraints.push_back(row);
    assign.constraints.push_back(col);
  }
  FormulationIR relaxed = assign;
  relaxed.category = Category::kLp;
  for (auto& v : relaxed.variables) v.domain = Domain::kContinuous;
  const Solution lp = solve_lp(relaxed);
  s = solve_milp(assign);
  REQUIRE(s.optimal());
  CHECK(s.objective == doctest::Approx(lp.objective));
  CHECK(s.objective == doctest::Approx(10));

  MilpOptions few;
  few.max_nodes = 2;
  const Solution limited = solve_milp(warehouse_milp_formulation(), few);
  CHECK(limited.status == SolveStatus::kIterationLimit);
  CHECK(limited.diagnostics.find("node limit") != std::string::npos);
}

TEST_CASE("branch and bound agrees with lattice enumeration") {
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng = Rng::substream(31337, seed);
    const FormulationIR ir = oracle::random_ip(rng);
    const auto expected = oracle::ip_by_enumeration(ir);
    REQUIRE(expected);
    const Solution s = solve_milp(ir);
    REQUIRE(s.optimal());
    CHECK(round_to(s.objective, 2) == round_to(expected->objective, 2));
    CHECK(max_violation(ir, s.assignment) <= 1e-6);
    ++compared;
  }
  CHECK(compared == 100);
}

TEST_CASE("warehouse MILP fixture") {
  const double expected = oracle::warehouse_optimum();
  CHECK(expected == doctest::Approx(oracle::kWarehouseObjective));
  const Solution s = solve_milp(warehouse_milp_formulation());
  REQUIRE(s.optimal());
  CHECK(s.objective == doctest::Approx(expected));
  CHECK(max_violation(warehouse_milp_formulation(), s.assignment) <= 1e-6);
}

TEST_CASE("solve dispatch") {
  const FormulationIR lp = farming_lp_formulation();
  CHECK(solve(lp) == solve_lp(lp));
  const FormulationIR milp = warehouse_milp_formulation();
  CHECK(solve(milp) == solve_milp(milp));
  PumpInstance small = worked_pump_instance();
  small.types.resize(2);
  small.total_flow = 250;
  const Solution s = solve(make_pump_formulation(small));
  const PumpSolveResult r = solve_pump(small);
  REQUIRE(s.optimal());
  CHECK(s.objective == r.cost);
  CHECK(s.assignment == flatten_pump_config(small, r.config));
  PumpInstance impossible = small;
  impossible.total_pressure = 5000;
  impossible.max_series = 1;
  CHECK(solve(make_pump_formulation(impossible)).status == SolveStatus::kInfeasible);
}

TEST_CASE("solutions serialize identically across repeated solves") {
  for (const FormulationIR& ir : {farming_lp_formulation(), warehouse_milp_formulation()}) {
    CHECK(dump_line(to_json(solve(ir))) == dump_line(to_json(solve(ir))));
  }
}
