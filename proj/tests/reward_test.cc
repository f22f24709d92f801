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

#include <cmath>
#include <string>
#include <vector>

#include "autoform/backtranslate/description.h"
#include "autoform/common/error.h"
#include "autoform/common/rng.h"
#include "autoform/core/evaluate.h"
#include "autoform/instancer/fixtures.h"
#include "autoform/instancer/instancer.h"
#include "autoform/instancer/template.h"
#include "autoform/reward/reward.h"
#include "autoform/solver/pump.h"
#include "doctest.h"
#include "support/corpus.h"

using namespace autoform;

namespace {

// Two-decimal equality by way of printed text.
bool oracle_same_2dp(double a, double b) {
  char x[64], y[64];
  std::snprintf(x, sizeof x, "%.2f", a);
  std::snprintf(y, sizeof y, "%.2f", b);
  return std::string(x) == y;
}

}  // namespace

TEST_CASE("ground truth formulations of the fixtures earn every component") {
  for (const auto& w : worked_examples()) {
    const RewardBreakdown b = evaluate_candidate(Candidate::from_formulation(w.formulation), w);
    CHECK_MESSAGE(b.total == 1.2, w.id, " ", to_json(b).dump());
    CHECK(b.r_exec == 0.1);
    CHECK(b.r_feas == 0.1);
    CHECK(b.r_opt == 1.0);
    const RewardBreakdown bundle = evaluate_candidate(Candidate::from_bundle(w.solution), w);
    CHECK(bundle.total == 1.2);
  }
  const auto& pump = worked_pump_world();
  CHECK(evaluate_candidate(Candidate::from_formulation(pump.formulation), pump).power_bonus);
}

TEST_CASE("feasible but suboptimal bundle scores execution and feasibility") {
  const auto& w = farming_lp_world();
  Assignment zeros;
  for (const auto& v : w.formulation.variables) zeros[v.name] = 0.0;
  const RewardBreakdown b = evaluate_candidate(Candidate::from_bundle(zeros), w);
  CHECK(b.total == doctest::Approx(0.2));
  CHECK(b.r_opt == 0.0);
}

TEST_CASE("execution gate") {
  const auto& w = farming_lp_world();
  SUBCASE("undeclared variable") {
    FormulationIR ir = w.formulation;
    ir.constraints[0].coefficients["x_barley_acres"] = 1.0;
    const RewardBreakdown b = evaluate_candidate(Candidate::from_formulation(ir), w);
    CHECK(b.total == 0.0);
    CHECK(b.diagnostics.at("exec").find("x_barley_acres") != std::string::npos);
  }
  SUBCASE("unparsed output") {
    const Candidate c = candidate_from_json(
        Json{{"kind", "formulation"}, {"formulation", {{"category", "LP"}}}});
    CHECK_FALSE(c.formulation.has_value());
    CHECK(evaluate_candidate(c, w).total == 0.0);
  }
  SUBCASE("wrong category") {
    FormulationIR ir = warehouse_milp_world().formulation;
    CHECK(evaluate_candidate(Candidate::from_formulation(ir), w).total == 0.0);
  }
  SUBCASE("bundle missing a variable") {
    Assignment a = w.solution;
    a.erase("x_wheat_acres");
    CHECK(evaluate_candidate(Candidate::from_bundle(a), w).total == 0.0);
  }
  SUBCASE("infeasible model executes but earns nothing else") {
    FormulationIR ir = w.formulation;
    ir.constraints.push_back({"impossible", {{"x_corn_acres", 1.0}}, Comparator::kGe, 5000.0});
    const RewardBreakdown b = evaluate_candidate(Candidate::from_formulation(ir), w);
    CHECK(b.r_exec == 0.1);
    CHECK(b.total == doctest::Approx(0.1));
  }
}

TEST_CASE("optimality rules per category") {
  const auto& lp = farming_lp_world();
  Solution s{SolveStatus::kOptimal, lp.solution, lp.objective_value, ""};
  CHECK(check_optimality(s, lp, Category::kLp));

  SUBCASE("LP objective shifted within the rounding") {
    double delta = 0.004;
    if (!oracle_same_2dp(lp.objective_value + delta, lp.objective_value)) delta = -0.004;
    REQUIRE(oracle_same_2dp(lp.objective_value + delta, lp.objective_value));
    s.objective += delta;
    CHECK(check_optimality(s, lp, Category::kLp));
  }
  SUBCASE("LP variable off by 0.02") {
    s.assignment["x_corn_acres"] += 0.02;
    CHECK_FALSE(check_optimality(s, lp, Category::kLp));
  }
  SUBCASE("status must be optimal") {
    s.status = SolveStatus::kIterationLimit;
    CHECK_FALSE(check_optimality(s, lp, Category::kLp));
  }
  SUBCASE("MILP compares the objective only") {
    const auto& m = warehouse_milp_world();
    Solution ms{SolveStatus::kOptimal, m.solution, m.objective_value, ""};
    ms.assignment.begin()->second += 3.0;
    CHECK(check_optimality(ms, m, Category::kMilp));
    ms.objective += 0.02;
    CHECK_FALSE(check_optimality(ms, m, Category::kMilp));
  }
  SUBCASE("pump cost tolerance and pattern") {
    const auto& p = worked_pump_world();
    Solution ps{SolveStatus::kOptimal, p.solution, p.objective_value, ""};
    ps.objective = p.objective_value * 1.019;
    CHECK(check_optimality(ps, p, Category::kPump));
    ps.objective = p.objective_value * 1.021;
    CHECK_FALSE(check_optimality(ps, p, Category::kPump));
    ps.objective = p.objective_value * 0.981;
    CHECK(check_optimality(ps, p, Category::kPump));
    ps.objective = p.objective_value;
    ps.assignment[pump_var_active(4)] = 1.0 - ps.assignment[pump_var_active(4)];
    CHECK_FALSE(check_optimality(ps, p, Category::kPump));
  }
  SUBCASE("pump power bonus") {
    const auto& p = worked_pump_world();
    Assignment a = p.solution;
    CHECK(pump_power_match(a, p));
    a[pump_var_power(0)] *= 1.04;
    CHECK(pump_power_match(a, p));
    a[pump_var_power(0)] = p.solution.at(pump_var_power(0)) * 1.06;
    CHECK_FALSE(pump_power_match(a, p));
  }
}

TEST_CASE("weights are configurable and ordered by default") {
  const RewardConfig d;
  CHECK(d.alpha_exec <= d.alpha_feas);
  CHECK(d.alpha_feas < d.alpha_opt);
  RewardConfig c;
  c.alpha_exec = 0.05;
  c.alpha_feas = 0.25;
  c.alpha_opt = 2.0;
  const auto& w = farming_lp_world();
  const RewardBreakdown b = evaluate_candidate(Candidate::from_formulation(w.formulation), w, c);
  CHECK(b.total == doctest::Approx(2.3));
}

TEST_CASE("generated ground truth scores in full and fuzzed candidates respect the gates") {
  const auto ws = support::mixed_corpus(6, 4242);
  REQUIRE(ws.size() >= 60);
  Rng rng(99);
  int fuzzed = 0;
  for (const auto& w : ws) {
    const Candidate truth = Candidate::from_formulation(w.formulation);
    const RewardBreakdown b = evaluate_candidate(truth, w);
    CHECK_MESSAGE(b.total == 1.2, w.id, " ", to_json(b).dump());
    CHECK(evaluate_candidate(truth, w) == b);
    for (int k = 0; k < 6; ++k, ++fuzzed) {
      const RewardBreakdown f = evaluate_candidate(support::mutate(w, rng), w);
      CHECK_FALSE((f.r_feas > 0 && f.r_exec == 0));
      CHECK_FALSE((f.r_opt > 0 && f.r_feas == 0));
      CHECK(f.total == doctest::Approx(f.r_exec + f.r_feas + f.r_opt));
    }
  }
  CHECK(fuzzed >= 360);
}

TEST_CASE("perturbing one LP variable loses optimality") {
  for (const auto& w : support::mixed_corpus(2, 77)) {
    if (w.formulation.category != Category::kLp) continue;
    for (const auto& [name, value] : w.solution) {
      Assignment a = w.solution;
      a[name] = value + 1.0;
      const RewardBreakdown b = evaluate_candidate(Candidate::from_bundle(a), w);
      CHECK(b.r_opt == 0.0);
      CHECK(b.r_exec == 0.1);
    }
  }
}

TEST_CASE("claimed bundle objective must agree with the assignment") {
  const auto& w = farming_lp_world();
  CHECK(evaluate_candidate(Candidate::from_bundle(w.solution, w.objective_value), w).total ==
        1.2);
  const RewardBreakdown b =
      evaluate_candidate(Candidate::from_bundle(w.solution, w.objective_value + 5.0), w);
  CHECK(b.r_opt == 0.0);
  CHECK(b.r_feas == 0.1);
}

TEST_CASE("query tags") {
  CHECK(extract_tagged_query("<query> how much water? </query>") == "how much water?");
  CHECK(extract_tagged_query("prefix <query>x</query> suffix") == "x");
  CHECK_FALSE(extract_tagged_query("how much water?"));
  CHECK_FALSE(extract_tagged_query("<query>   </query>"));
  CHECK_FALSE(extract_tagged_query("<query>unterminated"));
  CHECK_FALSE(extract_tagged_query("</query>backwards<query>"));
}

TEST_CASE("two-turn reward") {
  const auto& w = farming_lp_world();
  OmissionLedger ledger;
  std::uint64_t seed = 0;
  for (;; ++seed) {
    auto [d, l] = omit(w, 1, seed);
    if (l.omissions[0].element == "objective/x_corn_acres") {
      ledger = l;
      break;
    }
    REQUIRE(seed < 1000);
  }
  Trajectory t;
  t.candidate = Candidate::from_formulation(w.formulation);

  t.query = "<query>What is the per-unit cost of corn acres?</query>";
  auto [ri, ro] = multi_turn_reward(t, w, ledger);
  CHECK(ri == 0.2);
  CHECK(ro == 1.2);

  t.query = "What is the per-unit cost of corn acres?";
  CHECK(multi_turn_reward(t, w, ledger).first == 0.0);

  t.query = "<query>Can you provide more details?</query>";
  CHECK(multi_turn_reward(t, w, ledger) == std::pair{0.0, 1.2});

  t.query.reset();
  CHECK(multi_turn_reward(t, w, ledger) == std::pair{0.0, 1.2});

  t.candidate.reset();
  try {
    multi_turn_reward(t, w, ledger);
    FAIL("expected malformed trajectory");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMalformedTrajectory);
  }
}

TEST_CASE("json") {
  const auto& w = warehouse_milp_world();
  for (const Candidate& c : {Candidate::from_formulation(w.formulation),
                             Candidate::from_bundle(w.solution, 12.5),
                             Candidate::from_bundle(w.solution),
                             Candidate::unparsed("garbage", "bad")}) {
    CHECK(candidate_from_json(to_json(c)) == c);
  }
  const RewardBreakdown b = evaluate_candidate(Candidate::from_bundle(w.solution), w);
  CHECK(reward_breakdown_from_json(to_json(b)) == b);
  for (const Json& bad : {Json(3), Json{{"kind", "poem"}}, Json{{"kind", "bundle"}},
                          Json{{"kind", "bundle"}, {"assignment", Json::object()},
                               {"objective", "high"}}}) {
    try {
      candidate_from_json(bad);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParse);
    }
  }
  Trajectory t;
  t.incomplete = render_description(w);
  t.query = "<query>q</query>";
  t.answer = "a";
  t.candidate = Candidate::from_bundle(w.solution);
  t.r_i = 0.2;
  t.terminal = true;
  CHECK(trajectory_from_json(to_json(t)) == t);
}
