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

#include "autoform/curriculum/curriculum.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "autoform/common/error.h"
#include "autoform/common/numeric_text.h"

namespace autoform {
namespace {

constexpr const char* kSyntaxBlock =
    "Answer with one JSON object describing the model:\n"
    "{\"category\": \"LP\" | \"MILP\" | \"NLP-Pump\",\n"
    " \"variables\": [{\"name\": ..., \"domain\": \"continuous\" | \"integer\" | \"binary\",\n"
    "                \"lower\": 0, \"upper\": null}],\n"
    " \"constraints\": [{\"name\": ..., \"coefficients\": {\"var\": coef},\n"
    "                  \"comparator\": \"<=\" | \">=\" | \"=\", \"rhs\": ...}],\n"
    " \"objective\": {\"sense\": \"max\" | \"min\", \"coefficients\": {...}, \"constant\": 0},\n"
    " \"pump\": null}\n"
    "Pump models put the instance data under \"pump\" (total_flow, total_pressure,\n"
    "max_speed, max_series, max_parallel, types with m1..m6, fixed_cost, power_cost,\n"
    "max_power) and leave variables and constraints empty.\n";

std::string linear_row(const CoefficientMap& coefficients) {
  std::string out;
  for (const auto& [name, c] : coefficients) {
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (std::abs(c) != 1.0) out += format_number(std::abs(c)) + " ";
    out += name;
  }
  return out.empty() ? "0" : out;
}

std::string constraint_list(const WorldDescriptor& w) {
  std::string out = "Constraints:\n";
  if (w.formulation.category == Category::kPump) {
    out +=
        "- power: P_i = m1 r^3 + m2 r^2 vdot_i - m3 r vdot_i^2, r = w_i / max_speed\n"
        "- pressure: dp_i = m4 r vdot_i + m5 r^2 - m6 vdot_i^2\n"
        "- flow balance: sum x_i = 1, num_p_i vdot_i = x_i total_flow\n"
        "- pressure balance: dp_i num_s_i = z_i total_pressure\n"
        "- an inactive type (z_i = 0) has zero pumps, speed, power, pressure and flow\n";
    return out;
  }
  for (std::size_t k = 0; k < w.formulation.constraints.size(); ++k) {
    const auto& c = w.formulation.constraints[k];
    out += "- " + (c.name.empty() ? "row_" + std::to_string(k) : c.name) + ": " +
           linear_row(c.coefficients) + " " + std::string(to_string(c.comparator)) + " " +
           format_number(c.rhs) + "\n";
  }
  for (const auto& v : w.formulation.variables) {
    out += "- " + v.name + " is " + std::string(to_string(v.domain)) + ", at least " +
           format_number(v.lower);
    if (v.upper) out += ", at most " + format_number(*v.upper);
    out += "\n";
  }
  return out;
}

const std::vector<WorldDescriptor>& problems_for(Distribution d,
                                                 const std::vector<WorldDescriptor>& easy,
                                                 const std::vector<WorldDescriptor>& hard) {
  return d == Distribution::kEasy ? easy : hard;
}

}  // namespace

std::string_view to_string(Distribution d) { return d == Distribution::kEasy ? "easy" : "hard"; }

PhaseState PhaseState::for_phase(int phase, double tau, int group) {
  PhaseState s;
  s.phase = phase;
  s.tau = tau;
  s.group = group;
  s.distribution = phase == 3 ? Distribution::kHard : Distribution::kEasy;
  s.privileged = phase == 1;
  s.validate();
  return s;
}

void PhaseState::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::kInvalidArgument, what); };
  if (phase < 1 || phase > 3) bad("phase must be 1, 2 or 3");
  if (privileged != (phase == 1)) bad("privileged information is on exactly in phase 1");
  if ((distribution == Distribution::kHard) != (phase == 3)) {
    bad("phase 3 trains on the hard distribution, phases 1 and 2 on the easy one");
  }
  if (!(tau >= 0.0 && tau <= 1.0)) bad("tau must lie in [0, 1]");
  if (group < 1) bad("group size must be >= 1");
}

double estimate_solvability(Policy& policy, const std::vector<WorldDescriptor>& problems,
                            int k, std::uint64_t seed, const SolvabilityOptions& options) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (problems.empty()) throw Error(ErrorCode::kInvalidArgument, "no problems to estimate on");
  const PhaseState prompt_phase = PhaseState::for_phase(options.privileged ? 1 : 2);

  std::vector<char> solved(problems.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t j = next++; j < problems.size(); j = next++) {
      try {
        const WorldDescriptor& w = problems[j];
        const std::string prompt =
            augment_privileged(render_description(w), w, prompt_phase);
        const std::uint64_t problem_seed = Rng::substream(seed, j).next();
        for (int r = 0; r < k && !solved[j]; ++r) {
          Rng rng = Rng::substream(problem_seed, static_cast<std::uint64_t>(r));
          const Candidate c = policy.act({w, prompt, r, rng});
          if (evaluate_candidate(c, w, options.reward).total > 0.0) solved[j] = 1;
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = problems.size();
      }
    }
  };
  const int threads = policy.thread_safe()
                          ? std::clamp(options.threads, 1, static_cast<int>(problems.size()))
                          : 1;
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  const auto count = std::count(solved.begin(), solved.end(), 1);
  return static_cast<double>(count) / static_cast<double>(problems.size());
}

bool gate(double solvability, double tau) { return solvability >= tau; }

std::string augment_privileged(const Description& d, const WorldDescriptor& w,
                               const PhaseState& phase) {
  if (!phase.privileged) return d.text;
  return std::string(kPrivilegedHeader) + "\n" + kSyntaxBlock + constraint_list(w) +
         "### Problem\n" + d.text;
}

AdvanceResult advance(Policy& policy, const PhaseState& state,
                      const std::vector<WorldDescriptor>& easy,
                      const std::vector<WorldDescriptor>& hard, std::uint64_t seed,
                      const SolvabilityOptions& options) {
  state.validate();
  AdvanceResult out{state, false, std::nullopt};
  if (state.phase == 3) return out;
  const PhaseState next = PhaseState::for_phase(state.phase + 1, state.tau, state.group);
  SolvabilityOptions o = options;
  o.privileged = next.privileged;
  const double s = estimate_solvability(policy, problems_for(next.distribution, easy, hard),
                                        state.group, seed, o);
  out.solvability = s;
  if (gate(s, state.tau)) {
    out.state = next;
    out.advanced = true;
  }
  return out;
}

std::vector<CurriculumStep> run_curriculum(Policy& policy, PhaseState state,
                                           const std::vector<WorldDescriptor>& easy,
                                           const std::vector<WorldDescriptor>& hard,
                                           std::uint64_t seed, int max_steps,
                                           const SolvabilityOptions& options) {
  std::vector<CurriculumStep> steps;
  for (int i = 0; i < max_steps && state.phase < 3; ++i) {
    const AdvanceResult r =
        advance(policy, state, easy, hard, Rng::substream(seed, static_cast<std::uint64_t>(i)).next(),
                options);
    steps.push_back({i, state.phase, r.state.phase, r.solvability, r.advanced});
    state = r.state;
  }
  return steps;
}

Json to_json(const PhaseState& s) {
  return {{"phase", s.phase},
          {"distribution", std::string(to_string(s.distribution))},
          {"privileged", s.privileged},
          {"tau", s.tau},
          {"group", s.group}};
}

Json to_json(const CurriculumStep& s) {
  return {{"step", s.step},
          {"from_phase", s.from_phase},
          {"to_phase", s.to_phase},
          {"solvability", s.solvability ? Json(*s.solvability) : Json(nullptr)},
          {"advanced", s.advanced}};
}

}  // namespace autoform
