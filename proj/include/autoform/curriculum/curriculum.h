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

// Solvability estimation, the phase gate and the three-phase schedule.

#ifndef AUTOFORM_CURRICULUM_CURRICULUM_H_
#define AUTOFORM_CURRICULUM_CURRICULUM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autoform/backtranslate/description.h"
#include "autoform/core/serialize.h"
#include "autoform/core/world.h"
#include "autoform/curriculum/policy.h"
#include "autoform/reward/reward.h"

namespace autoform {

enum class Distribution { kEasy, kHard };

std::string_view to_string(Distribution d);

struct PhaseState {
  int phase = 1;
  Distribution distribution = Distribution::kEasy;
  bool privileged = true;
  double tau = 0.05;
  int group = 8;  // rollouts per problem, also k in the estimator

  // Phase 1: privileged + easy; 2: easy; 3: hard.
  static PhaseState for_phase(int phase, double tau = 0.05, int group = 8);
  // Throws kInvalidArgument when the phase invariants do not hold.
  void validate() const;

  bool operator==(const PhaseState&) const = default;
};

struct SolvabilityOptions {
  bool privileged = false;
  RewardConfig reward;
  int threads = 8;
};

// Fraction of problems where at least one of k rollouts earns a positive
// reward. Rollout r of problem j draws from a substream of (seed, j, r), so
// a larger k only adds rollouts. Throws kInvalidArgument for k < 1 or no
// problems.
double estimate_solvability(Policy& policy, const std::vector<WorldDescriptor>& problems,
                            int k, std::uint64_t seed, const SolvabilityOptions& options = {});

// S >= tau.
bool gate(double solvability, double tau);

inline constexpr std::string_view kPrivilegedHeader = "### Solver reference";

// Phase 1 prefixes a fixed syntax block and the explicit constraint list of
// w; later phases return d.text unchanged.
std::string augment_privileged(const Description& d, const WorldDescriptor& w,
                               const PhaseState& phase);

struct AdvanceResult {
  PhaseState state;
  bool advanced = false;
  std::optional<double> solvability;  // unset at the terminal phase
};

// Estimates S for the next phase's distribution and augmentation and moves
// there when the gate passes. Phase 3 is terminal.
AdvanceResult advance(Policy& policy, const PhaseState& state,
                      const std::vector<WorldDescriptor>& easy,
                      const std::vector<WorldDescriptor>& hard, std::uint64_t seed,
                      const SolvabilityOptions& options = {});

struct CurriculumStep {
  int step = 0;
  int from_phase = 1;
  int to_phase = 1;
  std::optional<double> solvability;
  bool advanced = false;
};

// Calls advance up to max_steps times (each with its own seed substream),
// stopping once phase 3 is reached.
std::vector<CurriculumStep> run_curriculum(Policy& policy, PhaseState state,
                                           const std::vector<WorldDescriptor>& easy,
                                           const std::vector<WorldDescriptor>& hard,
                                           std::uint64_t seed, int max_steps,
                                           const SolvabilityOptions& options = {});

Json to_json(const PhaseState& s);
Json to_json(const CurriculumStep& s);

}  // namespace autoform

#endif  // AUTOFORM_CURRICULUM_CURRICULUM_H_
