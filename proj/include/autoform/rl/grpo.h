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

// Group-relative advantages, the clipped surrogate objective and two-turn
// credit assignment. Pure functions.

#ifndef AUTOFORM_RL_GRPO_H_
#define AUTOFORM_RL_GRPO_H_

#include <string_view>
#include <utility>
#include <vector>

namespace autoform {

// Below this population std a group is degenerate and gets zero advantages.
inline constexpr double kDegenerateStd = 1e-12;

// (r_i - mean) / population std. Throws kGroupTooSmall for fewer than two
// rewards and kInvalidArgument for non-finite ones.
std::vector<double> group_advantages(const std::vector<double>& rewards);

enum class SurrogateVariant {
  kLengthNormalized,  // mean over each rollout's tokens
  kTokenSum,          // sum over tokens, no 1/|c_i|
};

std::string_view to_string(SurrogateVariant v);
SurrogateVariant parse_surrogate_variant(std::string_view s);

struct Rollout {
  std::vector<double> ratios;  // per-token probability ratios, one per token
  double advantage = 0.0;      // broadcast over the rollout's tokens
};

struct SurrogateInputs {
  std::vector<Rollout> rollouts;
  double clip = 0.2;
  SurrogateVariant variant = SurrogateVariant::kLengthNormalized;
};

// min(rho * A, clip(rho, 1 - eps, 1 + eps) * A).
double clipped_term(double ratio, double advantage, double clip);

// Group average of the per-rollout clipped objective. Throws kDomain for a
// non-positive ratio and kInvalidArgument for clip outside (0, 1), an empty
// group or a rollout without tokens.
double clipped_surrogate(const SurrogateInputs& inputs);

struct TurnAdvantages {
  double a_i = 0.0;    // query-turn advantage
  double a_o = 0.0;    // outcome advantage
  double alpha = 1.0;  // weight of the outcome on turn one
};

// (A_I + alpha * A_O, A_O). Throws kInvalidArgument for non-finite inputs or
// negative alpha.
std::pair<double, double> multi_turn_credit(const TurnAdvantages& t);

}  // namespace autoform

#endif  // AUTOFORM_RL_GRPO_H_
