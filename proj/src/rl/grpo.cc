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

#include "autoform/rl/grpo.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "autoform/common/error.h"

namespace autoform {

std::vector<double> group_advantages(const std::vector<double>& rewards) {
  const std::size_t g = rewards.size();
  if (g < 2) {
    throw Error(ErrorCode::kGroupTooSmall,
                "group needs at least 2 rewards, got " + std::to_string(g));
  }
  double mean = 0.0;
  for (double r : rewards) {
    if (!std::isfinite(r)) throw Error(ErrorCode::kInvalidArgument, "non-finite reward");
    mean += r;
  }
  mean /= static_cast<double>(g);
  double var = 0.0;
  for (double r : rewards) var += (r - mean) * (r - mean);
  const double std = std::sqrt(var / static_cast<double>(g));
  std::vector<double> out(g, 0.0);
  if (std < kDegenerateStd) return out;
  for (std::size_t i = 0; i < g; ++i) out[i] = (rewards[i] - mean) / std;
  return out;
}

std::string_view to_string(SurrogateVariant v) {
  return v == SurrogateVariant::kTokenSum ? "token-sum" : "length-normalized";
}

SurrogateVariant parse_surrogate_variant(std::string_view s) {
  if (s == "length-normalized") return SurrogateVariant::kLengthNormalized;
  if (s == "token-sum") return SurrogateVariant::kTokenSum;
  throw Error(ErrorCode::kParse, "unknown surrogate variant '" + std::string(s) + "'");
}

double clipped_term(double ratio, double advantage, double clip) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw Error(ErrorCode::kDomain, "probability ratio must be positive");
  }
  const double clipped = std::clamp(ratio, 1.0 - clip, 1.0 + clip);
  return std::min(ratio * advantage, clipped * advantage);
}

double clipped_surrogate(const SurrogateInputs& inputs) {
  if (!(inputs.clip > 0.0 && inputs.clip < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "clip parameter must lie in (0, 1)");
  }
  if (inputs.rollouts.empty()) throw Error(ErrorCode::kInvalidArgument, "empty group");
  double total = 0.0;
  for (const Rollout& r : inputs.rollouts) {
    if (r.ratios.empty()) throw Error(ErrorCode::kInvalidArgument, "rollout without tokens");
    if (!std::isfinite(r.advantage)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite advantage");
    }
    double sum = 0.0;
    for (double rho : r.ratios) sum += clipped_term(rho, r.advantage, inputs.clip);
    if (inputs.variant == SurrogateVariant::kLengthNormalized) {
      sum /= static_cast<double>(r.ratios.size());
    }
    total += sum;
  }
  return total / static_cast<double>(inputs.rollouts.size());
}

std::pair<double, double> multi_turn_credit(const TurnAdvantages& t) {
  if (!std::isfinite(t.a_i) || !std::isfinite(t.a_o) || !std::isfinite(t.alpha)) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite turn advantage");
  }
  if (t.alpha < 0.0) throw Error(ErrorCode::kInvalidArgument, "alpha must be >= 0");
  return {t.a_i + t.alpha * t.a_o, t.a_o};
}

}  // namespace autoform
