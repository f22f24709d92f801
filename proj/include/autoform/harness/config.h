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

// Key-value configuration for the CLI and the service.
//
//   # comment
//   reward.alpha_opt = 1.0
//   curriculum.tau = 0.05

#ifndef AUTOFORM_HARNESS_CONFIG_H_
#define AUTOFORM_HARNESS_CONFIG_H_

#include <string>
#include <string_view>
#include <vector>

#include "autoform/core/serialize.h"
#include "autoform/reward/reward.h"
#include "autoform/rl/grpo.h"

namespace autoform {

struct HarnessConfig {
  RewardConfig reward;
  double tau = 0.05;
  int group = 8;
  double alpha_mix = 1.0;
  double clip = 0.2;
  SurrogateVariant surrogate = SurrogateVariant::kLengthNormalized;
  int episode_ttl_seconds = 3600;
  int threads = 8;

  bool operator==(const HarnessConfig&) const = default;
};

// Recognized keys, in documentation order.
std::vector<std::string> config_keys();

// Throws kParse naming `source` and the line for malformed lines, unknown
// keys and bad values.
HarnessConfig parse_config(std::string_view text, const std::string& source = "config");

// Throws kNotFound when the file cannot be read.
HarnessConfig load_config(const std::string& path);

Json to_json(const HarnessConfig& c);

}  // namespace autoform

#endif  // AUTOFORM_HARNESS_CONFIG_H_
