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

#include "autoform/multiturn/episode.h"

#include <string>

#include "autoform/common/error.h"

namespace autoform {

Episode::Episode(WorldDescriptor w, OmissionLedger ledger, Description d, RewardConfig config)
    : world_(std::move(w)), ledger_(std::move(ledger)), config_(std::move(config)) {
  trajectory_.incomplete = std::move(d);
}

Episode Episode::reset(const WorldDescriptor& w, int omissions, std::uint64_t seed,
                       const RewardConfig& config) {
  auto [d, ledger] = omit(w, omissions, seed);
  return Episode(w, std::move(ledger), std::move(d), config);
}

std::string Episode::step_query(const std::string& q) {
  if (trajectory_.terminal) {
    throw Error(ErrorCode::kAlreadyTerminal, "episode already committed");
  }
  if (trajectory_.query) {
    throw Error(ErrorCode::kOutOfTurn, "only one clarification query is allowed");
  }
  trajectory_.query = q;
  trajectory_.answer = oracle_answer(q, world_, ledger_);
  return *trajectory_.answer;
}

CommitResult Episode::step_commit(const Candidate& c) {
  if (trajectory_.terminal) {
    throw Error(ErrorCode::kAlreadyTerminal, "episode already committed");
  }
  trajectory_.candidate = c;
  const auto [r_i, r_o] = multi_turn_reward(trajectory_, world_, ledger_, config_);
  trajectory_.r_i = r_i;
  trajectory_.r_o = r_o;
  trajectory_.terminal = true;
  return {r_i, r_o, trajectory_};
}

std::string targeted_query(const WorldDescriptor& w, const std::string& element,
                           const RewardConfig& config) {
  std::string words;
  for (const auto& group : element_keywords(w, element)) {
    std::string best;
    for (const auto& k : group) {
      if (k.size() > best.size()) best = k;
    }
    if (best.empty()) continue;
    words += (words.empty() ? "" : " ") + best;
  }
  return config.query_open_tag + "What is the value for " + words + "?" +
         config.query_close_tag;
}

Json to_json(const CommitResult& r) {
  return {{"r_i", r.r_i}, {"r_o", r.r_o}, {"trajectory", to_json(r.trajectory)}};
}

}  // namespace autoform
