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

// Two-turn clarification episodes over incomplete descriptions.

#ifndef AUTOFORM_MULTITURN_EPISODE_H_
#define AUTOFORM_MULTITURN_EPISODE_H_

#include <cstdint>
#include <string>

#include "autoform/backtranslate/description.h"
#include "autoform/core/world.h"
#include "autoform/multiturn/trajectory.h"
#include "autoform/reward/candidate.h"
#include "autoform/reward/reward.h"

namespace autoform {

struct CommitResult {
  double r_i = 0.0;
  double r_o = 0.0;
  Trajectory trajectory;
};

// Holds the omission ledger privately; the agent only sees d-minus and the
// oracle's answers. Not thread-safe; callers serialize access per episode.
class Episode {
 public:
  // Omits `omissions` elements of w with `seed`. Errors propagate from omit().
  static Episode reset(const WorldDescriptor& w, int omissions, std::uint64_t seed,
                       const RewardConfig& config = {});

  const Description& incomplete() const { return trajectory_.incomplete; }
  // 1 before the query, 2 after it.
  int turn() const { return trajectory_.query ? 2 : 1; }
  bool terminal() const { return trajectory_.terminal; }
  const Trajectory& trajectory() const { return trajectory_; }
  const std::string& world_id() const { return world_.id; }
  int omission_count() const { return static_cast<int>(ledger_.omissions.size()); }

  // Oracle answer to q. Throws kOutOfTurn after the first query and
  // kAlreadyTerminal after a commit.
  std::string step_query(const std::string& q);

  // Scores c and seals the episode; allowed on turn 1 or 2. Throws
  // kAlreadyTerminal on a second commit.
  CommitResult step_commit(const Candidate& c);

 private:
  Episode(WorldDescriptor w, OmissionLedger ledger, Description d, RewardConfig config);

  WorldDescriptor world_;
  OmissionLedger ledger_;
  RewardConfig config_;
  Trajectory trajectory_;
};

// Tagged question naming `element` by its keywords; what a scripted agent
// asks when it knows which element is missing.
std::string targeted_query(const WorldDescriptor& w, const std::string& element,
                           const RewardConfig& config = {});

Json to_json(const CommitResult& r);

}  // namespace autoform

#endif  // AUTOFORM_MULTITURN_EPISODE_H_
