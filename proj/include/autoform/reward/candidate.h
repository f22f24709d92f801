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

// What a policy hands back for scoring: a formulation to be solved, or a
// solved assignment.

#ifndef AUTOFORM_REWARD_CANDIDATE_H_
#define AUTOFORM_REWARD_CANDIDATE_H_

#include <optional>
#include <string>
#include <string_view>

#include "autoform/core/formulation.h"
#include "autoform/core/serialize.h"

namespace autoform {

enum class CandidateKind { kFormulation, kBundle };

std::string_view to_string(CandidateKind k);

struct Candidate {
  CandidateKind kind = CandidateKind::kFormulation;
  // kFormulation. Empty when the policy output did not parse as an IR;
  // parse_error then says why.
  std::optional<FormulationIR> formulation;
  std::string parse_error;
  // kBundle.
  Assignment assignment;
  std::optional<double> claimed_objective;
  // Raw policy output, kept for format checks and diagnostics.
  std::string raw_text;

  static Candidate from_formulation(FormulationIR ir);
  static Candidate from_bundle(Assignment a, std::optional<double> objective = std::nullopt);
  // A formulation candidate that failed to parse.
  static Candidate unparsed(std::string raw_text, std::string why);

  bool operator==(const Candidate&) const = default;
};

// {"kind": "formulation", "formulation": {...}, "raw_text": "..."} or
// {"kind": "bundle", "assignment": {...}, "objective": x}.
Json to_json(const Candidate& c);

// Throws kParse when the envelope is malformed. A formulation payload that
// does not parse yields Candidate::unparsed instead of an error.
Candidate candidate_from_json(const Json& j);

}  // namespace autoform

#endif  // AUTOFORM_REWARD_CANDIDATE_H_
