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

// CLI commands. Each reads its inputs from files, writes JSONL to `out` and
// throws Error on failure.

#ifndef AUTOFORM_HARNESS_COMMANDS_H_
#define AUTOFORM_HARNESS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "autoform/core/formulation.h"
#include "autoform/core/serialize.h"
#include "autoform/harness/config.h"
#include "autoform/curriculum/curriculum.h"
#include "autoform/harness/eval.h"
#include "autoform/instancer/instancer.h"

namespace autoform {

// {"error": code name, "message"} for Error, "internal" for anything else.
Json error_record(const std::exception& e);

struct GenerateOptions {
  Category category = Category::kLp;
  std::string family;  // ignored with worked_pump
  int count = 1;
  std::uint64_t seed = 0;
  bool worked_pump = false;
};

GenBatchReport cmd_generate(const GenerateOptions& options, std::ostream& out);

// The three worked-example worlds.
void cmd_fixtures(std::ostream& out);

struct SolveOptions {
  bool table = false;  // human-readable tables instead of JSONL
  std::optional<Category> expect;
};

// Lines are WorldDescriptors or bare formulations. Throws kCategoryMismatch
// ("path:line") when a line differs from options.expect.
void cmd_solve(const std::string& path, const SolveOptions& options, std::ostream& out);

// Renders every world with style_seed (or reads {"problem_id",
// "description"} lines from descriptions_path; "description" may be an
// object or plain text) and runs the five checks. Returns the failure count.
int cmd_verify(const std::string& dataset, const std::optional<std::string>& descriptions_path,
               std::uint64_t style_seed, std::ostream& out);

struct RenderOptions {
  std::uint64_t style_seed = 0;
  int omissions = 0;  // 0 renders the full description
  std::uint64_t seed = 0;
};

void cmd_render(const std::string& dataset, const RenderOptions& options, std::ostream& out);

// Scores candidates (or each world's own formulation when candidates_path is
// unset). One line per sample.
void cmd_reward(const std::string& dataset, const std::optional<std::string>& candidates_path,
                const HarnessConfig& config, std::ostream& out);

enum class EvalMode { kAll, kPass, kSc };

EvalMode parse_eval_mode(std::string_view s);

// Writes one report line (plus per-problem lines with with_records).
EvalReport cmd_eval(const std::string& dataset, const std::string& candidates, int k,
                    EvalMode mode, const HarnessConfig& config, std::ostream& out,
                    bool with_records = false);

struct CurriculumOptions {
  std::string policy = "fail";
  std::string easy;
  std::string hard;
  std::uint64_t seed = 0;
  int max_steps = 3;
  int start_phase = 1;
};

// One line per advance attempt, then {"final": PhaseState}.
PhaseState cmd_curriculum(const CurriculumOptions& options, const HarnessConfig& config,
                          std::ostream& out);

}  // namespace autoform

#endif  // AUTOFORM_HARNESS_COMMANDS_H_
