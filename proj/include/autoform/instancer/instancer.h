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


// Template instantiation with ground truth by construction, validity
// filtering and deduplication.

#ifndef AUTOFORM_INSTANCER_INSTANCER_H_
#define AUTOFORM_INSTANCER_INSTANCER_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autoform/core/world.h"
#include "autoform/instancer/template.h"

namespace autoform {

enum class RejectReason { kNone, kInfeasible, kTrivialVariables, kDuplicate, kSolverFailure };

std::string_view to_string(RejectReason r);

struct FilterResult {
  bool accept = false;
  RejectReason reason = RejectReason::kNone;
  std::string detail;
};

struct GenBatchReport {
  int requested = 0;
  int accepted = 0;
  int attempts = 0;
  std::map<RejectReason, int> rejected;

  int rejected_total() const;
};

// Maximum resamples per instance and oversampling factor per dataset.
inline constexpr int kMaxResamples = 50;

// Solves w.formulation and accepts iff the status is optimal and at most a
// quarter of the variables (pump: types) are trivial at the solved point.
FilterResult filter_valid(const WorldDescriptor& w);

// Deterministic in (spec, seed). Throws kGenerationFailure when
// kMaxResamples candidates in a row are rejected.
WorldDescriptor instantiate(const TemplateSpec& spec, std::uint64_t seed);

// Optional external instantiation step: receives the sampled formulation and
// returns one with the same variable names (e.g. parameters proposed by an
// LLM). Ground truth is still computed by the solvers.
using InstantiationHook =
    std::function<FormulationIR(const TemplateSpec&, const FormulationIR&)>;

WorldDescriptor instantiate(const TemplateSpec& spec, std::uint64_t seed,
                            const InstantiationHook& hook);

// Dedup predicate: same 2-decimal objective and 2-decimal sorted solution
// values, or identical canonical formulations.
bool is_duplicate(const WorldDescriptor& a, const WorldDescriptor& b);

// Keeps the first member of every duplicate group, preserving order.
std::vector<WorldDescriptor> dedup(const std::vector<WorldDescriptor>& batch);

// Exactly `count` accepted, mutually non-duplicate descriptors. Throws
// kInvalidArgument for count < 1 and kGenerationFailure once attempts reach
// kMaxResamples * count.
std::pair<std::vector<WorldDescriptor>, GenBatchReport> generate_dataset(
    const TemplateSpec& spec, int count, std::uint64_t seed);

}  // namespace autoform

#endif  // AUTOFORM_INSTANCER_INSTANCER_H_
