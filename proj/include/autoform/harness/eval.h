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

// Benchmark metrics over sampled candidates: pass@1, pass@k and sc@k.

#ifndef AUTOFORM_HARNESS_EVAL_H_
#define AUTOFORM_HARNESS_EVAL_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "autoform/core/world.h"
#include "autoform/harness/io.h"
#include "autoform/reward/reward.h"

namespace autoform {

struct EvalRecord {
  std::string problem_id;
  Category category = Category::kLp;
  std::vector<RewardBreakdown> samples;  // the first k
  bool pass_at_1 = false;
  bool pass_at_k = false;
  bool sc_at_k = false;
};

struct MetricSummary {
  int problems = 0;
  double pass_at_1 = 0.0;
  double pass_at_k = 0.0;
  double sc_at_k = 0.0;
};

struct EvalReport {
  int k = 1;
  MetricSummary overall;
  std::map<std::string, MetricSummary> by_category;
  std::vector<EvalRecord> records;
};

// Most frequent value after rounding to `decimals`; nullopt when there are
// no values or the top count is shared.
std::optional<double> majority_objective(const std::vector<std::optional<double>>& objectives,
                                         int decimals = 2);

// Scores the first k samples. Throws kSampleShortfall when fewer are given.
EvalRecord score_problem(const WorldDescriptor& w, const std::vector<Candidate>& samples, int k,
                         const RewardConfig& config = {});

// Throws kSampleShortfall listing every problem with fewer than k samples
// (or none), kNotFound for candidate sets naming unknown problems and
// kInvalidArgument for k < 1.
EvalReport evaluate_benchmark(const std::vector<WorldDescriptor>& worlds,
                              const std::vector<CandidateSet>& candidates, int k,
                              const RewardConfig& config = {}, int threads = 8);

Json to_json(const EvalRecord& r);
Json to_json(const MetricSummary& m, int k);
// Summary only unless include_records.
Json to_json(const EvalReport& r, bool include_records = false);

}  // namespace autoform

#endif  // AUTOFORM_HARNESS_EVAL_H_
