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


#include "autoform/instancer/instancer.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>

#include "autoform/common/error.h"
#include "autoform/core/evaluate.h"
#include "autoform/core/serialize.h"
#include "autoform/solver/solve.h"
#include "families.h"

namespace autoform {
namespace {

using DedupKey = std::pair<long long, std::vector<long long>>;

long long cents(double x) { return std::llround(x * 100.0); }

DedupKey dedup_key(const WorldDescriptor& w) {
  std::vector<long long> xs;
  xs.reserve(w.solution.size());
  for (const auto& [name, value] : w.solution) xs.push_back(cents(value));
  std::sort(xs.begin(), xs.end());
  return {cents(w.objective_value), std::move(xs)};
}

std::string canonical_text(const WorldDescriptor& w) {
  return to_json(canonicalize(w.formulation)).dump();
}

FilterResult judge(const FormulationIR& ir, const Solution& s) {
  switch (s.status) {
    case SolveStatus::kOptimal:
      break;
    case SolveStatus::kInfeasible:
    case SolveStatus::kUnbounded:
      return {false, RejectReason::kInfeasible, std::string(to_string(s.status))};
    case SolveStatus::kIterationLimit:
      return {false, RejectReason::kSolverFailure, s.diagnostics};
  }
  const double trivial = trivial_fraction(ir, s.assignment);
  if (trivial > kMaxTrivialFraction + 1e-12) {
    return {false, RejectReason::kTrivialVariables,
            "trivial fraction " + std::to_string(trivial)};
  }
  return {true, RejectReason::kNone, ""};
}

struct Outcome {
  FilterResult filter;
  WorldDescriptor world;
};

std::string category_slug(Category c) {
  switch (c) {
    case Category::kLp: return "lp";
    case Category::kMilp: return "milp";
    case Category::kPump: return "pump";
  }
  return "lp";
}

Outcome attempt(const TemplateSpec& spec, std::uint64_t seed, std::uint64_t stream,
                std::string id, const InstantiationHook* hook) {
  Rng rng = Rng::substream(seed, stream);
  internal::Draft draft = internal::sample_family(spec, rng);
  Outcome out;
  out.world.id = std::move(id);
  out.world.metadata = std::move(draft.metadata);
  out.world.difficulty = std::move(draft.difficulty);
  if (hook != nullptr && *hook) {
    FormulationIR proposed = (*hook)(spec, draft.formulation);
    std::set<std::string> before, after;
    for (const auto& v : draft.formulation.variables) before.insert(v.name);
    for (const auto& v : proposed.variables) after.insert(v.name);
    if (before != after || proposed.category != draft.formulation.category) {
      throw Error(ErrorCode::kInvalidFormulation,
                  "instantiation hook changed the variable set or category");
    }
    draft.formulation = std::move(proposed);
  }
  out.world.formulation = std::move(draft.formulation);
  Solution s;
  try {
    s = solve(out.world.formulation);
  } catch (const Error& e) {
    out.filter = {false, RejectReason::kSolverFailure, e.what()};
    return out;
  }
  out.filter = judge(out.world.formulation, s);
  if (s.optimal()) {
    out.world.solution = s.assignment;
    out.world.objective_value = evaluate_objective(out.world.formulation, s.assignment);
  }
  if (!spec.enforce_complexity && out.filter.reason == RejectReason::kTrivialVariables) {
    out.filter = {true, RejectReason::kNone, out.filter.detail};
  }
  return out;
}

std::string tally_text(const std::map<RejectReason, int>& tally) {
  std::string out;
  for (const auto& [reason, n] : tally) {
    if (!out.empty()) out += ", ";
    out += std::string(to_string(reason)) + ": " + std::to_string(n);
  }
  return out.empty() ? "none" : out;
}

// Evaluates attempts [first, first + n) on worker threads; results are
// positionally ordered so the reduction stays deterministic.
std::vector<Outcome> run_batch(const TemplateSpec& spec, std::uint64_t seed, long long first,
                               int n) {
  std::vector<std::optional<Outcome>> slots(static_cast<std::size_t>(n));
  std::vector<std::string> errors(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  const std::string prefix = category_slug(spec.category) + "-" + spec.family + "-" +
                             std::to_string(seed) + "-";
  auto work = [&] {
    for (int i = next++; i < n; i = next++) {
      const auto stream = static_cast<std::uint64_t>(first + i);
      try {
        slots[i] = attempt(spec, seed, stream, prefix + std::to_string(stream), nullptr);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers = std::min<int>(n, static_cast<int>(std::min(hw, 8u)));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<Outcome> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!slots[i]) throw Error(ErrorCode::kGenerationFailure, errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace

std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::kNone: return "none";
    case RejectReason::kInfeasible: return "infeasible";
    case RejectReason::kTrivialVariables: return "trivial-variables";
    case RejectReason::kDuplicate: return "duplicate";
    case RejectReason::kSolverFailure: return "solver-failure";
  }
  return "none";
}

int GenBatchReport::rejected_total() const {
  int total = 0;
  for (const auto& [reason, n] : rejected) total += n;
  return total;
}

FilterResult filter_valid(const WorldDescriptor& w) {
  Solution s;
  try {
    s = solve(w.formulation);
  } catch (const Error& e) {
    return {false, RejectReason::kSolverFailure, e.what()};
  }
  return judge(w.formulation, s);
}

WorldDescriptor instantiate(const TemplateSpec& spec, std::uint64_t seed,
                            const InstantiationHook& hook) {
  validate_template(spec);
  const std::string id =
      category_slug(spec.category) + "-" + spec.family + "-" + std::to_string(seed);
  std::map<RejectReason, int> tally;
  for (int k = 0; k < kMaxResamples; ++k) {
    Outcome o = attempt(spec, seed, static_cast<std::uint64_t>(k), id, &hook);
    if (o.filter.accept) return std::move(o.world);
    ++tally[o.filter.reason];
  }
  throw Error(ErrorCode::kGenerationFailure,
              "no valid instance of '" + spec.family + "' after " +
                  std::to_string(kMaxResamples) + " attempts (" + tally_text(tally) + ")");
}

WorldDescriptor instantiate(const TemplateSpec& spec, std::uint64_t seed) {
  return instantiate(spec, seed, InstantiationHook{});
}

bool is_duplicate(const WorldDescriptor& a, const WorldDescriptor& b) {
  return dedup_key(a) == dedup_key(b) || canonical_text(a) == canonical_text(b);
}

std::vector<WorldDescriptor> dedup(const std::vector<WorldDescriptor>& batch) {
  std::set<DedupKey> keys;
  std::set<std::string> texts;
  std::vector<WorldDescriptor> out;
  for (const auto& w : batch) {
    DedupKey key = dedup_key(w);
    std::string text = canonical_text(w);
    if (keys.contains(key) || texts.contains(text)) continue;
    keys.insert(std::move(key));
    texts.insert(std::move(text));
    out.push_back(w);
  }
  return out;
}

std::pair<std::vector<WorldDescriptor>, GenBatchReport> generate_dataset(
    const TemplateSpec& spec, int count, std::uint64_t seed) {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "count must be at least 1");
  validate_template(spec);
  GenBatchReport report;
  report.requested = count;
  const long long cap = static_cast<long long>(kMaxResamples) * count;
  std::vector<WorldDescriptor> out;
  std::set<DedupKey> keys;
  std::set<std::string> texts;
  long long stream = 0;
  while (static_cast<int>(out.size()) < count) {
    if (stream >= cap) {
      throw Error(ErrorCode::kGenerationFailure,
                  "accepted " + std::to_string(out.size()) + " of " + std::to_string(count) +
                      " after " + std::to_string(report.attempts) + " attempts (" +
                      tally_text(report.rejected) + ")");
    }
    const int missing = count - static_cast<int>(out.size());
    const int n = static_cast<int>(std::min<long long>(cap - stream, std::max(missing, 16)));
    std::vector<Outcome> batch = run_batch(spec, seed, stream, n);
    stream += n;
    for (auto& o : batch) {
      if (static_cast<int>(out.size()) == count) break;
      ++report.attempts;
      if (!o.filter.accept) {
        ++report.rejected[o.filter.reason];
        continue;
      }
      DedupKey key = dedup_key(o.world);
      std::string text = canonical_text(o.world);
      if (keys.contains(key) || texts.contains(text)) {
        ++report.rejected[RejectReason::kDuplicate];
        continue;
      }
      keys.insert(std::move(key));
      texts.insert(std::move(text));
      out.push_back(std::move(o.world));
      ++report.accepted;
    }
  }
  return {std::move(out), report};
}

}  // namespace autoform
