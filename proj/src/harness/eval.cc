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

#include "autoform/harness/eval.h"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "autoform/common/error.h"

namespace autoform {
namespace {

std::optional<long long> majority_key(const std::vector<std::optional<double>>& objectives,
                                     int decimals) {
  const double scale = std::pow(10.0, decimals);
  std::map<long long, int> counts;
  for (const auto& o : objectives) {
    if (o && std::isfinite(*o)) ++counts[std::llround(*o * scale)];
  }
  long long best = 0;
  int top = 0;
  bool tied = false;
  for (const auto& [key, n] : counts) {
    if (n > top) {
      best = key;
      top = n;
      tied = false;
    } else if (n == top) {
      tied = true;
    }
  }
  if (top == 0 || tied) return std::nullopt;
  return best;
}

void add(MetricSummary& m, const EvalRecord& r) {
  ++m.problems;
  m.pass_at_1 += r.pass_at_1;
  m.pass_at_k += r.pass_at_k;
  m.sc_at_k += r.sc_at_k;
}

void finish(MetricSummary& m) {
  if (m.problems == 0) return;
  m.pass_at_1 /= m.problems;
  m.pass_at_k /= m.problems;
  m.sc_at_k /= m.problems;
}

}  // namespace

std::optional<double> majority_objective(const std::vector<std::optional<double>>& objectives,
                                         int decimals) {
  const auto key = majority_key(objectives, decimals);
  if (!key) return std::nullopt;
  return static_cast<double>(*key) / std::pow(10.0, decimals);
}

EvalRecord score_problem(const WorldDescriptor& w, const std::vector<Candidate>& samples, int k,
                         const RewardConfig& config) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (static_cast<int>(samples.size()) < k) {
    throw Error(ErrorCode::kSampleShortfall,
                w.id + " has " + std::to_string(samples.size()) + " samples, k = " +
                    std::to_string(k));
  }
  EvalRecord r;
  r.problem_id = w.id;
  r.category = w.formulation.category;
  std::vector<std::optional<double>> objectives;
  for (int i = 0; i < k; ++i) {
    RewardBreakdown b = evaluate_candidate(samples[static_cast<std::size_t>(i)], w, config);
    r.pass_at_k = r.pass_at_k || b.r_opt > 0.0;
    if (i == 0) r.pass_at_1 = b.r_opt > 0.0;
    objectives.push_back(b.r_exec > 0.0 ? b.objective : std::nullopt);
    r.samples.push_back(std::move(b));
  }
  // Majority cluster is correct iff one of its samples passes the optimality check.
  const int decimals =
      r.category == Category::kMilp ? config.milp_decimals : config.lp_decimals;
  if (auto key = majority_key(objectives, decimals)) {
    const double scale = std::pow(10.0, decimals);
    for (int i = 0; i < k; ++i) {
      const auto& o = objectives[static_cast<std::size_t>(i)];
      if (o && std::llround(*o * scale) == *key &&
          r.samples[static_cast<std::size_t>(i)].r_opt > 0.0) {
        r.sc_at_k = true;
      }
    }
  }
  return r;
}

EvalReport evaluate_benchmark(const std::vector<WorldDescriptor>& worlds,
                              const std::vector<CandidateSet>& candidates, int k,
                              const RewardConfig& config, int threads) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  std::map<std::string, const CandidateSet*> by_id;
  std::set<std::string> known;
  for (const auto& w : worlds) known.insert(w.id);
  for (const auto& c : candidates) {
    if (!known.contains(c.problem_id)) {
      throw Error(ErrorCode::kNotFound, "candidates for unknown problem '" + c.problem_id + "'");
    }
    by_id[c.problem_id] = &c;
  }
  std::string short_ids;
  for (const auto& w : worlds) {
    auto it = by_id.find(w.id);
    if (it == by_id.end() || static_cast<int>(it->second->samples.size()) < k) {
      short_ids += (short_ids.empty() ? "" : ", ") + w.id;
    }
  }
  if (!short_ids.empty()) {
    throw Error(ErrorCode::kSampleShortfall,
                "fewer than " + std::to_string(k) + " samples for: " + short_ids);
  }

  EvalReport report;
  report.k = k;
  report.records.resize(worlds.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < worlds.size(); i = next++) {
      try {
        report.records[i] = score_problem(worlds[i], by_id.at(worlds[i].id)->samples, k, config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(worlds.size())));
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (const auto& r : report.records) {
    add(report.overall, r);
    add(report.by_category[std::string(to_string(r.category))], r);
  }
  finish(report.overall);
  for (auto& [_, m] : report.by_category) finish(m);
  return report;
}

Json to_json(const EvalRecord& r) {
  Json samples = Json::array();
  for (const auto& b : r.samples) samples.push_back(to_json(b));
  return {{"problem_id", r.problem_id},
          {"category", std::string(to_string(r.category))},
          {"pass@1", r.pass_at_1},
          {"pass@k", r.pass_at_k},
          {"sc@k", r.sc_at_k},
          {"samples", samples}};
}

Json to_json(const MetricSummary& m, int k) {
  const std::string ks = std::to_string(k);
  return {{"problems", m.problems},
          {"pass@1", m.pass_at_1},
          {"pass@" + ks, m.pass_at_k},
          {"sc@" + ks, m.sc_at_k}};
}

Json to_json(const EvalReport& r, bool include_records) {
  Json categories = Json::object();
  for (const auto& [name, m] : r.by_category) categories[name] = to_json(m, r.k);
  Json out = {{"k", r.k}, {"overall", to_json(r.overall, r.k)}, {"categories", categories}};
  if (include_records) {
    Json records = Json::array();
    for (const auto& rec : r.records) records.push_back(to_json(rec));
    out["records"] = records;
  }
  return out;
}

}  // namespace autoform
