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

#include "autoform/harness/commands.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "autoform/backtranslate/description.h"
#include "autoform/common/error.h"
#include "autoform/common/rng.h"
#include "autoform/curriculum/policy.h"
#include "autoform/harness/io.h"
#include "autoform/instancer/fixtures.h"
#include "autoform/instancer/template.h"
#include "autoform/reward/reward.h"
#include "autoform/solver/pump.h"
#include "autoform/solver/solve.h"

namespace autoform {
namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open '" + path + "'");
  return in;
}

std::string value_table(const Solution& s) {
  std::string out;
  char buf[128];
  for (const auto& [name, value] : s.assignment) {
    std::snprintf(buf, sizeof buf, "%-16s %.6g\n", name.c_str(), value);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "objective        %.6f\n", s.objective);
  return out + buf;
}

std::map<std::string, const WorldDescriptor*> index_worlds(
    const std::vector<WorldDescriptor>& worlds) {
  std::map<std::string, const WorldDescriptor*> out;
  for (const auto& w : worlds) out[w.id] = &w;
  return out;
}

}  // namespace

Json error_record(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    return {{"error", std::string(error_code_name(err->code()))}, {"message", err->what()}};
  }
  return {{"error", "internal"}, {"message", e.what()}};
}

GenBatchReport cmd_generate(const GenerateOptions& options, std::ostream& out) {
  const TemplateSpec spec = options.worked_pump
                                ? worked_pump_template()
                                : make_template(options.category, options.family);
  auto [worlds, report] = generate_dataset(spec, options.count, options.seed);
  write_worlds(out, worlds);
  return report;
}

void cmd_fixtures(std::ostream& out) { write_worlds(out, worked_examples()); }

void cmd_solve(const std::string& path, const SolveOptions& options, std::ostream& out) {
  auto in = open_input(path);
  for_each_jsonl(in, path, [&](int line, const Json& j) {
    std::string id = "line-" + std::to_string(line);
    FormulationIR ir;
    if (j.is_object() && j.contains("formulation")) {
      const WorldDescriptor w = world_from_json(j);
      id = w.id;
      ir = w.formulation;
    } else {
      ir = formulation_from_json(j);
    }
    if (options.expect && ir.category != *options.expect) {
      throw Error(ErrorCode::kCategoryMismatch,
                  path + ":" + std::to_string(line) + ": expected " +
                      std::string(to_string(*options.expect)) + ", found " +
                      std::string(to_string(ir.category)));
    }
    const Solution s = solve(ir);
    if (options.table) {
      out << "# " << id << " (" << to_string(ir.category) << ", " << to_string(s.status)
          << ")\n";
      if (ir.category == Category::kPump && ir.pump && s.status == SolveStatus::kOptimal) {
        out << format_pump_table(unflatten_pump_config(*ir.pump, s.assignment), s.objective);
      } else {
        out << value_table(s);
      }
      return;
    }
    out << Json({{"id", id},
                 {"category", std::string(to_string(ir.category))},
                 {"solution", to_json(s)}})
               .dump()
        << "\n";
  });
}

int cmd_verify(const std::string& dataset, const std::optional<std::string>& descriptions_path,
               std::uint64_t style_seed, std::ostream& out) {
  const auto worlds = read_worlds(dataset);
  std::map<std::string, Description> given;
  if (descriptions_path) {
    auto in = open_input(*descriptions_path);
    const auto known = index_worlds(worlds);
    for_each_jsonl(in, *descriptions_path, [&](int, const Json& j) {
      if (!j.is_object() || !j.contains("problem_id") || !j.contains("description")) {
        throw Error(ErrorCode::kParse, "expected {\"problem_id\", \"description\"}");
      }
      const std::string id = j["problem_id"].get<std::string>();
      if (!known.contains(id)) {
        throw Error(ErrorCode::kNotFound, "description for unknown problem '" + id + "'");
      }
      const Json& d = j["description"];
      if (d.is_string()) {
        Description desc;
        desc.text = d.get<std::string>();
        given[id] = desc;
      } else {
        given[id] = description_from_json(d);
      }
    });
  }
  int failures = 0;
  for (const auto& w : worlds) {
    Description d;
    if (descriptions_path) {
      auto it = given.find(w.id);
      if (it == given.end()) {
        throw Error(ErrorCode::kNotFound, "no description for problem '" + w.id + "'");
      }
      d = it->second;
    } else {
      d = render_description(w, style_seed);
    }
    const FiveCheckReport report = verify_description(d, w);
    failures += !report.pass();
    out << Json({{"id", w.id}, {"pass", report.pass()}, {"report", to_json(report)}}).dump()
        << "\n";
  }
  return failures;
}

void cmd_render(const std::string& dataset, const RenderOptions& options, std::ostream& out) {
  const auto worlds = read_worlds(dataset);
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    const auto& w = worlds[i];
    Json line = {{"id", w.id}};
    if (options.omissions > 0) {
      const std::uint64_t seed = Rng::substream(options.seed, i).next();
      auto [d, ledger] = omit(w, options.omissions, seed, options.style_seed);
      line["description"] = to_json(d);
      line["ledger"] = to_json(ledger);
    } else {
      line["description"] = to_json(render_description(w, options.style_seed));
    }
    out << line.dump() << "\n";
  }
}

void cmd_reward(const std::string& dataset, const std::optional<std::string>& candidates_path,
                const HarnessConfig& config, std::ostream& out) {
  const auto worlds = read_worlds(dataset);
  auto emit = [&](const WorldDescriptor& w, std::size_t sample, const Candidate& c) {
    out << Json({{"problem_id", w.id},
                 {"sample", sample},
                 {"reward", to_json(evaluate_candidate(c, w, config.reward))}})
               .dump()
        << "\n";
  };
  if (!candidates_path) {
    for (const auto& w : worlds) emit(w, 0, Candidate::from_formulation(w.formulation));
    return;
  }
  const auto known = index_worlds(worlds);
  for (const auto& set : read_candidates(*candidates_path)) {
    auto it = known.find(set.problem_id);
    if (it == known.end()) {
      throw Error(ErrorCode::kNotFound, "candidates for unknown problem '" + set.problem_id + "'");
    }
    for (std::size_t i = 0; i < set.samples.size(); ++i) emit(*it->second, i, set.samples[i]);
  }
}

EvalMode parse_eval_mode(std::string_view s) {
  if (s == "all") return EvalMode::kAll;
  if (s == "pass") return EvalMode::kPass;
  if (s == "sc") return EvalMode::kSc;
  throw Error(ErrorCode::kInvalidArgument, "unknown eval mode '" + std::string(s) + "'");
}

EvalReport cmd_eval(const std::string& dataset, const std::string& candidates, int k,
                    EvalMode mode, const HarnessConfig& config, std::ostream& out,
                    bool with_records) {
  const auto worlds = read_worlds(dataset);
  const auto sets = read_candidates(candidates);
  EvalReport report = evaluate_benchmark(worlds, sets, k, config.reward, config.threads);
  Json j = to_json(report);
  const std::string ks = std::to_string(k);
  auto strip = [&](Json& m) {
    if (mode == EvalMode::kPass) m.erase("sc@" + ks);
    if (mode == EvalMode::kSc) {
      m.erase("pass@1");
      m.erase("pass@" + ks);
    }
  };
  strip(j["overall"]);
  for (auto& [_, m] : j["categories"].items()) strip(m);
  out << j.dump() << "\n";
  if (with_records) {
    for (const auto& r : report.records) out << to_json(r).dump() << "\n";
  }
  return report;
}

PhaseState cmd_curriculum(const CurriculumOptions& options, const HarnessConfig& config,
                          std::ostream& out) {
  const auto easy = read_worlds(options.easy);
  const auto hard = read_worlds(options.hard);
  auto policy = make_policy(options.policy);
  PhaseState state = PhaseState::for_phase(options.start_phase, config.tau, config.group);
  SolvabilityOptions so;
  so.reward = config.reward;
  so.threads = config.threads;
  const auto steps =
      run_curriculum(*policy, state, easy, hard, options.seed, options.max_steps, so);
  for (const auto& s : steps) out << to_json(s).dump() << "\n";
  if (!steps.empty()) state = PhaseState::for_phase(steps.back().to_phase, config.tau, config.group);
  out << Json({{"final", to_json(state)}, {"policy", policy->name()}}).dump() << "\n";
  return state;
}

}  // namespace autoform
