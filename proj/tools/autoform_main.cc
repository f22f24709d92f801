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

// autoform: dataset generation, solving, verification, reward scoring,
// evaluation, curriculum runs and the HTTP service.

#include <csignal>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "autoform/common/error.h"
#include "autoform/harness/commands.h"
#include "autoform/harness/config.h"
#include "autoform/harness/io.h"
#include "autoform/harness/service.h"

namespace {

autoform::Service* g_service = nullptr;

void handle_signal(int) {
  if (g_service) g_service->stop();
}

// Writes to --output when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw autoform::Error(autoform::ErrorCode::kNotFound, "cannot write '" + path + "'");
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace autoform;
  CLI::App app{"Optimization autoformalization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  std::string output_path;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("-o,--output", output_path, "write results here instead of stdout");

  std::string category = "LP";
  std::string family;
  int count = 1;
  std::uint64_t seed = 0;
  bool worked = false;
  auto* generate = app.add_subcommand("generate", "instantiate a template into a JSONL dataset");
  generate->add_option("--category", category, "LP, MILP or NLP-Pump");
  generate->add_option("--family", family, "template family");
  generate->add_option("--count", count, "number of accepted worlds")->check(CLI::PositiveNumber);
  generate->add_option("--seed", seed, "generation seed");
  generate->add_flag("--worked-pump", worked, "use the worked-example pump instance");

  app.add_subcommand("fixtures", "write the three worked-example worlds");

  std::string input;
  bool table = false;
  std::string expect;
  auto* solve = app.add_subcommand("solve", "solve worlds or bare formulations");
  solve->add_option("input", input, "JSONL file")->required();
  solve->add_flag("--table", table, "print tables instead of JSONL");
  solve->add_option("--category", expect, "fail unless every line has this category");

  std::string descriptions;
  std::uint64_t style = 0;
  auto* verify = app.add_subcommand("verify", "run the five checks on descriptions");
  verify->add_option("dataset", input, "world JSONL")->required();
  verify->add_option("--descriptions", descriptions, "JSONL {problem_id, description}");
  verify->add_option("--style", style, "style seed when rendering");

  int omissions = 0;
  auto* render = app.add_subcommand("render", "render descriptions (optionally incomplete)");
  render->add_option("dataset", input, "world JSONL")->required();
  render->add_option("--style", style, "style seed");
  render->add_option("--omit", omissions, "elements to omit (1-3)");
  render->add_option("--seed", seed, "omission seed");

  std::string candidates;
  bool ground_truth = false;
  auto* reward = app.add_subcommand("reward", "score candidates against their worlds");
  reward->add_option("dataset", input, "world JSONL")->required();
  reward->add_option("--candidates", candidates, "JSONL {problem_id, samples}");
  reward->add_flag("--ground-truth", ground_truth, "score each world's own formulation");

  int k = 1;
  std::string mode = "all";
  bool records = false;
  auto* eval = app.add_subcommand("eval", "pass@1, pass@k and sc@k over sampled candidates");
  eval->add_option("dataset", input, "world JSONL")->required();
  eval->add_option("candidates", candidates, "JSONL {problem_id, samples}")->required();
  eval->add_option("-k", k, "samples per problem")->check(CLI::PositiveNumber);
  eval->add_option("--mode", mode, "all, pass or sc");
  eval->add_flag("--records", records, "also print per-problem records");

  CurriculumOptions curriculum_options;
  std::optional<double> tau;
  std::optional<int> group;
  auto* curriculum = app.add_subcommand("curriculum", "run the phase gate with a policy");
  curriculum->add_option("--policy", curriculum_options.policy,
                         "fail, oracle:<p>, replay:<path> or external");
  curriculum->add_option("--easy", curriculum_options.easy, "easy world JSONL")->required();
  curriculum->add_option("--hard", curriculum_options.hard, "hard world JSONL")->required();
  curriculum->add_option("--tau", tau, "gate threshold");
  curriculum->add_option("--group", group, "rollouts per problem");
  curriculum->add_option("--seed", curriculum_options.seed, "estimator seed");
  curriculum->add_option("--steps", curriculum_options.max_steps, "advance attempts");
  curriculum->add_option("--phase", curriculum_options.start_phase, "starting phase");

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "HTTP service over a dataset");
  serve->add_option("dataset", input, "world JSONL")->required();
  serve->add_option("--host", host, "bind address");
  serve->add_option("--port", port, "bind port (0 picks one)");

  app.add_subcommand("config", "print the effective configuration");

  CLI11_PARSE(app, argc, argv);

  try {
    HarnessConfig config = config_path.empty() ? HarnessConfig{} : load_config(config_path);
    if (tau) config.tau = *tau;
    if (group) config.group = *group;
    Output out(output_path);
    std::ostream& os = out.stream();

    if (*generate) {
      GenerateOptions o;
      o.category = parse_category(category);
      o.family = family;
      o.count = count;
      o.seed = seed;
      o.worked_pump = worked;
      const GenBatchReport report = cmd_generate(o, os);
      std::cerr << "accepted " << report.accepted << " of " << report.attempts << " attempts\n";
    } else if (app.got_subcommand("fixtures")) {
      cmd_fixtures(os);
    } else if (*solve) {
      SolveOptions o;
      o.table = table;
      if (!expect.empty()) o.expect = parse_category(expect);
      cmd_solve(input, o, os);
    } else if (*verify) {
      const int failures = cmd_verify(
          input, descriptions.empty() ? std::nullopt : std::optional<std::string>(descriptions),
          style, os);
      if (failures > 0) {
        std::cerr << failures << " description(s) failed verification\n";
        return 2;
      }
    } else if (*render) {
      cmd_render(input, {style, omissions, seed}, os);
    } else if (*reward) {
      if (ground_truth == !candidates.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "pass exactly one of --candidates, --ground-truth");
      }
      cmd_reward(input, ground_truth ? std::nullopt : std::optional<std::string>(candidates),
                 config, os);
    } else if (*eval) {
      cmd_eval(input, candidates, k, parse_eval_mode(mode), config, os, records);
    } else if (*curriculum) {
      cmd_curriculum(curriculum_options, config, os);
    } else if (*serve) {
      Service service(read_worlds(input), config);
      const int bound = service.bind(host, port);
      g_service = &service;
      std::signal(SIGINT, handle_signal);
      std::signal(SIGTERM, handle_signal);
      std::cerr << "listening on http://" << host << ":" << bound << "\n";
      service.listen();
      g_service = nullptr;
    } else if (app.got_subcommand("config")) {
      os << to_json(config).dump(2) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << error_record(e).dump() << "\n";
    return 1;
  }
  return 0;
}
