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

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"

#include "autoform/backtranslate/description.h"
#include "autoform/common/error.h"
#include "autoform/common/rng.h"
#include "autoform/instancer/fixtures.h"
#include "autoform/harness/commands.h"
#include "autoform/harness/config.h"
#include "autoform/harness/eval.h"
#include "autoform/harness/io.h"
#include "autoform/harness/service.h"
#include "autoform/multiturn/episode.h"
#include "autoform/reward/reward.h"
#include "autoform/solver/solve.h"
#include "doctest.h"

using namespace autoform;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  FAIL("expected an Error");
  return "";
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("autoform_harness_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string worlds_text(const std::vector<WorldDescriptor>& worlds) {
  std::ostringstream os;
  write_worlds(os, worlds);
  return os.str();
}

std::vector<Json> lines_of(const std::string& s) {
  std::vector<Json> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(Json::parse(line));
  return out;
}

std::string candidates_text(const std::vector<CandidateSet>& sets) {
  std::string out;
  for (const auto& s : sets) out += to_json(s).dump() + "\n";
  return out;
}

Candidate wrong_bundle(const WorldDescriptor& w, double scale) {
  Assignment a = w.solution;
  for (auto& [_, v] : a) v *= scale;
  return Candidate::from_bundle(a);
}

}  // namespace

TEST_CASE("config parsing") {
  const HarnessConfig c = parse_config(
      "# tuned\n"
      "reward.alpha_opt = 2.5\n"
      "\n"
      "curriculum.tau = 0.1\n"
      "curriculum.group = 4\n"
      "rl.surrogate = token-sum\n"
      "reward.query_open_tag = <ask>\n");
  CHECK(c.reward.alpha_opt == 2.5);
  CHECK(c.tau == 0.1);
  CHECK(c.group == 4);
  CHECK(c.surrogate == SurrogateVariant::kTokenSum);
  CHECK(c.reward.query_open_tag == "<ask>");
  CHECK(c.reward.alpha_exec == 0.1);

  CHECK(parse_config("") == HarnessConfig{});
  CHECK(message_of([] { parse_config("reward.alpha_opt = 1\nbogus = 3\n", "x.conf"); })
            .find("x.conf:2") != std::string::npos);
  CHECK(code_of([] { parse_config("curriculum.group = many\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_config("no equals sign\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { load_config("/nonexistent/autoform.conf"); }) == ErrorCode::kNotFound);

  // Every key round-trips through the JSON dump.
  const Json j = to_json(HarnessConfig{});
  for (const auto& key : config_keys()) {
    CAPTURE(key);
    CHECK(j.contains(key));
  }
}

TEST_CASE("JSONL inputs report file and line") {
  TempDir dir;
  const std::string good = to_json(farming_lp_world()).dump();
  const std::string path = dir.write("bad.jsonl", good + "\n\n{not json\n");
  const std::string msg = message_of([&] { read_worlds(path); });
  CHECK(msg.find("bad.jsonl:3") != std::string::npos);
  CHECK(code_of([&] { read_worlds(path); }) == ErrorCode::kParse);

  const std::string missing = dir.write("missing.jsonl", good + "\n{\"id\": \"x\"}\n");
  CHECK(message_of([&] { read_worlds(missing); }).find("missing.jsonl:2") != std::string::npos);
  CHECK(code_of([&] { read_worlds(dir.file("absent.jsonl")); }) == ErrorCode::kNotFound);

  const std::string cands = dir.write("c.jsonl", "{\"problem_id\": \"a\"}\n");
  CHECK(message_of([&] { read_candidates(cands); }).find("c.jsonl:1") != std::string::npos);

  SUBCASE("self round trip") {
    const auto worlds = worked_examples();
    const std::string p = dir.write("fx.jsonl", worlds_text(worlds));
    CHECK(read_worlds(p) == worlds);
    const std::vector<CandidateSet> sets = {
        {"a", {Candidate::from_formulation(farming_lp_formulation()),
               Candidate::from_bundle({{"x", 1.0}}, 2.0)}}};
    CHECK(read_candidates(dir.write("s.jsonl", candidates_text(sets))) == sets);
  }
}

TEST_CASE("generate is byte-identical for a fixed seed") {
  GenerateOptions o;
  o.category = Category::kMilp;
  o.family = "knapsack";
  o.count = 4;
  o.seed = 77;
  std::ostringstream a, b, c;
  const GenBatchReport report = cmd_generate(o, a);
  cmd_generate(o, b);
  CHECK(report.accepted == 4);
  CHECK(a.str() == b.str());
  o.seed = 78;
  cmd_generate(o, c);
  CHECK(a.str() != c.str());

  const auto lines = lines_of(a.str());
  REQUIRE(lines.size() == 4);
  for (const auto& j : lines) CHECK(to_json(world_from_json(j)) == j);

  std::ostringstream pump;
  GenerateOptions p;
  p.worked_pump = true;
  p.count = 1;
  cmd_generate(p, pump);
  const WorldDescriptor w = world_from_json(lines_of(pump.str()).at(0));
  CHECK(w.formulation.pump == worked_pump_instance());
}

TEST_CASE("solve emits the library solution per line") {
  TempDir dir;
  std::ostringstream fixtures;
  cmd_fixtures(fixtures);
  const std::string path = dir.write("fx.jsonl", fixtures.str());
  std::ostringstream out;
  cmd_solve(path, {}, out);
  const auto lines = lines_of(out.str());
  const auto worlds = worked_examples();
  REQUIRE(lines.size() == worlds.size());
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    CHECK(lines[i]["id"] == worlds[i].id);
    CHECK(lines[i]["solution"] == to_json(solve(worlds[i].formulation)));
    CHECK(lines[i]["solution"]["objective"].get<double>() ==
          doctest::Approx(worlds[i].objective_value).epsilon(1e-6));
  }

  SUBCASE("bare formulations and tables") {
    const std::string bare = dir.write("ir.jsonl", to_json(farming_lp_formulation()).dump() + "\n");
    std::ostringstream o;
    cmd_solve(bare, {}, o);
    CHECK(lines_of(o.str()).at(0)["id"] == "line-1");
    std::ostringstream t;
    cmd_solve(path, {true, std::nullopt}, t);
    CHECK(t.str().find("Total Objective (Cost): $") != std::string::npos);
    CHECK(t.str().find("x_corn_acres") != std::string::npos);
  }

  SUBCASE("category mismatch names the line") {
    std::ostringstream o;
    const std::string msg = message_of([&] { cmd_solve(path, {false, Category::kLp}, o); });
    CHECK(msg.find("fx.jsonl:2") != std::string::npos);
    CHECK(code_of([&] { cmd_solve(path, {false, Category::kLp}, o); }) ==
          ErrorCode::kCategoryMismatch);
  }
}

TEST_CASE("reward and verify commands") {
  TempDir dir;
  std::vector<WorldDescriptor> worlds = worked_examples();
  GenerateOptions o;
  o.category = Category::kLp;
  o.family = "blending";
  o.count = 3;
  o.seed = 5;
  std::ostringstream gen;
  cmd_generate(o, gen);
  const std::string path = dir.write("d.jsonl", worlds_text(worlds) + gen.str());

  std::ostringstream rewards;
  cmd_reward(path, std::nullopt, HarnessConfig{}, rewards);
  const auto lines = lines_of(rewards.str());
  CHECK(lines.size() == 6);
  for (const auto& j : lines) {
    CAPTURE(j.dump());
    CHECK(j["reward"]["total"].get<double>() == doctest::Approx(1.2).epsilon(1e-12));
  }

  std::ostringstream verified;
  CHECK(cmd_verify(path, std::nullopt, 3, verified) == 0);
  for (const auto& j : lines_of(verified.str())) CHECK(j["pass"] == true);

  SUBCASE("external descriptions") {
    const auto& w = farming_lp_world();
    Json full = {{"problem_id", w.id}, {"description", render_description(w, 1).text}};
    Json broken = {{"problem_id", w.id}, {"description", "Plan the farm."}};
    const std::string wp = dir.write("w.jsonl", worlds_text({w}));
    std::ostringstream a, b;
    CHECK(cmd_verify(wp, dir.write("ok.jsonl", full.dump() + "\n"), 0, a) == 0);
    CHECK(cmd_verify(wp, dir.write("bad.jsonl", broken.dump() + "\n"), 0, b) == 1);
    Json stranger = {{"problem_id", "nobody"}, {"description", "x"}};
    CHECK(code_of([&] { cmd_verify(wp, dir.write("s.jsonl", stranger.dump() + "\n"), 0, b); }) ==
          ErrorCode::kNotFound);
  }

  SUBCASE("render with omissions carries the ledger") {
    std::ostringstream r;
    cmd_render(dir.write("w.jsonl", worlds_text({farming_lp_world()})), {0, 2, 9}, r);
    const Json j = lines_of(r.str()).at(0);
    CHECK(ledger_from_json(j["ledger"]).omissions.size() == 2);
  }

  SUBCASE("unknown problem in candidates") {
    const std::string c = dir.write(
        "c.jsonl", candidates_text({{"ghost", {Candidate::unparsed("x", "y")}}}));
    std::ostringstream r;
    CHECK(code_of([&] { cmd_reward(path, c, HarnessConfig{}, r); }) == ErrorCode::kNotFound);
  }
}

TEST_CASE("majority objective") {
  using V = std::vector<std::optional<double>>;
  CHECK(majority_objective(V{1.0, 1.001, 2.0}) == doctest::Approx(1.0));
  CHECK_FALSE(majority_objective(V{1.0, 2.0, 3.0}));
  CHECK_FALSE(majority_objective(V{1.0, 1.0, 2.0, 2.0}));
  CHECK_FALSE(majority_objective(V{std::nullopt, std::nullopt}));
  CHECK(majority_objective(V{std::nullopt, 4.0}) == doctest::Approx(4.0));
}

TEST_CASE("eval metrics on constructed candidate sets") {
  const auto worlds = worked_examples();
  const auto& lp = farming_lp_world();
  const Candidate right = Candidate::from_formulation(lp.formulation);

  SUBCASE("all ground truth") {
    std::vector<CandidateSet> sets;
    for (const auto& w : worlds) {
      sets.push_back({w.id, std::vector<Candidate>(3, Candidate::from_formulation(w.formulation))});
    }
    const EvalReport r = evaluate_benchmark(worlds, sets, 3);
    CHECK(r.overall.problems == 3);
    CHECK(r.overall.pass_at_1 == 1.0);
    CHECK(r.overall.pass_at_k == 1.0);
    CHECK(r.overall.sc_at_k == 1.0);
    CHECK(r.by_category.size() == 3);
    CHECK(r.by_category.at("NLP-Pump").problems == 1);
  }

  SUBCASE("one correct among three distinct objectives") {
    const EvalRecord r =
        score_problem(lp, {wrong_bundle(lp, 0.5), right, wrong_bundle(lp, 0.25)}, 3);
    CHECK_FALSE(r.pass_at_1);
    CHECK(r.pass_at_k);
    CHECK_FALSE(r.sc_at_k);
  }

  SUBCASE("majority decides") {
    CHECK(score_problem(lp, {wrong_bundle(lp, 0.5), right, right}, 3).sc_at_k);
    const EvalRecord wrong =
        score_problem(lp, {right, wrong_bundle(lp, 0.5), wrong_bundle(lp, 0.5)}, 3);
    CHECK(wrong.pass_at_1);
    CHECK_FALSE(wrong.sc_at_k);
    // Unexecutable samples do not vote.
    const Candidate junk = Candidate::unparsed("??", "no json");
    CHECK(score_problem(lp, {junk, junk, right}, 3).sc_at_k);
    // Samples past k are ignored.
    CHECK_FALSE(score_problem(lp, {junk, right}, 1).pass_at_k);
  }

  SUBCASE("shortfall lists every offending id") {
    std::vector<CandidateSet> sets = {{worlds[0].id, {right, right}},
                                      {worlds[1].id, {right}}};
    const std::string msg = message_of([&] { evaluate_benchmark(worlds, sets, 2); });
    CHECK(msg.find(worlds[1].id) != std::string::npos);
    CHECK(msg.find(worlds[2].id) != std::string::npos);
    CHECK(msg.find(worlds[0].id) == std::string::npos);
    CHECK(code_of([&] { evaluate_benchmark(worlds, sets, 2); }) == ErrorCode::kSampleShortfall);
    sets.push_back({"ghost", {right, right}});
    CHECK(code_of([&] { evaluate_benchmark(worlds, sets, 1); }) == ErrorCode::kNotFound);
    CHECK(code_of([&] { evaluate_benchmark(worlds, {}, 0); }) == ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("pass@2 with per-sample success one half") {
  constexpr int kProblems = 2000;
  std::vector<WorldDescriptor> problems;
  std::vector<CandidateSet> sets;
  Rng rng(4242);
  int oracle_hits = 0;
  const Candidate right = Candidate::from_formulation(farming_lp_formulation());
  const Candidate junk = Candidate::unparsed("", "empty");
  for (int i = 0; i < kProblems; ++i) {
    WorldDescriptor w = farming_lp_world();
    w.id = "p" + std::to_string(i);
    const bool a = rng.bernoulli(0.5);
    const bool b = rng.bernoulli(0.5);
    oracle_hits += a || b;
    sets.push_back({w.id, {a ? right : junk, b ? right : junk}});
    problems.push_back(std::move(w));
  }
  const EvalReport r = evaluate_benchmark(problems, sets, 2);
  CHECK(r.overall.pass_at_k == static_cast<double>(oracle_hits) / kProblems);
  const double sigma = std::sqrt(0.75 * 0.25 / kProblems);
  CHECK(std::abs(r.overall.pass_at_k - 0.75) <= 3 * sigma);
  CHECK(std::abs(r.overall.pass_at_1 - 0.5) <= 3 * std::sqrt(0.25 / kProblems));
  CHECK(evaluate_benchmark(problems, sets, 2, {}, 1).overall.pass_at_k == r.overall.pass_at_k);
}

TEST_CASE("metric ordering holds on random candidate sets") {
  const auto& lp = farming_lp_world();
  const Candidate right = Candidate::from_formulation(lp.formulation);
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Candidate> samples;
    const int k = 1 + static_cast<int>(rng.integer(0, 4));
    for (int i = 0; i < k; ++i) {
      switch (rng.integer(0, 3)) {
        case 0: samples.push_back(right); break;
        case 1: samples.push_back(wrong_bundle(lp, 0.5)); break;
        case 2: samples.push_back(wrong_bundle(lp, 0.25)); break;
        default: samples.push_back(Candidate::unparsed("x", "y")); break;
      }
    }
    const EvalRecord r = score_problem(lp, samples, k);
    CHECK(r.pass_at_1 <= r.pass_at_k);
    CHECK(r.sc_at_k <= r.pass_at_k);
  }
}

TEST_CASE("eval command modes") {
  TempDir dir;
  const auto worlds = worked_examples();
  std::vector<CandidateSet> sets;
  for (const auto& w : worlds) {
    sets.push_back({w.id, {Candidate::from_formulation(w.formulation)}});
  }
  const std::string d = dir.write("d.jsonl", worlds_text(worlds));
  const std::string c = dir.write("c.jsonl", candidates_text(sets));
  std::ostringstream all, pass, sc;
  cmd_eval(d, c, 1, EvalMode::kAll, HarnessConfig{}, all, true);
  cmd_eval(d, c, 1, EvalMode::kPass, HarnessConfig{}, pass);
  cmd_eval(d, c, 1, EvalMode::kSc, HarnessConfig{}, sc);
  const auto lines = lines_of(all.str());
  CHECK(lines.size() == 4);
  CHECK(lines[0]["overall"]["sc@1"] == 1.0);
  CHECK(lines_of(pass.str())[0]["overall"].contains("pass@1"));
  CHECK_FALSE(lines_of(pass.str())[0]["overall"].contains("sc@1"));
  CHECK_FALSE(lines_of(sc.str())[0]["overall"].contains("pass@1"));
  CHECK(code_of([] { parse_eval_mode("best"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("curriculum command") {
  TempDir dir;
  GenerateOptions o;
  o.category = Category::kLp;
  o.family = "production";
  o.count = 4;
  o.seed = 1;
  std::ostringstream easy, hard;
  cmd_generate(o, easy);
  o.category = Category::kMilp;
  o.family = "assignment";
  cmd_generate(o, hard);
  CurriculumOptions c;
  c.easy = dir.write("e.jsonl", easy.str());
  c.hard = dir.write("h.jsonl", hard.str());
  c.max_steps = 3;
  HarnessConfig config;
  config.group = 2;

  std::ostringstream fail_out;
  CHECK(cmd_curriculum(c, config, fail_out).phase == 1);
  const auto fail_lines = lines_of(fail_out.str());
  CHECK(fail_lines.size() == 4);
  CHECK(fail_lines.back()["final"]["phase"] == 1);

  c.policy = "oracle:1";
  std::ostringstream oracle_out;
  CHECK(cmd_curriculum(c, config, oracle_out).phase == 3);
}

TEST_CASE("service routes") {
  const auto worlds = worked_examples();
  Service service(worlds, HarnessConfig{});
  const auto& lp = farming_lp_world();
  const Candidate right = Candidate::from_formulation(lp.formulation);

  SUBCASE("reward matches the library byte for byte") {
    const std::string expected = to_json(evaluate_candidate(right, lp)).dump();
    Json by_id = {{"problem_id", lp.id}, {"candidate", to_json(right)}};
    Json by_world = {{"world_descriptor", to_json(lp)}, {"candidate", to_json(right)}};
    const ServiceResponse a = service.handle("POST", "/v1/reward", by_id.dump());
    const ServiceResponse b = service.handle("POST", "/v1/reward", by_world.dump());
    CHECK(a.status == 200);
    CHECK(a.body == expected);
    CHECK(b.body == expected);
    CHECK(Json::parse(a.body)["total"].get<double>() == doctest::Approx(1.2));
  }

  SUBCASE("errors") {
    CHECK(service.handle("GET", "/v1/problems/ghost", "").status == 404);
    CHECK(service.handle("POST", "/v1/reward", "{").status == 400);
    CHECK(service.handle("POST", "/v1/reward", "{\"problem_id\": \"x\"}").status == 400);
    CHECK(service.handle("POST", "/v1/reward",
                         Json({{"problem_id", "ghost"}, {"candidate", to_json(right)}}).dump())
              .status == 404);
    CHECK(service.handle("POST", "/v1/episodes/ep-9/query", "{\"query\": \"q\"}").status == 404);
    CHECK(service.handle("DELETE", "/v1/health", "").status == 404);
    CHECK(service.handle("POST", "/v1/episodes",
                         Json({{"problem_id", lp.id}, {"omissions", 7}}).dump())
              .status == 400);
  }

  SUBCASE("problem fetch reveals only the description") {
    const ServiceResponse r = service.handle("GET", "/v1/problems/" + lp.id, "");
    CHECK(r.status == 200);
    const Json j = Json::parse(r.body);
    CHECK(j["description"] == render_description(lp).text);
    CHECK_FALSE(j.contains("formulation"));
    CHECK_FALSE(j.contains("solution"));
  }

  SUBCASE("episode lifecycle") {
    const Json created = Json::parse(
        service.handle("POST", "/v1/episodes",
                       Json({{"problem_id", lp.id}, {"omissions", 1}, {"seed", 3}}).dump())
            .body);
    const std::string id = created["episode_id"];
    const Episode reference = Episode::reset(lp, 1, 3);
    CHECK(created["description"] == reference.incomplete().text);
    CHECK_FALSE(created.contains("ledger"));

    const std::string base = "/v1/episodes/" + id;
    const std::string element = omit(lp, 1, 3).second.omissions.at(0).element;
    const Json q = {{"query", targeted_query(lp, element)}};
    CHECK(service.handle("POST", base + "/query", q.dump()).status == 200);
    CHECK(service.handle("POST", base + "/query", q.dump()).status == 409);
    const ServiceResponse commit = service.handle(
        "POST", base + "/commit", Json({{"candidate", to_json(right)}}).dump());
    CHECK(commit.status == 200);
    const Json result = Json::parse(commit.body);
    CHECK(result["r_i"] == doctest::Approx(0.2));
    CHECK(result["r_o"] == doctest::Approx(1.2));
    CHECK(service.handle("POST", base + "/commit", Json({{"candidate", to_json(right)}}).dump())
              .status == 409);
    CHECK(Json::parse(service.handle("GET", base, "").body)["terminal"] == true);
  }

  SUBCASE("concurrent episodes on one problem stay independent") {
    constexpr int kEpisodes = 16;
    std::vector<std::string> ids(kEpisodes);
    std::vector<double> r_i(kEpisodes, -1.0);
    std::vector<int> queried(kEpisodes, -1);
    std::vector<std::thread> threads;
    for (int t = 0; t < kEpisodes; ++t) {
      threads.emplace_back([&, t] {
        const Json created = Json::parse(
            service.handle("POST", "/v1/episodes",
                           Json({{"problem_id", lp.id}, {"seed", t}}).dump())
                .body);
        ids[static_cast<std::size_t>(t)] = created["episode_id"];
        const std::string base = "/v1/episodes/" + ids[static_cast<std::size_t>(t)];
        if (t % 2 == 0) {
          service.handle("POST", base + "/query",
                         Json({{"query", "<query>unrelated weather?</query>"}}).dump());
        }
        const Json result = Json::parse(
            service.handle("POST", base + "/commit", Json({{"candidate", to_json(right)}}).dump())
                .body);
        r_i[static_cast<std::size_t>(t)] = result["r_i"];
        queried[static_cast<std::size_t>(t)] = !result["trajectory"]["query"].is_null();
      });
    }
    for (auto& th : threads) th.join();
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == kEpisodes);
    for (double r : r_i) CHECK(r == 0.0);
    for (int t = 0; t < kEpisodes; ++t) CHECK(queried[static_cast<std::size_t>(t)] == (t % 2 == 0));
  }
}

TEST_CASE("episodes expire after the TTL") {
  auto now = Service::Clock::now();
  HarnessConfig config;
  config.episode_ttl_seconds = 60;
  Service service({farming_lp_world()}, config, [&] { return now; });
  const Json created = Json::parse(
      service.handle("POST", "/v1/episodes",
                     Json({{"problem_id", farming_lp_world().id}}).dump())
          .body);
  CHECK(service.episode_count() == 1);
  now += std::chrono::seconds(30);
  CHECK(service.handle("GET", "/v1/episodes/" + created["episode_id"].get<std::string>(), "")
            .status == 200);
  now += std::chrono::seconds(61);
  CHECK(service.episode_count() == 0);
  CHECK(service.handle("GET", "/v1/episodes/" + created["episode_id"].get<std::string>(), "")
            .status == 404);
}

TEST_CASE("service over HTTP") {
  Service service(worked_examples(), HarnessConfig{});
  const int port = service.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread server([&] { service.listen(); });
  while (!service.running()) std::this_thread::sleep_for(std::chrono::milliseconds(5));

  httplib::Client client("127.0.0.1", port);
  const auto& lp = farming_lp_world();
  const Candidate right = Candidate::from_formulation(lp.formulation);
  auto health = client.Get("/v1/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  auto reward = client.Post("/v1/reward",
                            Json({{"problem_id", lp.id}, {"candidate", to_json(right)}}).dump(),
                            "application/json");
  REQUIRE(reward);
  CHECK(reward->status == 200);
  CHECK(reward->body == to_json(evaluate_candidate(right, lp)).dump());
  auto missing = client.Get("/v1/problems/ghost");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  service.stop();
  server.join();
  CHECK_FALSE(service.running());
}
