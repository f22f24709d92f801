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

#include "autoform/harness/service.h"

#include <cstdio>
#include <optional>
#include <regex>

#include "httplib.h"

#include "autoform/backtranslate/description.h"
#include "autoform/common/error.h"
#include "autoform/core/serialize.h"
#include "autoform/multiturn/episode.h"
#include "autoform/reward/candidate.h"
#include "autoform/reward/reward.h"

namespace autoform {
namespace {

ServiceResponse json_response(int status, const Json& j) { return {status, j.dump()}; }

ServiceResponse error_response(int status, std::string_view code, const std::string& message) {
  return json_response(status, {{"error", std::string(code)}, {"message", message}});
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInsufficientElements:
    case ErrorCode::kInvalidFormulation:
    case ErrorCode::kMalformedTrajectory:
      return 400;
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kOutOfTurn:
    case ErrorCode::kAlreadyTerminal:
      return 409;
    default:
      return 500;
  }
}

Json parse_body(std::string_view body) {
  Json j = Json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::kParse, "request body must be a JSON object");
  }
  return j;
}

const Json& require(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::kParse, std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

struct Service::EpisodeEntry {
  std::mutex mutex;
  std::optional<Episode> episode;
  Clock::time_point touched;
};

struct Service::Server {
  httplib::Server http;
};

Service::Service(std::vector<WorldDescriptor> dataset, HarnessConfig config,
                 std::function<Clock::time_point()> clock)
    : dataset_(std::move(dataset)), config_(std::move(config)), clock_(std::move(clock)) {
  for (const auto& w : dataset_) by_id_[w.id] = &w;
}

Service::~Service() { stop(); }

ServiceResponse Service::handle(std::string_view method, std::string_view path,
                                std::string_view body) {
  static const std::regex kProblem("^/v1/problems/([^/]+)$");
  static const std::regex kEpisode("^/v1/episodes/([^/]+)$");
  static const std::regex kQuery("^/v1/episodes/([^/]+)/query$");
  static const std::regex kCommit("^/v1/episodes/([^/]+)/commit$");
  const std::string p(path);
  std::smatch m;
  try {
    if (p == "/v1/health" && method == "GET") return health();
    if (p == "/v1/reward" && method == "POST") return reward(body);
    if (p == "/v1/episodes" && method == "POST") return create_episode(body);
    if (std::regex_match(p, m, kProblem) && method == "GET") return problem(m[1]);
    if (std::regex_match(p, m, kEpisode) && method == "GET") return episode_state(m[1]);
    if (std::regex_match(p, m, kQuery) && method == "POST") return query(m[1], body);
    if (std::regex_match(p, m, kCommit) && method == "POST") return commit(m[1], body);
    return error_response(404, error_code_name(ErrorCode::kNotFound),
                          std::string(method) + " " + p + " is not a route");
  } catch (const Error& e) {
    return error_response(status_for(e.code()), error_code_name(e.code()), e.what());
  } catch (const Json::exception& e) {
    return error_response(400, error_code_name(ErrorCode::kParse), e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

ServiceResponse Service::reward(std::string_view body) {
  const Json j = parse_body(body);
  const Candidate candidate = candidate_from_json(require(j, "candidate"));
  if (auto it = j.find("world_descriptor"); it != j.end()) {
    const WorldDescriptor w = world_from_json(*it);
    return {200, to_json(evaluate_candidate(candidate, w, config_.reward)).dump()};
  }
  const std::string id = require(j, "problem_id").get<std::string>();
  auto w = by_id_.find(id);
  if (w == by_id_.end()) throw Error(ErrorCode::kNotFound, "unknown problem '" + id + "'");
  return {200, to_json(evaluate_candidate(candidate, *w->second, config_.reward)).dump()};
}

ServiceResponse Service::problem(const std::string& id) {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) throw Error(ErrorCode::kNotFound, "unknown problem '" + id + "'");
  const WorldDescriptor& w = *it->second;
  return json_response(200, {{"problem_id", w.id},
                             {"category", std::string(to_string(w.formulation.category))},
                             {"description", render_description(w).text}});
}

ServiceResponse Service::create_episode(std::string_view body) {
  const Json j = parse_body(body);
  const std::string id = require(j, "problem_id").get<std::string>();
  const int omissions = j.value("omissions", 1);
  const std::uint64_t seed = j.value("seed", std::uint64_t{0});
  auto it = by_id_.find(id);
  if (it == by_id_.end()) throw Error(ErrorCode::kNotFound, "unknown problem '" + id + "'");
  auto entry = std::make_shared<EpisodeEntry>();
  entry->episode.emplace(Episode::reset(*it->second, omissions, seed, config_.reward));
  entry->touched = clock_();
  const std::string text = entry->episode->incomplete().text;
  std::string episode_id;
  {
    std::lock_guard lock(store_mutex_);
    char buf[32];
    std::snprintf(buf, sizeof buf, "ep-%06llx", next_episode_++);
    episode_id = buf;
    episodes_[episode_id] = entry;
  }
  evict_expired();
  return json_response(200, {{"episode_id", episode_id},
                             {"problem_id", id},
                             {"turn", 1},
                             {"description", text}});
}

ServiceResponse Service::episode_state(const std::string& id) {
  auto entry = find_episode(id);
  std::lock_guard lock(entry->mutex);
  const Episode& ep = *entry->episode;
  return json_response(200, {{"episode_id", id},
                             {"problem_id", ep.world_id()},
                             {"turn", ep.turn()},
                             {"terminal", ep.terminal()}});
}

ServiceResponse Service::query(const std::string& id, std::string_view body) {
  const Json j = parse_body(body);
  const Json& q = require(j, "query");
  if (!q.is_string()) throw Error(ErrorCode::kParse, "'query' must be a string");
  auto entry = find_episode(id);
  std::lock_guard lock(entry->mutex);
  entry->touched = clock_();
  const std::string answer = entry->episode->step_query(q.get<std::string>());
  return json_response(200, {{"episode_id", id}, {"answer", answer}, {"turn", 2}});
}

ServiceResponse Service::commit(const std::string& id, std::string_view body) {
  const Json j = parse_body(body);
  const Candidate candidate = candidate_from_json(require(j, "candidate"));
  auto entry = find_episode(id);
  std::lock_guard lock(entry->mutex);
  entry->touched = clock_();
  Json out = to_json(entry->episode->step_commit(candidate));
  out["episode_id"] = id;
  return json_response(200, out);
}

ServiceResponse Service::health() {
  return json_response(200, {{"status", "ok"},
                             {"problems", dataset_.size()},
                             {"episodes", episode_count()}});
}

std::shared_ptr<Service::EpisodeEntry> Service::find_episode(const std::string& id) {
  evict_expired();
  std::lock_guard lock(store_mutex_);
  auto it = episodes_.find(id);
  if (it == episodes_.end()) throw Error(ErrorCode::kNotFound, "unknown episode '" + id + "'");
  return it->second;
}

void Service::evict_expired() {
  const auto cutoff = clock_() - std::chrono::seconds(config_.episode_ttl_seconds);
  std::lock_guard lock(store_mutex_);
  for (auto it = episodes_.begin(); it != episodes_.end();) {
    bool expired = false;
    {
      std::unique_lock entry_lock(it->second->mutex, std::try_to_lock);
      expired = entry_lock.owns_lock() && it->second->touched < cutoff;
    }
    it = expired ? episodes_.erase(it) : std::next(it);
  }
}

std::size_t Service::episode_count() {
  evict_expired();
  std::lock_guard lock(store_mutex_);
  return episodes_.size();
}

int Service::bind(const std::string& host, int port) {
  if (!server_) {
    server_ = std::make_unique<Server>();
    auto& http = server_->http;
    const int threads = std::max(1, config_.threads);
    http.new_task_queue = [threads] { return new httplib::ThreadPool(threads); };
    auto route = [this](const httplib::Request& req, httplib::Response& res) {
      const ServiceResponse r = handle(req.method, req.path, req.body);
      res.status = r.status;
      res.set_content(r.body, "application/json");
    };
    http.Get(".*", route);
    http.Post(".*", route);
  }
  const int bound =
      port == 0 ? server_->http.bind_to_any_port(host) : (server_->http.bind_to_port(host, port)
                                                               ? port
                                                               : -1);
  if (bound < 0) {
    throw Error(ErrorCode::kTransport,
                "cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void Service::listen() {
  if (!server_) throw Error(ErrorCode::kInvalidArgument, "bind() before listen()");
  server_->http.listen_after_bind();
}

void Service::stop() {
  if (server_) server_->http.stop();
}

bool Service::running() const { return server_ && server_->http.is_running(); }

}  // namespace autoform
