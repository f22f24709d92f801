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

// HTTP service: reward scoring, problem fetch and multi-turn episodes.
//
//   POST /v1/reward                   {"problem_id" | "world_descriptor", "candidate"}
//   GET  /v1/problems/{id}
//   POST /v1/episodes                 {"problem_id", "omissions"?, "seed"?}
//   GET  /v1/episodes/{id}
//   POST /v1/episodes/{id}/query      {"query"}
//   POST /v1/episodes/{id}/commit     {"candidate"}
//   GET  /v1/health
//
// Errors: 400 malformed body, 404 unknown id, 409 out of turn or terminal.

#ifndef AUTOFORM_HARNESS_SERVICE_H_
#define AUTOFORM_HARNESS_SERVICE_H_

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "autoform/core/world.h"
#include "autoform/harness/config.h"

namespace autoform {

struct ServiceResponse {
  int status = 200;
  std::string body;
};

class Service {
 public:
  using Clock = std::chrono::steady_clock;

  Service(std::vector<WorldDescriptor> dataset, HarnessConfig config,
          std::function<Clock::time_point()> clock = Clock::now);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Routes one request without the network layer.
  ServiceResponse handle(std::string_view method, std::string_view path, std::string_view body);

  // Binds host:port (0 picks a free port) and returns the bound port.
  // Throws kTransport on failure.
  int bind(const std::string& host, int port);
  // Blocks until stop(); in-flight requests finish first.
  void listen();
  void stop();
  bool running() const;

  // Live episodes after TTL eviction.
  std::size_t episode_count();

 private:
  struct EpisodeEntry;

  ServiceResponse reward(std::string_view body);
  ServiceResponse problem(const std::string& id);
  ServiceResponse create_episode(std::string_view body);
  ServiceResponse episode_state(const std::string& id);
  ServiceResponse query(const std::string& id, std::string_view body);
  ServiceResponse commit(const std::string& id, std::string_view body);
  ServiceResponse health();

  std::shared_ptr<EpisodeEntry> find_episode(const std::string& id);
  void evict_expired();

  std::vector<WorldDescriptor> dataset_;
  std::map<std::string, const WorldDescriptor*> by_id_;
  HarnessConfig config_;
  std::function<Clock::time_point()> clock_;

  std::mutex store_mutex_;
  std::map<std::string, std::shared_ptr<EpisodeEntry>> episodes_;
  unsigned long long next_episode_ = 1;

  struct Server;
  std::unique_ptr<Server> server_;
};

}  // namespace autoform

#endif  // AUTOFORM_HARNESS_SERVICE_H_
