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

#include "autoform/harness/config.h"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "autoform/common/error.h"

namespace autoform {
namespace {

using Setter = std::function<void(HarnessConfig&, const std::string&)>;

double to_double(const std::string& v) {
  std::size_t used = 0;
  const double d = std::stod(v, &used);
  if (used != v.size()) throw std::invalid_argument("trailing characters");
  return d;
}

int to_int(const std::string& v) {
  std::size_t used = 0;
  const int i = std::stoi(v, &used);
  if (used != v.size()) throw std::invalid_argument("trailing characters");
  return i;
}

const std::vector<std::pair<std::string, Setter>>& setters() {
  static const std::vector<std::pair<std::string, Setter>> s = {
      {"reward.alpha_exec", [](HarnessConfig& c, const std::string& v) { c.reward.alpha_exec = to_double(v); }},
      {"reward.alpha_feas", [](HarnessConfig& c, const std::string& v) { c.reward.alpha_feas = to_double(v); }},
      {"reward.alpha_opt", [](HarnessConfig& c, const std::string& v) { c.reward.alpha_opt = to_double(v); }},
      {"reward.feasibility_tolerance", [](HarnessConfig& c, const std::string& v) { c.reward.feasibility_tolerance = to_double(v); }},
      {"reward.lp_decimals", [](HarnessConfig& c, const std::string& v) { c.reward.lp_decimals = to_int(v); }},
      {"reward.milp_decimals", [](HarnessConfig& c, const std::string& v) { c.reward.milp_decimals = to_int(v); }},
      {"reward.pump_cost_rel_tol", [](HarnessConfig& c, const std::string& v) { c.reward.pump_cost_rel_tol = to_double(v); }},
      {"reward.pump_power_rel_tol", [](HarnessConfig& c, const std::string& v) { c.reward.pump_power_rel_tol = to_double(v); }},
      {"reward.query_reward", [](HarnessConfig& c, const std::string& v) { c.reward.query_reward = to_double(v); }},
      {"reward.query_open_tag", [](HarnessConfig& c, const std::string& v) { c.reward.query_open_tag = v; }},
      {"reward.query_close_tag", [](HarnessConfig& c, const std::string& v) { c.reward.query_close_tag = v; }},
      {"curriculum.tau", [](HarnessConfig& c, const std::string& v) { c.tau = to_double(v); }},
      {"curriculum.group", [](HarnessConfig& c, const std::string& v) { c.group = to_int(v); }},
      {"rl.alpha_mix", [](HarnessConfig& c, const std::string& v) { c.alpha_mix = to_double(v); }},
      {"rl.clip", [](HarnessConfig& c, const std::string& v) { c.clip = to_double(v); }},
      {"rl.surrogate", [](HarnessConfig& c, const std::string& v) { c.surrogate = parse_surrogate_variant(v); }},
      {"service.episode_ttl_seconds", [](HarnessConfig& c, const std::string& v) { c.episode_ttl_seconds = to_int(v); }},
      {"threads", [](HarnessConfig& c, const std::string& v) { c.threads = to_int(v); }},
  };
  return s;
}

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

}  // namespace

std::vector<std::string> config_keys() {
  std::vector<std::string> out;
  for (const auto& [k, _] : setters()) out.push_back(k);
  return out;
}

HarnessConfig parse_config(std::string_view text, const std::string& source) {
  HarnessConfig c;
  std::istringstream in{std::string(text)};
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    const std::string where = source + ":" + std::to_string(n);
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kParse, where + ": expected key = value");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    const Setter* setter = nullptr;
    for (const auto& [k, s] : setters()) {
      if (k == key) setter = &s;
    }
    if (!setter) throw Error(ErrorCode::kParse, where + ": unknown key '" + key + "'");
    try {
      (*setter)(c, value);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, where + ": " + e.what());
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, where + ": bad value '" + value + "' for " + key);
    }
  }
  if (!(c.tau >= 0.0 && c.tau <= 1.0) || c.group < 1 || c.alpha_mix < 0.0 ||
      !(c.clip > 0.0 && c.clip < 1.0) || c.episode_ttl_seconds < 1 || c.threads < 1) {
    throw Error(ErrorCode::kParse, source + ": value out of range");
  }
  return c;
}

HarnessConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

Json to_json(const HarnessConfig& c) {
  return {{"reward.alpha_exec", c.reward.alpha_exec},
          {"reward.alpha_feas", c.reward.alpha_feas},
          {"reward.alpha_opt", c.reward.alpha_opt},
          {"reward.feasibility_tolerance", c.reward.feasibility_tolerance},
          {"reward.lp_decimals", c.reward.lp_decimals},
          {"reward.milp_decimals", c.reward.milp_decimals},
          {"reward.pump_cost_rel_tol", c.reward.pump_cost_rel_tol},
          {"reward.pump_power_rel_tol", c.reward.pump_power_rel_tol},
          {"reward.query_reward", c.reward.query_reward},
          {"reward.query_open_tag", c.reward.query_open_tag},
          {"reward.query_close_tag", c.reward.query_close_tag},
          {"curriculum.tau", c.tau},
          {"curriculum.group", c.group},
          {"rl.alpha_mix", c.alpha_mix},
          {"rl.clip", c.clip},
          {"rl.surrogate", std::string(to_string(c.surrogate))},
          {"service.episode_ttl_seconds", c.episode_ttl_seconds},
          {"threads", c.threads}};
}

}  // namespace autoform
