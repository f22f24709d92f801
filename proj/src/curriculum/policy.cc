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

#include "autoform/curriculum/policy.h"

#include <fstream>
#include <string>

#include "autoform/common/error.h"
#include "autoform/core/serialize.h"

namespace autoform {

Candidate ScriptedFailPolicy::act(const PolicyContext&) {
  return Candidate::unparsed("I cannot formulate this problem.", "scripted failure");
}

ScriptedOraclePolicy::ScriptedOraclePolicy(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "oracle policy probability must lie in [0, 1]");
  }
}

Candidate ScriptedOraclePolicy::act(const PolicyContext& ctx) {
  if (ctx.rng.bernoulli(p_)) return Candidate::from_formulation(ctx.world.formulation);
  return Candidate::unparsed("I cannot formulate this problem.", "scripted miss");
}

std::string ScriptedOraclePolicy::name() const {
  char buf[48];
  std::snprintf(buf, sizeof buf, "oracle:%g", p_);
  return buf;
}

ReplayPolicy ReplayPolicy::from_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open candidates file '" + path + "'");
  std::map<std::string, std::vector<Candidate>> samples;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = path + ":" + std::to_string(n);
    const Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw Error(ErrorCode::kParse, where + ": not a JSON object");
    }
    auto id = j.find("problem_id");
    auto list = j.find("samples");
    if (id == j.end() || !id->is_string() || list == j.end() || !list->is_array()) {
      throw Error(ErrorCode::kParse, where + ": expected \"problem_id\" and \"samples\"");
    }
    auto& out = samples[id->get<std::string>()];
    for (const auto& s : *list) {
      try {
        out.push_back(candidate_from_json(s));
      } catch (const Error& e) {
        throw Error(ErrorCode::kParse, where + ": " + e.what());
      }
    }
  }
  return ReplayPolicy(std::move(samples));
}

Candidate ReplayPolicy::act(const PolicyContext& ctx) {
  auto it = samples_.find(ctx.world.id);
  if (it == samples_.end() || it->second.empty()) {
    return Candidate::unparsed("", "no replay samples for '" + ctx.world.id + "'");
  }
  return it->second[static_cast<std::size_t>(ctx.rollout) % it->second.size()];
}

Candidate parse_model_output(const std::string& text) {
  const auto open = text.find('{');
  const auto close = text.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    return Candidate::unparsed(text, "no JSON object in the output");
  }
  const Json j = Json::parse(text.substr(open, close - open + 1), nullptr, false);
  if (j.is_discarded()) return Candidate::unparsed(text, "JSON object does not parse");
  try {
    Candidate c = j.contains("kind") ? candidate_from_json(j)
                                     : Candidate::from_formulation(formulation_from_json(j));
    c.raw_text = text;
    return c;
  } catch (const Error& e) {
    return Candidate::unparsed(text, e.what());
  } catch (const Json::exception& e) {
    return Candidate::unparsed(text, e.what());
  }
}

Candidate ExternalPolicy::act(const PolicyContext& ctx) {
  return parse_model_output(client_->complete(ctx.prompt));
}

std::unique_ptr<Policy> make_policy(const std::string& spec) {
  if (spec == "fail") return std::make_unique<ScriptedFailPolicy>();
  if (spec.rfind("oracle:", 0) == 0) {
    double p = 0.0;
    try {
      std::size_t used = 0;
      p = std::stod(spec.substr(7), &used);
      if (used != spec.size() - 7) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "bad oracle probability in '" + spec + "'");
    }
    return std::make_unique<ScriptedOraclePolicy>(p);
  }
  if (spec.rfind("replay:", 0) == 0) {
    return std::make_unique<ReplayPolicy>(ReplayPolicy::from_jsonl(spec.substr(7)));
  }
  if (spec == "external") {
    return std::make_unique<ExternalPolicy>(std::shared_ptr<LlmClient>(HttpLlmClient::from_env()));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown policy '" + spec + "'");
}

}  // namespace autoform
