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

#include "autoform/backtranslate/llm_client.h"

#include <cstdlib>
#include <string>

#include <httplib.h>

#include "autoform/common/error.h"
#include "autoform/core/serialize.h"

namespace autoform {

HttpLlmClient::HttpLlmClient(std::string endpoint, std::string token, int timeout_seconds)
    : endpoint_(std::move(endpoint)), token_(std::move(token)),
      timeout_seconds_(timeout_seconds) {
  const std::string scheme = "http://";
  if (endpoint_.rfind(scheme, 0) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "LLM endpoint must be an http:// URL: '" + endpoint_ + "'");
  }
  std::string rest = endpoint_.substr(scheme.size());
  const auto slash = rest.find('/');
  path_ = slash == std::string::npos ? "/" : rest.substr(slash);
  std::string authority = rest.substr(0, slash);
  if (const auto colon = authority.rfind(':'); colon != std::string::npos) {
    try {
      port_ = std::stoi(authority.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "bad port in LLM endpoint '" + endpoint_ + "'");
    }
    authority = authority.substr(0, colon);
  }
  host_ = authority;
  if (host_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "LLM endpoint has no host: '" + endpoint_ + "'");
  }
}

std::unique_ptr<HttpLlmClient> HttpLlmClient::from_env() {
  const char* endpoint = std::getenv(kEndpointVar);
  if (endpoint == nullptr || *endpoint == '\0') {
    throw Error(ErrorCode::kInvalidArgument, std::string(kEndpointVar) + " is not set");
  }
  const char* token = std::getenv(kTokenVar);
  return std::make_unique<HttpLlmClient>(endpoint, token ? token : "");
}

std::string HttpLlmClient::complete(const std::string& prompt) {
  httplib::Client client(host_, port_);
  client.set_connection_timeout(timeout_seconds_, 0);
  client.set_read_timeout(timeout_seconds_, 0);
  httplib::Headers headers;
  if (!token_.empty()) headers.emplace("Authorization", "Bearer " + token_);
  const std::string body = Json{{"prompt", prompt}}.dump();
  auto res = client.Post(path_, headers, body, "application/json");
  if (!res) {
    throw Error(ErrorCode::kTransport,
                "LLM endpoint " + endpoint_ + ": " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw Error(ErrorCode::kTransport, "LLM endpoint " + endpoint_ + " returned HTTP " +
                                           std::to_string(res->status));
  }
  const Json reply = Json::parse(res->body, nullptr, false);
  if (!reply.is_object() || !reply.contains("text") || !reply["text"].is_string()) {
    throw Error(ErrorCode::kTransport,
                "LLM endpoint " + endpoint_ + " replied without a string \"text\" field");
  }
  return reply["text"].get<std::string>();
}

std::string description_prompt(const WorldDescriptor& w) {
  std::string p =
      "Write a realistic business problem description for the optimization model below.\n"
      "Use the language of the scenario instead of mathematical notation. State every\n"
      "numeric value exactly, describe every constraint, state whether the goal is to\n"
      "maximize or minimize and what each objective coefficient means, mention every\n"
      "decision variable by its name, and keep the story self-consistent.\n";
  if (!w.metadata.scenario.empty()) p += "Scenario: " + w.metadata.scenario + "\n";
  p += "Model: " + to_json(w.formulation).dump() + "\n";
  p += "Labels: " + to_json(w.metadata).dump() + "\n";
  p += "Reply with the description text only.";
  return p;
}

Description generate_description_external(const WorldDescriptor& w, LlmClient& client) {
  Description d;
  d.text = client.complete(description_prompt(w));
  d.scenario = w.metadata.scenario;
  return d;
}

VerifiedDescription generate_verified_external(const WorldDescriptor& w, LlmClient& client,
                                               int retry_cap) {
  if (retry_cap < 1) throw Error(ErrorCode::kInvalidArgument, "retry cap must be >= 1");
  VerifiedDescription out;
  for (out.attempts = 1; out.attempts <= retry_cap; ++out.attempts) {
    out.description = generate_description_external(w, client);
    out.report = verify_description(out.description, w);
    if (out.report.pass()) return out;
  }
  throw Error(ErrorCode::kRetryCapExceeded,
              "no description from " + client.identity() + " passed verification in " +
                  std::to_string(retry_cap) + " attempts; last report " +
                  to_json(out.report).dump());
}

FiveCheckReport verify_description_llm(const Description& d, const WorldDescriptor& w,
                                       LlmClient& client) {
  std::string prompt =
      "Check the problem description against the optimization model. Answer with a JSON\n"
      "object holding the boolean fields data_values_present, constraints_present,\n"
      "objective_correct, parameters_described and self_consistent, and an optional\n"
      "object \"failures\" mapping check numbers 1-5 to lists of problems.\n";
  prompt += "Model: " + to_json(w.formulation).dump() + "\n";
  prompt += "Description: " + d.text;
  const std::string reply = client.complete(prompt);
  const Json j = Json::parse(reply, nullptr, false);
  const char* keys[] = {"data_values_present", "constraints_present", "objective_correct",
                        "parameters_described", "self_consistent"};
  if (!j.is_object()) {
    throw Error(ErrorCode::kParse, client.identity() + " returned a non-JSON check reply");
  }
  bool flags[5];
  for (int i = 0; i < 5; ++i) {
    auto it = j.find(keys[i]);
    if (it == j.end() || !it->is_boolean()) {
      throw Error(ErrorCode::kParse,
                  client.identity() + " check reply lacks boolean '" + keys[i] + "'");
    }
    flags[i] = it->get<bool>();
  }
  FiveCheckReport r;
  r.data_values_present = flags[0];
  r.constraints_present = flags[1];
  r.objective_correct = flags[2];
  r.parameters_described = flags[3];
  r.self_consistent = flags[4];
  if (auto it = j.find("failures"); it != j.end() && it->is_object()) {
    for (auto f = it->begin(); f != it->end(); ++f) {
      int n = 0;
      try {
        n = std::stoi(f.key());
      } catch (const std::exception&) {
        continue;
      }
      if (n < 1 || n > 5 || !f->is_array()) continue;
      for (const auto& msg : *f) {
        if (msg.is_string()) r.failures[n].push_back(msg.get<std::string>());
      }
    }
  }
  return r;
}

}  // namespace autoform
