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

// Optional LLM-backed description generation and checking. The offline
// renderer and verifier in description.h remain the default path.

#ifndef AUTOFORM_BACKTRANSLATE_LLM_CLIENT_H_
#define AUTOFORM_BACKTRANSLATE_LLM_CLIENT_H_

#include <functional>
#include <memory>
#include <string>

#include "autoform/backtranslate/description.h"
#include "autoform/core/world.h"

namespace autoform {

class LlmClient {
 public:
  virtual ~LlmClient() = default;
  // Text completion for `prompt`. Throws kTransport on delivery failure.
  virtual std::string complete(const std::string& prompt) = 0;
  // Endpoint or implementation name, used in error messages.
  virtual std::string identity() const = 0;
};

// POSTs {"prompt": ...} as JSON and reads the "text" field of the reply.
// Plain http:// endpoints only.
class HttpLlmClient : public LlmClient {
 public:
  static constexpr const char* kEndpointVar = "AUTOFORM_LLM_ENDPOINT";
  static constexpr const char* kTokenVar = "AUTOFORM_LLM_TOKEN";

  // Throws kInvalidArgument for a malformed or non-http URL.
  explicit HttpLlmClient(std::string endpoint, std::string token = {},
                         int timeout_seconds = 60);

  // Reads kEndpointVar and kTokenVar; throws kInvalidArgument when the
  // endpoint variable is unset.
  static std::unique_ptr<HttpLlmClient> from_env();

  std::string complete(const std::string& prompt) override;
  std::string identity() const override { return endpoint_; }

 private:
  std::string endpoint_;
  std::string token_;
  std::string host_;
  int port_ = 80;
  std::string path_;
  int timeout_seconds_;
};

// Wraps a callable; for tests and scripted pipelines.
class MockLlmClient : public LlmClient {
 public:
  using Responder = std::function<std::string(const std::string&)>;

  explicit MockLlmClient(Responder responder, std::string name = "mock")
      : responder_(std::move(responder)), name_(std::move(name)) {}

  std::string complete(const std::string& prompt) override {
    ++calls_;
    return responder_(prompt);
  }
  std::string identity() const override { return name_; }
  int calls() const { return calls_; }

 private:
  Responder responder_;
  std::string name_;
  int calls_ = 0;
};

inline constexpr int kDescriptionRetryCap = 5;

// Prompt sent by generate_description_external.
std::string description_prompt(const WorldDescriptor& w);

// One generation call. The result has an empty manifest; run
// verify_description on it.
Description generate_description_external(const WorldDescriptor& w, LlmClient& client);

struct VerifiedDescription {
  Description description;
  FiveCheckReport report;
  int attempts = 0;
};

// Generates and verifies until a description passes, at most `retry_cap`
// attempts. Throws kRetryCapExceeded with the last failing report.
VerifiedDescription generate_verified_external(const WorldDescriptor& w, LlmClient& client,
                                               int retry_cap = kDescriptionRetryCap);

// Delegates the five checks to `client`. The reply must be a JSON object
// with the five boolean fields of FiveCheckReport; anything else is kParse.
FiveCheckReport verify_description_llm(const Description& d, const WorldDescriptor& w,
                                       LlmClient& client);

}  // namespace autoform

#endif  // AUTOFORM_BACKTRANSLATE_LLM_CLIENT_H_
