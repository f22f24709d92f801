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

// Policies: anything that turns a prompt into a Candidate. Scripted
// implementations stand in for a trained model.

#ifndef AUTOFORM_CURRICULUM_POLICY_H_
#define AUTOFORM_CURRICULUM_POLICY_H_

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "autoform/backtranslate/llm_client.h"
#include "autoform/common/rng.h"
#include "autoform/core/world.h"
#include "autoform/reward/candidate.h"

namespace autoform {

struct PolicyContext {
  const WorldDescriptor& world;  // scripted policies may peek; models must not
  const std::string& prompt;
  int rollout = 0;  // index within the k rollouts of this problem
  Rng& rng;         // per-rollout substream
};

class Policy {
 public:
  virtual ~Policy() = default;
  virtual Candidate act(const PolicyContext& ctx) = 0;
  virtual std::string name() const = 0;
  // True when act() may run concurrently on different contexts.
  virtual bool thread_safe() const { return true; }
};

// Always emits an unparsable candidate.
class ScriptedFailPolicy : public Policy {
 public:
  Candidate act(const PolicyContext& ctx) override;
  std::string name() const override { return "fail"; }
};

// Emits the ground-truth formulation with probability p per call.
class ScriptedOraclePolicy : public Policy {
 public:
  explicit ScriptedOraclePolicy(double p);
  Candidate act(const PolicyContext& ctx) override;
  std::string name() const override;

 private:
  double p_;
};

// Fixed samples per problem id; rollout r gets sample r modulo the count.
// Unknown problems get an unparsable candidate.
class ReplayPolicy : public Policy {
 public:
  explicit ReplayPolicy(std::map<std::string, std::vector<Candidate>> samples)
      : samples_(std::move(samples)) {}
  // Reads candidate JSONL lines {"problem_id", "samples": [...]}.
  static ReplayPolicy from_jsonl(const std::string& path);

  Candidate act(const PolicyContext& ctx) override;
  std::string name() const override { return "replay"; }

 private:
  std::map<std::string, std::vector<Candidate>> samples_;
};

// Sends the prompt to an LLM and parses the first JSON object in the reply
// as a formulation (or a candidate envelope).
class ExternalPolicy : public Policy {
 public:
  explicit ExternalPolicy(std::shared_ptr<LlmClient> client) : client_(std::move(client)) {}
  Candidate act(const PolicyContext& ctx) override;
  std::string name() const override { return "external:" + client_->identity(); }
  bool thread_safe() const override { return false; }

 private:
  std::shared_ptr<LlmClient> client_;
};

class FunctionPolicy : public Policy {
 public:
  using Fn = std::function<Candidate(const PolicyContext&)>;
  FunctionPolicy(Fn fn, std::string name) : fn_(std::move(fn)), name_(std::move(name)) {}
  Candidate act(const PolicyContext& ctx) override { return fn_(ctx); }
  std::string name() const override { return name_; }

 private:
  Fn fn_;
  std::string name_;
};

// Candidate parsed out of free-form model output.
Candidate parse_model_output(const std::string& text);

// "fail", "oracle:<p>", "replay:<path>" or "external" (client from the
// environment).
std::unique_ptr<Policy> make_policy(const std::string& spec);

}  // namespace autoform

#endif  // AUTOFORM_CURRICULUM_POLICY_H_
