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

#include "autoform/reward/candidate.h"

#include <string>

#include "autoform/common/error.h"

namespace autoform {

std::string_view to_string(CandidateKind k) {
  return k == CandidateKind::kBundle ? "bundle" : "formulation";
}

Candidate Candidate::from_formulation(FormulationIR ir) {
  Candidate c;
  c.kind = CandidateKind::kFormulation;
  c.formulation = std::move(ir);
  return c;
}

Candidate Candidate::from_bundle(Assignment a, std::optional<double> objective) {
  Candidate c;
  c.kind = CandidateKind::kBundle;
  c.assignment = std::move(a);
  c.claimed_objective = objective;
  return c;
}

Candidate Candidate::unparsed(std::string raw_text, std::string why) {
  Candidate c;
  c.kind = CandidateKind::kFormulation;
  c.raw_text = std::move(raw_text);
  c.parse_error = std::move(why);
  return c;
}

Json to_json(const Candidate& c) {
  Json j = {{"kind", std::string(to_string(c.kind))}};
  if (c.kind == CandidateKind::kFormulation) {
    j["formulation"] = c.formulation ? to_json(*c.formulation) : Json(nullptr);
    if (!c.parse_error.empty()) j["parse_error"] = c.parse_error;
  } else {
    j["assignment"] = assignment_to_json(c.assignment);
    j["objective"] = c.claimed_objective ? Json(*c.claimed_objective) : Json(nullptr);
  }
  if (!c.raw_text.empty()) j["raw_text"] = c.raw_text;
  return j;
}

Candidate candidate_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "candidate: expected an object");
  auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string()) {
    throw Error(ErrorCode::kParse, "candidate: missing string field 'kind'");
  }
  const std::string kind = kind_it->get<std::string>();
  std::string raw;
  if (auto it = j.find("raw_text"); it != j.end() && it->is_string()) {
    raw = it->get<std::string>();
  }
  if (kind == "formulation") {
    auto it = j.find("formulation");
    if (it == j.end() || it->is_null()) {
      return Candidate::unparsed(raw, j.value("parse_error", "no formulation payload"));
    }
    try {
      Candidate c = Candidate::from_formulation(formulation_from_json(*it));
      c.raw_text = raw;
      return c;
    } catch (const Error& e) {
      return Candidate::unparsed(raw.empty() ? it->dump() : raw, e.what());
    } catch (const Json::exception& e) {
      return Candidate::unparsed(raw.empty() ? it->dump() : raw, e.what());
    }
  }
  if (kind == "bundle") {
    auto it = j.find("assignment");
    if (it == j.end()) throw Error(ErrorCode::kParse, "candidate: bundle without 'assignment'");
    std::optional<double> objective;
    if (auto o = j.find("objective"); o != j.end() && !o->is_null()) {
      if (!o->is_number()) throw Error(ErrorCode::kParse, "candidate: objective is not a number");
      objective = o->get<double>();
    }
    Candidate c = Candidate::from_bundle(assignment_from_json(*it), objective);
    c.raw_text = raw;
    return c;
  }
  throw Error(ErrorCode::kParse, "candidate: unknown kind '" + kind + "'");
}

}  // namespace autoform
