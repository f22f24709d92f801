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

#include "autoform/harness/io.h"

#include <fstream>

#include "autoform/common/error.h"

namespace autoform {
namespace {

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open '" + path + "'");
  return in;
}

}  // namespace

void for_each_jsonl(std::istream& in, const std::string& source,
                    const std::function<void(int, const Json&)>& fn) {
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw Error(ErrorCode::kParse, source + ":" + std::to_string(n) + ": invalid JSON");
    }
    try {
      fn(n, j);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kParse) throw;
      throw Error(ErrorCode::kParse, source + ":" + std::to_string(n) + ": " + e.what());
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParse, source + ":" + std::to_string(n) + ": " + e.what());
    }
  }
}

std::vector<WorldDescriptor> parse_worlds(std::istream& in, const std::string& source) {
  std::vector<WorldDescriptor> out;
  for_each_jsonl(in, source, [&](int, const Json& j) { out.push_back(world_from_json(j)); });
  return out;
}

std::vector<WorldDescriptor> read_worlds(const std::string& path) {
  auto in = open_file(path);
  return parse_worlds(in, path);
}

void write_worlds(std::ostream& out, const std::vector<WorldDescriptor>& worlds) {
  for (const auto& w : worlds) out << to_json(w).dump() << "\n";
}

Json to_json(const CandidateSet& s) {
  Json samples = Json::array();
  for (const auto& c : s.samples) samples.push_back(to_json(c));
  return {{"problem_id", s.problem_id}, {"samples", samples}};
}

std::vector<CandidateSet> parse_candidates(std::istream& in, const std::string& source) {
  std::vector<CandidateSet> out;
  for_each_jsonl(in, source, [&](int, const Json& j) {
    if (!j.is_object() || !j.contains("problem_id") || !j["problem_id"].is_string() ||
        !j.contains("samples") || !j["samples"].is_array()) {
      throw Error(ErrorCode::kParse, "expected {\"problem_id\", \"samples\": [...]}");
    }
    CandidateSet s;
    s.problem_id = j["problem_id"].get<std::string>();
    for (const auto& c : j["samples"]) s.samples.push_back(candidate_from_json(c));
    out.push_back(std::move(s));
  });
  return out;
}

std::vector<CandidateSet> read_candidates(const std::string& path) {
  auto in = open_file(path);
  return parse_candidates(in, path);
}

}  // namespace autoform
