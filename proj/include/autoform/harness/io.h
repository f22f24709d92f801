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

// JSONL files: datasets (one WorldDescriptor per line) and candidate sets.

#ifndef AUTOFORM_HARNESS_IO_H_
#define AUTOFORM_HARNESS_IO_H_

#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "autoform/core/serialize.h"
#include "autoform/core/world.h"
#include "autoform/reward/candidate.h"

namespace autoform {

// Calls fn(line_number, json) for every non-blank line. Throws kParse with
// "source:line" for lines that are not JSON.
void for_each_jsonl(std::istream& in, const std::string& source,
                    const std::function<void(int, const Json&)>& fn);

// Throws kNotFound when the file cannot be opened.
std::vector<WorldDescriptor> read_worlds(const std::string& path);
std::vector<WorldDescriptor> parse_worlds(std::istream& in, const std::string& source);
void write_worlds(std::ostream& out, const std::vector<WorldDescriptor>& worlds);

struct CandidateSet {
  std::string problem_id;
  std::vector<Candidate> samples;

  bool operator==(const CandidateSet&) const = default;
};

Json to_json(const CandidateSet& s);
std::vector<CandidateSet> read_candidates(const std::string& path);
std::vector<CandidateSet> parse_candidates(std::istream& in, const std::string& source);

}  // namespace autoform

#endif  // AUTOFORM_HARNESS_IO_H_
