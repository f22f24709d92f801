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


// Shared pieces of the renderer, verifier and omission code.

#ifndef AUTOFORM_SRC_BACKTRANSLATE_INTERNAL_H_
#define AUTOFORM_SRC_BACKTRANSLATE_INTERNAL_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "autoform/backtranslate/description.h"

namespace autoform::internal {

struct Rendered {
  std::vector<std::string> sentences;
  std::map<std::string, std::vector<int>> manifest;
};

// Renders w without the elements in `omitted` (and their descendants).
Rendered render_sentences(const WorldDescriptor& w, std::uint64_t style_seed,
                          const std::set<std::string>& omitted);

// Stand-alone sentence restoring one element; `values` receives the numbers
// it states.
std::string value_sentence(const WorldDescriptor& w, const std::string& id,
                           std::vector<double>& values);

// Keyword groups naming an element; a query names it when every group
// shares a token with the query.
std::vector<std::set<std::string>> keyword_groups(const WorldDescriptor& w,
                                                  const std::string& id);

// True when `text` contains `name` delimited by non-identifier characters.
bool contains_identifier(const std::string& text, const std::string& name);

// True when `id` equals `ancestor` or lies below it ("constraint:c/x" is
// below "constraint:c").
bool is_within(const std::string& id, const std::string& ancestor);

std::string type_letter(int i);

}  // namespace autoform::internal

#endif  // AUTOFORM_SRC_BACKTRANSLATE_INTERNAL_H_
