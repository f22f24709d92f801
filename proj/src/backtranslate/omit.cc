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


#include <algorithm>
#include <set>
#include <string>

#include "autoform/common/error.h"
#include "autoform/common/numeric_text.h"
#include "autoform/common/rng.h"
#include "internal.h"

namespace autoform {

std::pair<Description, OmissionLedger> omit(const WorldDescriptor& w, int count,
                                            std::uint64_t seed, std::uint64_t style_seed) {
  if (count < 1 || count > 3) {
    throw Error(ErrorCode::kInvalidArgument, "omission count must lie in [1, 3]");
  }
  const auto candidates = omittable_elements(w);
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order);
  std::vector<std::size_t> picked;
  for (std::size_t i : order) {
    if (static_cast<int>(picked.size()) == count) break;
    const std::string& id = candidates[i].id;
    bool overlaps = false;
    for (std::size_t j : picked) {
      const std::string& other = candidates[j].id;
      const std::string& parent_i = candidates[i].parent;
      const std::string& parent_j = candidates[j].parent;
      overlaps = overlaps || internal::is_within(id, other) || internal::is_within(other, id) ||
                 parent_i == other || parent_j == id;
    }
    if (!overlaps) picked.push_back(i);
  }
  if (static_cast<int>(picked.size()) < count) {
    throw Error(ErrorCode::kInsufficientElements,
                "only " + std::to_string(picked.size()) + " omittable elements, " +
                    std::to_string(count) + " requested");
  }
  std::sort(picked.begin(), picked.end());
  OmissionLedger ledger;
  std::set<std::string> omitted;
  for (std::size_t i : picked) {
    Omission o;
    o.element = candidates[i].id;
    o.kind = candidates[i].kind;
    o.value_text = internal::value_sentence(w, o.element, o.values);
    omitted.insert(o.element);
    ledger.omissions.push_back(std::move(o));
  }
  render_description(w, style_seed);  // validates w
  internal::Rendered r = internal::render_sentences(w, style_seed, omitted);
  Description d;
  d.text = join_sentences(r.sentences);
  d.manifest = std::move(r.manifest);
  d.scenario = w.metadata.scenario;
  d.variant = style_seed;
  return {std::move(d), std::move(ledger)};
}

Description merge(const Description& d, const OmissionLedger& ledger) {
  Description out = d;
  auto sentences = split_sentences(d.text);
  for (const Omission& o : ledger.omissions) {
    out.manifest[o.element].push_back(static_cast<int>(sentences.size()));
    sentences.push_back(o.value_text);
  }
  out.text = join_sentences(sentences);
  return out;
}

std::vector<std::set<std::string>> element_keywords(const WorldDescriptor& w,
                                                    const std::string& element) {
  return internal::keyword_groups(w, element);
}

bool query_names_element(std::string_view query, const WorldDescriptor& w,
                         const std::string& element) {
  const auto groups = internal::keyword_groups(w, element);
  if (groups.empty()) return false;
  const auto words = word_tokens(query);
  const std::set<std::string> tokens(words.begin(), words.end());
  for (const auto& g : groups) {
    bool hit = false;
    for (const auto& k : g) hit = hit || tokens.contains(k);
    if (!hit) return false;
  }
  return true;
}

std::string oracle_answer(std::string_view query, const WorldDescriptor& w,
                          const OmissionLedger& ledger) {
  for (const Omission& o : ledger.omissions) {
    if (query_names_element(query, w, o.element)) return o.value_text;
  }
  return std::string(kNoMatchNotice);
}

Json to_json(const Description& d) {
  return {{"text", d.text}, {"manifest", Json(d.manifest)}, {"scenario", d.scenario},
          {"variant", d.variant}};
}

Description description_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("text") || !j["text"].is_string()) {
    throw Error(ErrorCode::kParse, "description: missing string field 'text'");
  }
  Description d;
  d.text = j["text"].get<std::string>();
  try {
    if (j.contains("manifest")) {
      d.manifest = j["manifest"].get<std::map<std::string, std::vector<int>>>();
    }
    d.scenario = j.value("scenario", "");
    d.variant = j.value("variant", std::uint64_t{0});
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("description: ") + e.what());
  }
  return d;
}

Json to_json(const FiveCheckReport& r) {
  Json failures = Json::object();
  for (const auto& [check, details] : r.failures) failures[std::to_string(check)] = details;
  return {{"pass", r.pass()},
          {"data_values_present", r.data_values_present},
          {"constraints_present", r.constraints_present},
          {"objective_correct", r.objective_correct},
          {"parameters_described", r.parameters_described},
          {"self_consistent", r.self_consistent},
          {"failures", failures}};
}

Json to_json(const OmissionLedger& l) {
  Json items = Json::array();
  for (const auto& o : l.omissions) {
    items.push_back({{"element", o.element},
                     {"kind", std::string(to_string(o.kind))},
                     {"value_text", o.value_text},
                     {"values", o.values}});
  }
  return {{"omissions", items}};
}

OmissionLedger ledger_from_json(const Json& j) {
  OmissionLedger l;
  if (!j.is_object() || !j.contains("omissions") || !j["omissions"].is_array()) {
    throw Error(ErrorCode::kParse, "ledger: missing array field 'omissions'");
  }
  try {
    for (const auto& item : j["omissions"]) {
      Omission o;
      o.element = item.at("element").get<std::string>();
      o.kind = parse_element_kind(item.at("kind").get<std::string>());
      o.value_text = item.at("value_text").get<std::string>();
      o.values = item.value("values", std::vector<double>{});
      l.omissions.push_back(std::move(o));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("ledger: ") + e.what());
  }
  return l;
}

}  // namespace autoform
