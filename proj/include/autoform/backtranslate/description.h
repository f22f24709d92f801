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


// Natural-language descriptions of world descriptors: templated rendering,
// offline component-wise verification, omissions for the multi-turn setting
// and the lookup oracle that answers clarification queries.

#ifndef AUTOFORM_BACKTRANSLATE_DESCRIPTION_H_
#define AUTOFORM_BACKTRANSLATE_DESCRIPTION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "autoform/core/serialize.h"
#include "autoform/core/world.h"

namespace autoform {

// Element ids:
//   objective, objective/<var>, objective/constant
//   variable:<var>, bound:<var> (upper), lower:<var> (non-zero lower)
//   constraint:<c>, constraint:<c>/<var>, constraint:<c>/rhs
//   pump:<scalar>            total_flow, total_pressure, max_speed,
//                            max_series, max_parallel
//   pump-type:<i>, pump-type:<i>/<field>   m1..m6, fixed_cost, power_cost,
//                                          max_power
//   equation:<name>          power, pressure, flow-balance, pressure-balance
enum class ElementKind {
  kObjective,
  kVariable,
  kConstraint,
  kCoefficient,
  kBound,
  kParameter,
  kPumpType,
  kEquation,
};

std::string_view to_string(ElementKind k);

struct Element {
  std::string id;
  ElementKind kind = ElementKind::kParameter;
  std::string parent;           // empty for top-level elements
  std::optional<double> value;  // set for numeric parameters
};

// Every element of w in rendering order. Coefficients of magnitude 1 are
// structural and carry no value; binary variables have no bound element.
std::vector<Element> formulation_elements(const WorldDescriptor& w);

struct Description {
  std::string text;
  // Element id -> indices into split_sentences(text).
  std::map<std::string, std::vector<int>> manifest;
  std::string scenario;
  std::uint64_t variant = 0;

  bool operator==(const Description&) const = default;
};

struct FiveCheckReport {
  bool data_values_present = false;
  bool constraints_present = false;
  bool objective_correct = false;
  bool parameters_described = false;
  bool self_consistent = false;
  // Failure details keyed by check number 1..5.
  std::map<int, std::vector<std::string>> failures;

  bool pass() const {
    return data_values_present && constraints_present && objective_correct &&
           parameters_described && self_consistent;
  }
  bool check(int number) const;
};

struct Omission {
  std::string element;
  ElementKind kind = ElementKind::kParameter;
  std::string value_text;      // sentence restoring the element
  std::vector<double> values;  // ground-truth numbers it carries

  bool operator==(const Omission&) const = default;
};

struct OmissionLedger {
  std::vector<Omission> omissions;

  bool operator==(const OmissionLedger&) const = default;
};

// Deterministic in (w, style_seed). Throws kInvalidFormulation when w fails
// validate_descriptor's structural checks (e.g. an LP without constraints).
Description render_description(const WorldDescriptor& w, std::uint64_t style_seed = 0);

// Offline five-check verification. Descriptions with an empty manifest are
// aligned sentence by sentence first (see align_manifest).
FiveCheckReport verify_description(const Description& d, const WorldDescriptor& w);

// Heuristic manifest for free-form text: names, keywords and literals.
std::map<std::string, std::vector<int>> align_manifest(std::string_view text,
                                                       const WorldDescriptor& w);

// Elements omit() may drop, in rendering order.
std::vector<Element> omittable_elements(const WorldDescriptor& w);

// Drops `count` (1..3) non-overlapping elements chosen with `seed`. Throws
// kInvalidArgument for count outside [1, 3] and kInsufficientElements when
// w has fewer omittable elements.
std::pair<Description, OmissionLedger> omit(const WorldDescriptor& w, int count,
                                            std::uint64_t seed,
                                            std::uint64_t style_seed = 0);

// Appends the value sentences of `ledger` to d and maps the restored
// elements onto them.
Description merge(const Description& d, const OmissionLedger& ledger);

inline constexpr std::string_view kNoMatchNotice =
    "No additional information is available for that question.";

// Value sentence of the first ledger entry named by the query, otherwise
// kNoMatchNotice.
std::string oracle_answer(std::string_view query, const WorldDescriptor& w,
                          const OmissionLedger& ledger);

// True when the query names the element (keyword match on names, labels and
// units); exposed for reward computation.
bool query_names_element(std::string_view query, const WorldDescriptor& w,
                         const std::string& element);

// Keyword groups behind query_names_element: a query names the element when
// it contains at least one normalized token from every group.
std::vector<std::set<std::string>> element_keywords(const WorldDescriptor& w,
                                                    const std::string& element);

Json to_json(const Description& d);
Description description_from_json(const Json& j);
Json to_json(const FiveCheckReport& r);
Json to_json(const OmissionLedger& l);
OmissionLedger ledger_from_json(const Json& j);
ElementKind parse_element_kind(std::string_view s);

}  // namespace autoform

#endif  // AUTOFORM_BACKTRANSLATE_DESCRIPTION_H_
