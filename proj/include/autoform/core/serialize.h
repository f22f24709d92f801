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

// JSON encoding of the core types. Objects use std::map-ordered keys, so a
// given value always dumps to the same bytes. Unbounded upper bounds are
// encoded as null.

#ifndef AUTOFORM_CORE_SERIALIZE_H_
#define AUTOFORM_CORE_SERIALIZE_H_

#include <string>

#include "autoform/core/formulation.h"
#include "autoform/core/world.h"
#include "json.hpp"

namespace autoform {

using Json = nlohmann::json;

Json to_json(const PumpInstance& p);
Json to_json(const FormulationIR& ir);
Json to_json(const Solution& s);
Json to_json(const Metadata& m);
Json to_json(const WorldDescriptor& w);
Json to_json(const ValidationReport& r);
Json assignment_to_json(const Assignment& a);

// Decoders throw kParse with the offending field path.
PumpInstance pump_instance_from_json(const Json& j);
FormulationIR formulation_from_json(const Json& j);
Solution solution_from_json(const Json& j);
Metadata metadata_from_json(const Json& j);
WorldDescriptor world_from_json(const Json& j);
Assignment assignment_from_json(const Json& j);

// Single-line dump used for JSONL records and canonical comparisons.
std::string dump_line(const Json& j);

}  // namespace autoform

#endif  // AUTOFORM_CORE_SERIALIZE_H_
