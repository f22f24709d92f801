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


// Family samplers shared by the instancer. Internal to the library.

#ifndef AUTOFORM_SRC_INSTANCER_FAMILIES_H_
#define AUTOFORM_SRC_INSTANCER_FAMILIES_H_

#include <string>

#include "autoform/common/rng.h"
#include "autoform/core/world.h"
#include "autoform/instancer/template.h"

namespace autoform::internal {

struct Draft {
  FormulationIR formulation;
  Metadata metadata;
  std::string difficulty = "standard";
};

// One unsolved candidate drawn from the family structure.
Draft sample_family(const TemplateSpec& spec, Rng& rng);

// True when some structure of the family has a size inside
// [spec.min_size, spec.max_size].
bool family_size_feasible(const TemplateSpec& spec);

}  // namespace autoform::internal

#endif  // AUTOFORM_SRC_INSTANCER_FAMILIES_H_
