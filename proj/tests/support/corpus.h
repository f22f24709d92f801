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

// Generated corpora and candidate mutations shared by tests.

#ifndef AUTOFORM_TESTS_SUPPORT_CORPUS_H_
#define AUTOFORM_TESTS_SUPPORT_CORPUS_H_

#include <iterator>
#include <vector>

#include "autoform/common/rng.h"
#include "autoform/core/world.h"
#include "autoform/instancer/instancer.h"
#include "autoform/instancer/template.h"
#include "autoform/reward/candidate.h"

namespace support {

using namespace autoform;

// per_family worlds from every LP and MILP family plus easy pumps.
inline std::vector<WorldDescriptor> mixed_corpus(int per_family, std::uint64_t seed) {
  std::vector<WorldDescriptor> out;
  for (Category c : {Category::kLp, Category::kMilp}) {
    for (const auto& family : template_families(c)) {
      auto [batch, r] = generate_dataset(make_template(c, family), per_family, seed++);
      out.insert(out.end(), batch.begin(), batch.end());
    }
  }
  auto [pumps, r] = generate_dataset(make_template(Category::kPump, "easy"), per_family, seed);
  out.insert(out.end(), pumps.begin(), pumps.end());
  return out;
}

inline Candidate mutate(const WorldDescriptor& w, Rng& rng) {
  const int kind = static_cast<int>(rng.integer(0, 9));
  FormulationIR ir = w.formulation;
  Assignment a = w.solution;
  switch (kind) {
    case 0:
      if (!ir.constraints.empty()) {
        ir.constraints.erase(ir.constraints.begin() +
                             rng.integer(0, static_cast<long>(ir.constraints.size()) - 1));
      }
      return Candidate::from_formulation(ir);
    case 1:
      if (!ir.constraints.empty()) {
        auto& c = ir.constraints[rng.integer(0, static_cast<long>(ir.constraints.size()) - 1)];
        c.rhs *= rng.uniform(0.5, 1.5);
      }
      return Candidate::from_formulation(ir);
    case 2:
      ir.objective.sense = ir.objective.sense == Sense::kMax ? Sense::kMin : Sense::kMax;
      return Candidate::from_formulation(ir);
    case 3:
      ir.objective.coefficients["ghost"] = 1.0;
      return Candidate::from_formulation(ir);
    case 4:
      ir.category = ir.category == Category::kLp ? Category::kMilp : Category::kLp;
      return Candidate::from_formulation(ir);
    case 5: {
      auto it = a.begin();
      std::advance(it, rng.integer(0, static_cast<long>(a.size()) - 1));
      it->second += rng.uniform(-2.0, 2.0);
      return Candidate::from_bundle(a);
    }
    case 6: {
      auto it = a.begin();
      std::advance(it, rng.integer(0, static_cast<long>(a.size()) - 1));
      a.erase(it);
      return Candidate::from_bundle(a);
    }
    case 7:
      for (auto& [k, v] : a) v = rng.bernoulli(0.5) ? 0.0 : v;
      return Candidate::from_bundle(a);
    case 8:
      return Candidate::unparsed("not a model", "fuzz");
    default:
      for (auto& [k, v] : ir.objective.coefficients) v *= rng.uniform(0.8, 1.2);
      return Candidate::from_formulation(ir);
  }
}

}  // namespace support

#endif  // AUTOFORM_TESTS_SUPPORT_CORPUS_H_
