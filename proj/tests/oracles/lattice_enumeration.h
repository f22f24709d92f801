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


// Exhaustive lattice oracle for pure-integer programs with finite bounds.

#ifndef AUTOFORM_TESTS_ORACLES_LATTICE_ENUMERATION_H_
#define AUTOFORM_TESTS_ORACLES_LATTICE_ENUMERATION_H_

#include <cmath>
#include <optional>
#include <vector>

#include "autoform/core/formulation.h"

namespace oracle {

struct LatticeResult {
  double objective;
  std::vector<long> point;
};

inline std::optional<LatticeResult> ip_by_enumeration(const autoform::FormulationIR& ir) {
  const std::size_t n = ir.variables.size();
  std::vector<long> lo(n);
  std::vector<long> hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = static_cast<long>(std::ceil(ir.variables[j].lower));
    hi[j] = static_cast<long>(std::floor(*ir.variables[j].upper));
  }
  auto column = [&](const std::string& name) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ir.variables[j].name == name) return j;
    }
    return n;
  };
  struct Row {
    std::vector<double> a;
    autoform::Comparator cmp;
    double b;
  };
  std::vector<Row> rows;
  for (const auto& c : ir.constraints) {
    Row r{std::vector<double>(n, 0.0), c.comparator, c.rhs};
    for (const auto& [name, v] : c.coefficients) r.a[column(name)] += v;
    rows.push_back(r);
  }
  std::vector<double> obj(n, 0.0);
  for (const auto& [name, v] : ir.objective.coefficients) obj[column(name)] += v;
  const bool maximize = ir.objective.sense == autoform::Sense::kMax;

  std::optional<LatticeResult> best;
  std::vector<long> x = lo;
  for (bool more = lo.size() == n; more;) {
    bool ok = true;
    for (const auto& r : rows) {
      double lhs = 0.0;
      for (std::size_t j = 0; j < n; ++j) lhs += r.a[j] * static_cast<double>(x[j]);
      if ((r.cmp == autoform::Comparator::kLe && lhs > r.b + 1e-9) ||
          (r.cmp == autoform::Comparator::kGe && lhs < r.b - 1e-9) ||
          (r.cmp == autoform::Comparator::kEq && std::abs(lhs - r.b) > 1e-9)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      double value = ir.objective.constant;
      for (std::size_t j = 0; j < n; ++j) value += obj[j] * static_cast<double>(x[j]);
      if (!best || (maximize ? value > best->objective : value < best->objective)) {
        best = LatticeResult{value, x};
      }
    }
    more = false;
    for (std::size_t j = n; j-- > 0;) {
      if (x[j] < hi[j]) {
        ++x[j];
        more = true;
        break;
      }
      x[j] = lo[j];
    }
  }
  return best;
}

}  // namespace oracle

#endif  // AUTOFORM_TESTS_ORACLES_LATTICE_ENUMERATION_H_
