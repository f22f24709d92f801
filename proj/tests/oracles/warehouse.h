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


// Warehouse fixture oracle: enumerate the open/closed patterns, tabulate each
// open warehouse's best profit per value of d = 5 * gadgets - widgets, and
// combine the tables under sum(d) >= 0 (the product-mix rule).

#ifndef AUTOFORM_TESTS_ORACLES_WAREHOUSE_H_
#define AUTOFORM_TESTS_ORACLES_WAREHOUSE_H_

#include <algorithm>
#include <limits>
#include <map>
#include <vector>

namespace oracle {

struct Warehouse {
  int capacity;
  int fixed_cost;
  int max_a;
  int max_b;
  int max_c;
};

inline double warehouse_optimum() {
  const std::vector<Warehouse> sites = {
      {500, 1000, 100, 41, 62}, {400, 800, 80, 33, 50}, {300, 600, 60, 25, 37}};
  const double neg = -std::numeric_limits<double>::infinity();
  // table[d] = best product profit with 5B - A = d.
  std::vector<std::map<int, double>> tables;
  for (const auto& w : sites) {
    std::map<int, double> t;
    for (int a = 0; a <= w.max_a; ++a) {
      for (int b = 0; b <= w.max_b; ++b) {
        for (int c = 0; c <= w.max_c; ++c) {
          const int vol = 5 * a + 12 * b + 8 * c;
          if (vol > w.capacity || 10 * vol < w.capacity) continue;
          const double profit = 60.0 * a + 150.0 * b + 110.0 * c;
          auto [it, fresh] = t.emplace(5 * b - a, profit);
          if (!fresh) it->second = std::max(it->second, profit);
        }
      }
    }
    tables.push_back(std::move(t));
  }
  double best = 0.0;  // everything closed
  for (int mask = 1; mask < 8; ++mask) {
    std::map<int, double> acc = {{0, 0.0}};
    double fixed = 0.0;
    for (int k = 0; k < 3; ++k) {
      if (!(mask >> k & 1)) continue;
      fixed += sites[static_cast<std::size_t>(k)].fixed_cost;
      std::map<int, double> next;
      for (const auto& [d1, v1] : acc) {
        for (const auto& [d2, v2] : tables[static_cast<std::size_t>(k)]) {
          auto [it, fresh] = next.emplace(d1 + d2, v1 + v2);
          if (!fresh) it->second = std::max(it->second, v1 + v2);
        }
      }
      acc = std::move(next);
    }
    double top = neg;
    for (const auto& [d, v] : acc) {
      if (d >= 0) top = std::max(top, v);
    }
    best = std::max(best, top - fixed);
  }
  return best;
}

}  // namespace oracle

#endif  // AUTOFORM_TESTS_ORACLES_WAREHOUSE_H_
