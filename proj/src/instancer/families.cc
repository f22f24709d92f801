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


#include "families.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <string>
#include <vector>

#include "autoform/common/error.h"
#include "autoform/common/numeric_text.h"
#include "autoform/instancer/fixtures.h"

namespace autoform::internal {
namespace {

const std::vector<std::string> kItems = {
    "alder", "birch",   "cedar",  "hazel",  "maple",   "oak",     "pine",  "rowan",
    "spruce", "willow", "yew",    "larch",  "aspen",   "elm",     "juniper", "poplar",
    "cypress", "hemlock", "laurel", "myrtle", "sequoia", "tamarack", "acacia", "linden"};
const std::vector<std::string> kResources = {"assembly", "cutting",  "drilling", "finishing",
                                             "grinding", "painting", "welding",  "testing"};
const std::vector<std::string> kPlaces = {"north", "south", "east",  "west",
                                          "central", "harbor", "ridge", "valley"};
const std::vector<std::string> kTargets = {"amber", "cobalt", "coral",   "indigo",
                                           "jade",  "ivory",  "scarlet", "teal",
                                           "violet", "olive", "onyx",    "pearl"};
const std::vector<std::string> kHubs = {"granite", "marble", "slate", "basalt"};
const std::vector<std::string> kPeriods = {
    "alpha", "bravo", "charlie", "delta",    "echo",  "foxtrot", "golf",  "hotel", "india",  "juliet",
    "kilo",  "lima",  "mike",    "november", "oscar", "papa",    "quebec", "romeo", "sierra", "tango"};
const std::vector<std::string> kIngredients = {
    "barley", "oats",    "maize",   "millet", "rye",     "sorghum", "bran",  "canola",
    "lentil", "soybean", "wheat",   "rice",   "quinoa",  "flax",    "peas",  "buckwheat",
    "spelt",  "chickpea", "hemp",   "teff"};
const std::vector<std::string> kNutrients = {"protein", "fiber", "energy", "calcium"};

struct Dimension {
  const char* name;
  const char* unit;
};
const std::vector<Dimension> kPackDims = {
    {"weight", "kg"}, {"volume", "liters"}, {"floor area", "square meters"}};

const std::vector<std::string> kLpScenarios = {"manufacturing", "agriculture", "energy",
                                               "retail",        "logistics",   "food processing",
                                               "chemicals",     "textiles"};
const std::vector<std::string> kMilpScenarios = {
    "logistics", "manufacturing", "healthcare",        "telecommunications",
    "construction", "retail",     "public services",   "airline operations"};
const std::vector<std::string> kPumpScenarios = {"water utility", "irrigation district",
                                                 "chemical plant", "district heating",
                                                 "mine dewatering"};

std::string title(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::vector<std::string> take(Rng& rng, const std::vector<std::string>& pool, int k) {
  if (k > static_cast<int>(pool.size())) {
    throw Error(ErrorCode::kInvalidArgument, "name pool too small for the requested size");
  }
  std::vector<std::string> out = pool;
  rng.shuffle(out);
  out.resize(static_cast<std::size_t>(k));
  return out;
}

double clamp_round(double x, double lo, double hi, int decimals) {
  return round_to(std::clamp(x, lo, hi), decimals);
}

class Builder {
 public:
  Builder(Category category, Sense sense, std::string objective_label,
          std::string objective_unit, std::string scenario) {
    d_.formulation.category = category;
    d_.formulation.objective.sense = sense;
    d_.metadata.objective_label = std::move(objective_label);
    d_.metadata.objective_unit = std::move(objective_unit);
    d_.metadata.scenario = std::move(scenario);
  }

  void variable(const std::string& name, Domain domain, double upper, std::string label,
                std::string unit) {
    if (domain == Domain::kInteger && upper == 1.0) domain = Domain::kBinary;
    d_.formulation.variables.push_back({name, domain, 0.0, upper});
    d_.metadata.variables[name] = {std::move(label), std::move(unit)};
  }

  void objective(const std::string& name, double coefficient) {
    d_.formulation.objective.coefficients[name] = coefficient;
  }

  void row(const std::string& name, CoefficientMap coefficients, Comparator comparator,
           double rhs, std::string label, std::string unit) {
    d_.formulation.constraints.push_back({name, std::move(coefficients), comparator, rhs});
    d_.metadata.constraints[name] = {std::move(label), std::move(unit)};
  }

  Draft finish() { return std::move(d_); }

 private:
  Draft d_;
};

// Structural dimensions of one draw and the resulting size.
struct Shape {
  int a = 0;
  int b = 0;
  int c = 0;
  int size = 0;
};

std::vector<Shape> all_shapes(Category category, const std::string& family) {
  std::vector<Shape> out;
  if (category == Category::kPump) {
    for (int n = 1; n <= 8; ++n) out.push_back({n, 0, 0, n});
    return out;
  }
  if (family == "assignment" || family == "routing") {
    for (int r = 2; r <= 4; ++r)
      for (int c = 2; c <= 5; ++c) out.push_back({r, c, 0, r * c});
  } else if (family == "network-flows") {
    for (int s = 1; s <= 3; ++s)
      for (int h = 1; h <= 3; ++h)
        for (int k = 1; k <= 4; ++k) out.push_back({s, h, k, h * (s + k)});
  } else if (family == "production-planning") {
    for (int k = 1; k <= 3; ++k)
      for (int t = 2; t <= 4; ++t) out.push_back({k, t, 0, 2 * k * t});
  } else if (family == "scheduling") {
    for (int n = 3; n <= 20; ++n) out.push_back({n, 0, 0, n});
  } else {
    for (int n = 2; n <= 20; ++n) out.push_back({n, 0, 0, n});
  }
  return out;
}

std::vector<Shape> admissible(const TemplateSpec& spec) {
  std::vector<Shape> out;
  for (const Shape& s : all_shapes(spec.category, spec.family)) {
    if (s.size >= spec.min_size && s.size <= spec.max_size) out.push_back(s);
  }
  return out;
}

double coef(Rng& rng, const TemplateSpec& spec, int decimals = 0) {
  const double step = std::pow(10.0, -decimals);
  return std::max(step, rng.rounded(spec.coefficient_min, spec.coefficient_max, decimals));
}

const std::string& scenario(Rng& rng, const TemplateSpec& spec,
                            const std::vector<std::string>& fallback) {
  return rng.pick(spec.scenarios.empty() ? fallback : spec.scenarios);
}

// ---------------------------------------------------------------- LP

Draft resource_allocation(const TemplateSpec& spec, Rng& rng, const Shape& shape) {
  const int n = shape.a;
  const int m = static_cast<int>(rng.integer(2, std::clamp(n - 1, 2, 5)));
  const auto items = take(rng, kItems, n);
  const auto res = take(rng, kResources, m);
  Builder b(Category::kLp, Sense::kMax, "total profit", "$", scenario(rng, spec, kLpScenarios));
  std::vector<std::vector<double>> use(m, std::vector<double>(n, 0.0));
  for (int j = 0; j < n; ++j) {
    bool any = false;
    for (int i = 0; i < m; ++i) {
      if (!rng.bernoulli(0.2)) {
        use[i][j] = rng.rounded(1, 6, 0);
        any = true;
      }
    }
    if (!any) use[rng.integer(0, m - 1)][j] = rng.rounded(1, 6, 0);
  }
  const double base = rng.uniform(spec.coefficient_min, spec.coefficient_max) / 3.5;
  std::vector<double> upper(n);
  for (int j = 0; j < n; ++j) {
    upper[j] = rng.rounded(20, 80, 0);
    double usage = 0.0;
    for (int i = 0; i < m; ++i) usage += use[i][j];
    const double profit = clamp_round(base * usage * rng.uniform(0.75, 1.25),
                                      spec.coefficient_min, spec.coefficient_max, 1);
    const std::string name = "make_" + items[j];
    b.variable(name, Domain::kContinuous, upper[j], "units of " + title(items[j]), "units");
    b.objective(name, std::max(0.1, profit));
  }
  for (int i = 0; i < m; ++i) {
    CoefficientMap row;
    double full = 0.0;
    for (int j = 0; j < n; ++j) {
      if (use[i][j] == 0.0) continue;
      row["make_" + items[j]] = use[i][j];
      full += use[i][j] * upper[j];
    }
    b.row("cap_" + res[i], row, Comparator::kLe, std::round(rng.uniform(0.5, 0.8) * full),
          title(res[i]) + " hours", "hours");
  }
  return b.finish();
}

Draft production(const TemplateSpec& spec, Rng& rng, const Shape& shape) {
  const int n = shape.a;
  const int m = static_cast<int>(rng.integer(2, std::clamp(n, 2, 4)));
  const auto items = take(rng, kItems, n);
  const auto machines = take(rng, kResources, m);
  Builder b(Category::kLp, Sense::kMax, "total margin", "$", scenario(rng, spec, kLpScenarios));
  std::vector<std::vector<double>> hours(m, std::vector<double>(n));
  std::vector<double> upper(n), floor(n, 0.0);
  const double base = rng.uniform(spec.coefficient_min, spec.coefficient_max) / 3.0;
  std::vector<int> with_floor;
  for (int j = 0; j < n; ++j) {
    double total = 0.0;
    for (int i = 0; i < m; ++i) total += hours[i][j] = rng.rounded(0.5, 5, 1);
    upper[j] = rng.rounded(30, 120, 0);
    const std::string name = "make_" + items[j];
    b.variable(name, Domain::kContinuous, upper[j], "units of " + title(items[j]), "units");
    b.objective(name, clamp_round(base * total / m * rng.uniform(0.7, 1.3),
                                  spec.coefficient_min, spec.coefficient_max, 1));
    if (rng.bernoulli(0.5)) with_floor.push_back(j);
  }
  if (with_floor.empty()) with_floor.push_back(static_cast<int>(rng.integer(0, n - 1)));
  for (int j : with_floor) floor[j] = std::round(rng.uniform(0.15, 0.35) * upper[j]);
  for (int i = 0; i < m; ++i) {
    CoefficientMap row;
    double need = 0.0;
    for (int j = 0; j < n; ++j) {
      row["make_" + items[j]] = hours[i][j];
      need += hours[i][j] * (floor[j] + rng.uniform(0.35, 0.6) * (upper[j] - floor[j]));
    }
    b.row("hours_" + machines[i], row, Comparator::kLe, std::round(need),
          title(machines[i]) + " machine hours", "hours");
  }
  for (int j : with_floor) {
    b.row("min_" + items[j], {{"make_" + items[j], 1.0}}, Comparator::kGe, floor[j],
          "minimum order of " + title(items[j]), "units");
  }
  return b.finish();
}

Draft blending(const TemplateSpec& spec, Rng& rng, const Shape& shape) {
  const int n = shape.a;
  const int k = static_cast<int>(rng.integer(1, std::clamp(n - 1, 1, 3)));
  const auto ingredients = take(rng, kIngredients, n);
  const auto nutrients = take(rng, kNutrients, k);
  Builder b(Category::kLp, Sense::kMin, "total ingredient cost", "$",
            scenario(rng, spec, kLpScenarios));
  const double batch = rng.rounded(10, 100, 0) * 10.0;
  std::vector<std::vector<double>> content(k, std::vector<double>(n));
  std::vector<double> mean(k, 0.0);
  for (int q = 0; q < k; ++q) {
    for (int j = 0; j < n; ++j) mean[q] += content[q][j] = rng.rounded(1, 30, 1);
    mean[q] /= n;
  }
  const double base = rng.uniform(spec.coefficient_min, spec.coefficient_max);
  CoefficientMap total;
  for (int j = 0; j < n; ++j) {
    double richness = 0.0;
    for (int q = 0; q < k; ++q) richness += content[q][j] / mean[q];
    const std::string name = "use_" + ingredients[j];
    const double avail = std::round(rng.uniform(1.1, 1.5) * batch / n * rng.uniform(0.8, 1.2));
    b.variable(name, Domain::kContinuous, std::max(1.0, avail),
               "tons of " + title(ingredients[j]), "tons");
    b.objective(name, clamp_round(base * richness / k * rng.uniform(0.7, 1.3),
                                  spec.coefficient_min, spec.coefficient_max, 1));
    total[name] = 1.0;
  }
  b.row("batch_size", total, Comparator::kEq, batch, "blend batch size", "tons");
  for (int q = 0; q < k; ++q) {
    CoefficientMap row;
    for (int j = 0; j < n; ++j) row["use_" + ingredients[j]] = content[q][j];
    b.row("min_" + nutrients[q], row, Comparator::kGe,
          std::round(batch * mean[q] * rng.uniform(0.85, 1.05)),
          "minimum " + nutrients[q] + " content", "units");
  }
  return b.finish();
}

// ---------------------------------------------------------------- MILP

Draft assignment(const TemplateSpec& spec, Rng& rng, const Shape& shape) {
  const auto crews = take(rng, kPlaces, shape.a);
  const auto lanes = take(rng, kTargets, shape.b);
  Builder b(Category::kMilp, Sense::kMin, "total staffing cost", "$",
            scenario(rng, spec, kMilpScenarios));
  std::vector<std::vector<double>> cap(shape.a, std::vector<double>(shape.b));
  for (int r = 0; r < shape.a; ++r) {
    for (int c = 0; c < shape.b; ++c) {
      cap[r][c] = rng.rounded(2, 6, 0);
      const std::string name = "assign_" + crews[r] + "_" + lanes[c];
      b.variable(name, Domain::kInteger, cap[r][c],
                 "workers from team " + title(crews[r]) + " on route " + title(lanes[c]),
                 "workers");
      b.objective(name, coef(rng, spec));
    }
  }
  for (int c = 0; c < shape.b; ++c) {
    CoefficientMap row;
    double full = 0.0;
    for (int r = 0; r < shape.a; ++r) {
      row["assign_" + crews[r] + "_" + lanes[c]] = 1.0;
      full += cap[r][c];
    }
    b.row("demand_" + lanes[c], row, Comparator::kGe,
          std::max(1.0, std::round(rng.uniform(0.55, 0.8) * full)),
          "route " + title(lanes[c]) + " staffing requirement", "workers");
  }
  for (int r = 0; r < shape.a; ++r) {
    CoefficientMap row;
    double full = 0.0;
    for (int c = 0; c < shape.b; ++c) {
      row["assign_" + crews[r] + "_" + lanes[c]] = 1.0;
      full += cap[r][c];
    }
    b.row("team_" + crews[r], row, Comparator::kLe, std::round(rng.uniform(0.7, 0.9) * full),
          "team " + title(crews[r]) + " headcount", "workers");
  }
  return b.finish();
}

Draft scheduling(const TemplateSpec& spec, Rng& rng, const Shape& shape) {
  const int t_count = shape.a;
  const int length = t_count < 5 ? 2 : static_cast<int>(rng.integer(2, 3));
  Builder b(Category::kMilp, Sense::kMin, "total wages", "$", scenario(rng, spec, kMilpScenarios));
  std::vector<double> cap(t_count);
  for (int s = 0; s < t_count; ++s) {
    cap[s] = rng.rounded(2, 6, 0);
    const std::string name = "start_" + kPeriods[s];
    b.variable(name, Domain::kInteger, cap[s],
               "workers starting in block " + title(kPeriods[s]), "workers");
    b.objective(name, coef(rng, spec));
  }
  for (int t = 0; t < t_count; ++t) {
    CoefficientMap row;
    double full = 0.0;
    for (int back = 0; back < length; ++back) {
      const int s = (t - back + t_count) % t_count;
      row["start_" + kPeriods[s]] = 1.0;
      full += cap[s];
    }
    b.row("cover_" + kPeriods[t], row, Comparator::kGe,
          std::max(1.0, std::round(rng.uniform(0.55, 0.8) * full)),
          "block " + title(kPeriods[t]) + " staffing", "workers");
  }
  return b.finish();
}

Draft packing(const TemplateSpec& spec, Rng& rng, const Shape& shape) {
  const int n = shape.a;
  const int m = static_cast<int>(rng.integer(1, 3));
  const auto items = take(rng, kItems, n);
  Builder b(Category::kMilp, Sense::kMax, "total cargo value", "$",
            scenario(rng, spec, kMilpScenarios));
  std::vector<double> upper(n);
  std::vector<std::vector<double>> size(m, std::vector<double>(n));
  for (int j = 0; j < n; ++j) {
    upper[j] = rng.rounded(1, 5, 0);
    const std::string name = "pack_" + items[j];
    b.variable(name, Domain::kInteger, upper[j], "crates of " + title(items[j]) + " packed",
               "crates");
    b.objective(name, coef(rng, spec));
    for (int i = 0; i < m; ++i) size[i][j] = rng.rounded(1, 9, 0);
  }
  for (int i = 0; i < m; ++i) {
    CoefficientMap row;
    double full = 0.0;
    for (int j = 0; j < n; ++j) {
      row["pack_" + items[j]] = size[i][j];
      full += size[i][j] * upper[j];
    }
    std::string dim = kPackDims[i].name;
    std::string key = dim;
    std::replace(key.begin(), key.end(), ' ', '_');
    b.row("limit_" + key, row, Comparator::kLe, std::round(rng.uniform(0.55, 0.8) * full),
          "container " + dim + " limit", kPackDims[i].unit);
  }
  return b.finish();
}

Draft routing(const TemplateSpec& spec, Rng& rng, const Shape& shape) {
  const auto depots = take(rng, kPlaces, shape.a);
  const auto customers = take(rng, kTargets, shape.b);
  Builder b(Category::kMilp, Sense::kMin, "total trip cost", "$",
            scenario(rng, spec, kMilpScenarios));
  std::vector<double> load(shape.a);
  std::vector<std::vector<double>> cap(shape.a, std::vector<double>(shape.b));
  std::vector<std::vector<double>> hours(shape.a, std::vector<double>(shape.b));
  for (int r = 0; r < shape.a; ++r) {
    load[r] = rng.rounded(10, 30, 0);
    for (int c = 0; c < shape.b; ++c) {
      cap[r][c] = rng.rounded(2, 6, 0);
      hours[r][c] = rng.rounded(1, 6, 0);
      const std::string name = "trips_" + depots[r] + "_" + customers[c];
      b.variable(name, Domain::kInteger, cap[r][c],
                 "trips from depot " + title(depots[r]) + " to customer " +
                     title(customers[c]),
                 "trips");
      b.objective(name, coef(rng, spec));
    }
  }
  for (int c = 0; c < shape.b; ++c) {
    CoefficientMap row;
    double full = 0.0;
    for (int r = 0; r < shape.a; ++r) {
      row["trips_" + depots[r] + "_" + customers[c]] = load[r];
      full += load[r] * cap[r][c];
    }
    b.row("deliver_" + customers[c], row, Comparator::kGe,
          std::round(rng.uniform(0.5, 0.75) * full),
          "customer " + title(customers[c]) + " demand", "pallets");
  }
  for (int r = 0; r < shape.a; ++r) {
    CoefficientMap row;
    double full = 0.0;
    for (int c = 0; c < shape.b; ++c) {
      row["trips_" + depots[r] + "_" + customers[c]] = hours[r][c];
      full += hours[r][c] * cap[r][c];
    }
    b.row("drivers_" + depots[r], row, Comparator::kLe,
          std::round(rng.uniform(0.7, 0.9) * full),
          "depot " + title(depots[r]) + " driver hours", "hours");
  }
  return b.finish();
}

Draft network_flows(const TemplateSpec& spec, Rng& rng, const Shape& shape) {
  const auto sources = take(rng, kPlaces, shape.a);
  const auto hubs = take(rng, kHubs, shape.b);
  const auto sinks = take(rng, kTargets, shape.c);
  Builder b(Category::kMilp, Sense::kMin, "total shipping cost", "$",
            scenario(rng, spec, kMilpScenarios));
  auto arc = [&](const std::string& from, const std::string& to, const std::string& label) {
    const double cap = rng.rounded(5, 30, 0);
    const std::string name = "ship_" + from + "_" + to;
    b.variable(name, Domain::kInteger, cap, label, "units");
    b.objective(name, coef(rng, spec));
    return cap;
  };
  std::vector<double> out_cap(shape.a, 0.0), in_cap(shape.c, 0.0);
  for (int s = 0; s < shape.a; ++s)
    for (int h = 0; h < shape.b; ++h)
      out_cap[s] += arc(sources[s], hubs[h],
                        "units shipped from plant " + title(sources[s]) + " to hub " +
                            title(hubs[h]));
  for (int h = 0; h < shape.b; ++h)
    for (int k = 0; k < shape.c; ++k)
      in_cap[k] += arc(hubs[h], sinks[k],
                       "units shipped from hub " + title(hubs[h]) + " to market " +
                           title(sinks[k]));
  double supply_total = 0.0, in_total = 0.0;
  for (int s = 0; s < shape.a; ++s) {
    CoefficientMap row;
    for (int h = 0; h < shape.b; ++h) row["ship_" + sources[s] + "_" + hubs[h]] = 1.0;
    const double supply = std::round(rng.uniform(0.8, 0.95) * out_cap[s]);
    supply_total += supply;
    b.row("supply_" + sources[s], row, Comparator::kLe, supply,
          "plant " + title(sources[s]) + " supply", "units");
  }
  for (int h = 0; h < shape.b; ++h) {
    CoefficientMap row;
    for (int s = 0; s < shape.a; ++s) row["ship_" + sources[s] + "_" + hubs[h]] = 1.0;
    for (int k = 0; k < shape.c; ++k) row["ship_" + hubs[h] + "_" + sinks[k]] = -1.0;
    b.row("balance_" + hubs[h], row, Comparator::kEq, 0.0,
          "hub " + title(hubs[h]) + " flow balance", "units");
  }
  for (double c : in_cap) in_total += c;
  for (int k = 0; k < shape.c; ++k) {
    CoefficientMap row;
    for (int h = 0; h < shape.b; ++h) row["ship_" + hubs[h] + "_" + sinks[k]] = 1.0;
    const double share = rng.uniform(0.6, 0.85) * supply_total * in_cap[k] / in_total;
    b.row("demand_" + sinks[k], row, Comparator::kGe,
          std::max(1.0, std::round(std::min(0.8 * in_cap[k], share))),
          "market " + title(sinks[k]) + " demand", "units");
  }
  return b.finish();
}

Draft integer_program(const TemplateSpec& spec, Rng& rng, const Shape& shape) {
  const int n = shape.a;
  const int m = static_cast<int>(rng.integer(2, std::clamp(n, 2, 5)));
  const auto items = take(rng, kItems, n);
  const auto res = take(rng, kResources, m);
  Builder b(Category::kMilp, Sense::kMax, "total return", "$",
            scenario(rng, spec, kMilpScenarios));
  std::vector<double> upper(n);
  for (int j = 0; j < n; ++j) {
    upper[j] = rng.rounded(3, 10, 0);
    const std::string name = "run_" + items[j];
    b.variable(name, Domain::kInteger, upper[j], "batches of " + title(items[j]), "batches");
    b.objective(name, coef(rng, spec));
  }
  for (int i = 0; i + 1 < m; ++i) {
    CoefficientMap row;
    double positive = 0.0;
    for (int j = 0; j < n; ++j) {
      if (rng.bernoulli(0.2)) continue;
      const double a = rng.rounded(-2, 8, 0);
      if (a == 0.0) continue;
      row["run_" + items[j]] = a;
      positive += std::max(0.0, a) * upper[j];
    }
    if (positive == 0.0) {
      const int j = static_cast<int>(rng.integer(0, n - 1));
      row["run_" + items[j]] = rng.rounded(1, 8, 0);
      positive = row["run_" + items[j]] * upper[j];
    }
    b.row("budget_" + res[i], row, Comparator::kLe,
          std::round(rng.uniform(0.4, 0.7) * positive), title(res[i]) + " budget", "hours");
  }
  CoefficientMap row;
  double full = 0.0;
  for (int j = 0; j < n; ++j) {
    const double a = rng.rounded(1, 5, 0);
    row["run_" + items[j]] = a;
    full += a * upper[j];
  }
  b.row("min_" + res[m - 1], row, Comparator::kGe, std::round(rng.uniform(0.2, 0.4) * full),
        "minimum " + res[m - 1] + " workload", "hours");
  return b.finish();
}

Draft production_planning(const TemplateSpec& spec, Rng& rng, const Shape& shape) {
  const int k_count = shape.a;
  const int t_count = shape.b;
  const auto items = take(rng, kItems, k_count);
  Builder b(Category::kMilp, Sense::kMin, "total production and holding cost", "$",
            scenario(rng, spec, kMilpScenarios));
  auto make = [&](int k, int t) { return "make_" + items[k] + "_" + kPeriods[t]; };
  auto store = [&](int k, int t) { return "store_" + items[k] + "_" + kPeriods[t]; };
  std::vector<std::vector<double>> demand(k_count, std::vector<double>(t_count));
  std::vector<double> hours(k_count), initial(k_count), safety(k_count), holding(k_count);
  for (int k = 0; k < k_count; ++k) {
    hours[k] = rng.rounded(1, 3, 0);
    initial[k] = rng.rounded(0, 10, 0);
    safety[k] = rng.rounded(3, 15, 0);
    holding[k] = rng.rounded(0.5, 3, 1);
    for (int t = 0; t < t_count; ++t) {
      demand[k][t] = rng.rounded(20, 80, 0);
      b.variable(make(k, t), Domain::kInteger, 500,
                 "units of " + title(items[k]) + " made in block " + title(kPeriods[t]),
                 "units");
      b.variable(store(k, t), Domain::kInteger, 500,
                 "units of " + title(items[k]) + " stored after block " + title(kPeriods[t]),
                 "units");
      b.objective(make(k, t), coef(rng, spec));
      b.objective(store(k, t), holding[k]);
    }
  }
  for (int k = 0; k < k_count; ++k) {
    for (int t = 0; t < t_count; ++t) {
      CoefficientMap row = {{make(k, t), 1.0}, {store(k, t), -1.0}};
      double rhs = demand[k][t];
      if (t > 0) {
        row[store(k, t - 1)] = 1.0;
      } else {
        rhs -= initial[k];
      }
      b.row("balance_" + items[k] + "_" + kPeriods[t], row, Comparator::kEq, rhs,
            title(items[k]) + " stock balance in block " + title(kPeriods[t]), "units");
      b.row("safety_" + items[k] + "_" + kPeriods[t], {{store(k, t), 1.0}}, Comparator::kGe,
            safety[k],
            title(items[k]) + " safety stock after block " + title(kPeriods[t]), "units");
    }
  }
  for (int t = 0; t < t_count; ++t) {
    CoefficientMap row;
    double need = 0.0;
    for (int k = 0; k < k_count; ++k) {
      row[make(k, t)] = hours[k];
      need += hours[k] * (demand[k][t] + safety[k]);
    }
    b.row("plant_" + kPeriods[t], row, Comparator::kLe,
          std::round(rng.uniform(1.05, 1.4) * need),
          "plant hours in block " + title(kPeriods[t]), "hours");
  }
  return b.finish();
}

Draft knapsack(const TemplateSpec& spec, Rng& rng, const Shape& shape) {
  const int n = shape.a;
  const auto items = take(rng, kItems, n);
  Builder b(Category::kMilp, Sense::kMax, "total value", "$", scenario(rng, spec, kMilpScenarios));
  CoefficientMap weights, count;
  double full = 0.0, copies = 0.0;
  for (int j = 0; j < n; ++j) {
    const double upper = rng.bernoulli(0.5) ? 1.0 : rng.rounded(2, 3, 0);
    const std::string name = "take_" + items[j];
    b.variable(name, Domain::kInteger, upper, "units of " + title(items[j]) + " taken", "units");
    b.objective(name, coef(rng, spec));
    weights[name] = rng.rounded(1, 12, 0);
    count[name] = 1.0;
    full += weights[name] * upper;
    copies += upper;
  }
  b.row("capacity", weights, Comparator::kLe, std::round(rng.uniform(0.6, 0.85) * full),
        "knapsack capacity", "kg");
  if (rng.bernoulli(0.4)) {
    b.row("item_limit", count, Comparator::kLe,
          std::max(1.0, std::round(rng.uniform(0.6, 0.85) * copies)), "item count limit",
          "units");
  }
  return b.finish();
}

Draft set_covering(const TemplateSpec& spec, Rng& rng, const Shape& shape) {
  const int n = shape.a;
  const int e_count = static_cast<int>(rng.integer(3, 6));
  const auto kits = take(rng, kItems, n);
  const auto districts = take(rng, kTargets, e_count);
  Builder b(Category::kMilp, Sense::kMin, "total deployment cost", "$",
            scenario(rng, spec, kMilpScenarios));
  std::vector<std::vector<bool>> covers(n, std::vector<bool>(e_count, false));
  std::vector<double> upper(n);
  for (int j = 0; j < n; ++j) {
    std::vector<int> order(e_count);
    for (int e = 0; e < e_count; ++e) order[e] = e;
    rng.shuffle(order);
    const int k = static_cast<int>(rng.integer(2, std::max(2, e_count - 1)));
    for (int e = 0; e < k; ++e) covers[j][order[e]] = true;
  }
  for (int e = 0; e < e_count; ++e) {
    int have = 0;
    for (int j = 0; j < n; ++j) have += covers[j][e] ? 1 : 0;
    while (have < std::min(2, n)) {
      const int j = static_cast<int>(rng.integer(0, n - 1));
      if (!covers[j][e]) {
        covers[j][e] = true;
        ++have;
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    upper[j] = rng.rounded(1, 3, 0);
    const std::string name = "deploy_" + kits[j];
    b.variable(name, Domain::kInteger, upper[j], "service kits " + title(kits[j]) + " deployed",
               "kits");
    b.objective(name, coef(rng, spec));
  }
  for (int e = 0; e < e_count; ++e) {
    CoefficientMap row;
    double full = 0.0;
    for (int j = 0; j < n; ++j) {
      if (!covers[j][e]) continue;
      row["deploy_" + kits[j]] = 1.0;
      full += upper[j];
    }
    b.row("cover_" + districts[e], row, Comparator::kGe,
          std::max(1.0, std::round(rng.uniform(0.6, 0.85) * full)),
          "district " + title(districts[e]) + " coverage", "kits");
  }
  return b.finish();
}

// ---------------------------------------------------------------- pump

double significant4(double x) {
  if (x == 0.0) return 0.0;
  const int digits = 3 - static_cast<int>(std::floor(std::log10(std::abs(x))));
  const double scale = std::pow(10.0, digits);
  return std::round(x * scale) / scale;
}

// Largest per-pump flow at pressure `dp` with speed ratio <= 1 and power
// within the cap; 0 when no positive flow qualifies.
double max_flow_at(const PumpType& t, double dp) {
  const double disc = t.m4 * t.m4 + 4.0 * t.m6 * (t.m5 - dp);
  if (disc < 0.0) return 0.0;
  const double v_top = (t.m4 + std::sqrt(disc)) / (2.0 * t.m6);
  double best = 0.0;
  constexpr int kSteps = 400;
  for (int s = 1; s <= kSteps; ++s) {
    const double v = v_top * s / kSteps;
    const double b = t.m4 * v;
    const double r = (-b + std::sqrt(b * b + 4.0 * t.m5 * (t.m6 * v * v + dp))) / (2.0 * t.m5);
    const double power = t.m1 * r * r * r + t.m2 * r * r * v - t.m3 * r * v * v;
    if (r <= 1.0 + 1e-12 && power >= 0.0 && power <= t.max_power) best = v;
  }
  return best;
}

Draft pump(const TemplateSpec& spec, Rng& rng, const Shape& shape) {
  const PumpInstance base = worked_pump_instance();
  PumpInstance p;
  p.max_series = spec.max_series;
  p.max_parallel = spec.max_parallel;
  p.max_speed = std::round(base.max_speed * rng.uniform(0.8, 1.2));
  auto jitter = [&](double v) {
    return significant4(v * rng.uniform(spec.coefficient_min, spec.coefficient_max));
  };
  for (int i = 0; i < shape.a; ++i) {
    const PumpType& t = rng.pick(base.types);
    p.types.push_back({jitter(t.m1), jitter(t.m2), jitter(t.m3), jitter(t.m4), jitter(t.m5),
                       jitter(t.m6), std::round(jitter(t.fixed_cost)),
                       std::round(jitter(t.power_cost)), std::round(jitter(t.max_power))});
  }
  double min_m5 = p.types[0].m5;
  for (const auto& t : p.types) min_m5 = std::min(min_m5, t.m5);
  p.total_pressure = std::round(p.max_series * rng.uniform(0.85, 0.98) * min_m5);
  const double per_pump = p.total_pressure / p.max_series;
  double reach = 0.0;
  for (const auto& t : p.types) reach += max_flow_at(t, per_pump);
  double share = 0.0;
  if (p.max_parallel == 1) {
    share = shape.a == 1 ? rng.uniform(0.5, 0.9) : rng.uniform(0.75, 0.95);
  } else {
    share = rng.uniform(1.2, 1.6);
  }
  p.total_flow = std::max(1.0, std::round(share * reach));
  Draft d;
  d.formulation = make_pump_formulation(p);
  d.metadata = pump_metadata(p, scenario(rng, spec, kPumpScenarios));
  d.difficulty = spec.family;
  return d;
}

}  // namespace

bool family_size_feasible(const TemplateSpec& spec) { return !admissible(spec).empty(); }

Draft sample_family(const TemplateSpec& spec, Rng& rng) {
  if (spec.category == Category::kPump && spec.fixed_pump) {
    Draft d;
    d.formulation = make_pump_formulation(*spec.fixed_pump);
    d.metadata = pump_metadata(*spec.fixed_pump, scenario(rng, spec, kPumpScenarios));
    d.difficulty = spec.family;
    return d;
  }
  const auto shapes = admissible(spec);
  if (shapes.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "family '" + spec.family + "' has no structure within the size range");
  }
  const Shape& shape = rng.pick(shapes);
  const std::string& f = spec.family;
  if (spec.category == Category::kPump) return pump(spec, rng, shape);
  if (f == "resource-allocation") return resource_allocation(spec, rng, shape);
  if (f == "production") return production(spec, rng, shape);
  if (f == "blending") return blending(spec, rng, shape);
  if (f == "assignment") return assignment(spec, rng, shape);
  if (f == "scheduling") return scheduling(spec, rng, shape);
  if (f == "packing") return packing(spec, rng, shape);
  if (f == "routing") return routing(spec, rng, shape);
  if (f == "network-flows") return network_flows(spec, rng, shape);
  if (f == "integer-program") return integer_program(spec, rng, shape);
  if (f == "production-planning") return production_planning(spec, rng, shape);
  if (f == "knapsack") return knapsack(spec, rng, shape);
  if (f == "set-covering") return set_covering(spec, rng, shape);
  throw Error(ErrorCode::kInvalidArgument, "unknown family '" + f + "'");
}

}  // namespace autoform::internal
