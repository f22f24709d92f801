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

#include "autoform/solver/pump.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <string>

#include "autoform/common/error.h"

namespace autoform {
namespace {

constexpr int kScanPoints = 512;
constexpr int kBisections = 60;
constexpr double kGolden = 0.6180339887498949;

void check_domain(double speed, double max_speed, double flow) {
  if (!(max_speed > 0.0)) {
    throw Error(ErrorCode::kDomain, "max speed must be positive");
  }
  if (!(speed >= 0.0) || speed > max_speed) {
    throw Error(ErrorCode::kDomain, "speed " + std::to_string(speed) +
                                        " outside [0, " + std::to_string(max_speed) + "]");
  }
  if (!(flow >= 0.0)) {
    throw Error(ErrorCode::kDomain, "flow must be non-negative, got " + std::to_string(flow));
  }
}

// Speed ratio delivering `dp` at per-pump flow v: the positive root of
// m5 r^2 + m4 v r - (m6 v^2 + dp) = 0.
double ratio_for(const PumpType& t, double v, double dp) {
  const double b = t.m4 * v;
  const double c = t.m6 * v * v + dp;
  return (-b + std::sqrt(b * b + 4.0 * t.m5 * c)) / (2.0 * t.m5);
}

// One active type reduced to its cost curve in the per-pump flow.
struct Curve {
  const PumpType* type = nullptr;
  int index = 0;
  int series = 1;
  int parallel = 1;
  double dp = 0.0;  // pressure per pump
  double lo = 0.0;  // feasible per-pump flow range
  double hi = 0.0;

  double ratio(double v) const { return ratio_for(*type, v, dp); }
  double power(double v) const { return power_at_ratio(*type, ratio(v), v); }
  double cost(double v) const {
    return series * parallel * (type->fixed_cost + type->power_cost * power(v));
  }
  bool power_ok(double v) const {
    const double p = power(v);
    return p >= 0.0 && p <= type->max_power;
  }
};

// Per-pump flow range where the speed ratio stays <= 1, before the power
// caps are applied. Throws kInfeasiblePressure if dp is out of reach.
std::pair<double, double> speed_window(const PumpType& t, double dp) {
  const double disc = t.m4 * t.m4 + 4.0 * t.m6 * (t.m5 - dp);
  if (disc < 0.0) {
    throw Error(ErrorCode::kInfeasiblePressure,
                "required pressure " + std::to_string(dp) +
                    " exceeds the maximum " + std::to_string(max_pump_pressure(t)));
  }
  const double root = std::sqrt(disc);
  return {std::max(0.0, (t.m4 - root) / (2.0 * t.m6)), (t.m4 + root) / (2.0 * t.m6)};
}

// Largest contiguous sub-interval of [lo, hi] where 0 <= P <= max_power,
// located on a scan and sharpened by bisection. Returns false if empty.
bool power_window(const Curve& c, double lo, double hi, double* out_lo, double* out_hi) {
  if (hi < lo) return false;
  if (hi - lo <= 0.0) {
    if (!c.power_ok(lo)) return false;
    *out_lo = *out_hi = lo;
    return true;
  }
  std::vector<char> ok(kScanPoints + 1);
  auto at = [&](int k) { return lo + (hi - lo) * k / kScanPoints; };
  for (int k = 0; k <= kScanPoints; ++k) ok[static_cast<std::size_t>(k)] = c.power_ok(at(k));
  int best_start = -1;
  int best_len = 0;
  for (int k = 0; k <= kScanPoints;) {
    if (!ok[static_cast<std::size_t>(k)]) {
      ++k;
      continue;
    }
    int j = k;
    while (j + 1 <= kScanPoints && ok[static_cast<std::size_t>(j + 1)]) ++j;
    if (j - k + 1 > best_len) {
      best_len = j - k + 1;
      best_start = k;
    }
    k = j + 1;
  }
  if (best_start < 0) return false;
  const int best_end = best_start + best_len - 1;
  double a = at(best_start);
  double b = at(best_end);
  if (best_start > 0) {
    double bad = at(best_start - 1);
    double good = a;
    for (int it = 0; it < kBisections; ++it) {
      const double mid = 0.5 * (bad + good);
      (c.power_ok(mid) ? good : bad) = mid;
    }
    a = good;
  }
  if (best_end < kScanPoints) {
    double good = b;
    double bad = at(best_end + 1);
    for (int it = 0; it < kBisections; ++it) {
      const double mid = 0.5 * (bad + good);
      (c.power_ok(mid) ? good : bad) = mid;
    }
    b = good;
  }
  *out_lo = a;
  *out_hi = b;
  return true;
}

Curve make_curve(const PumpInstance& inst, const PumpPatternEntry& e) {
  Curve c;
  c.type = &inst.types[static_cast<std::size_t>(e.type)];
  c.index = e.type;
  c.series = e.series;
  c.parallel = e.parallel;
  c.dp = inst.total_pressure / e.series;
  auto [lo, hi] = speed_window(*c.type, c.dp);
  hi = std::min(hi, inst.total_flow / e.parallel);
  if (!power_window(c, lo, hi, &c.lo, &c.hi)) {
    throw Error(ErrorCode::kInfeasibleFlow,
                "type " + std::to_string(e.type) +
                    " has no flow meeting its speed and power caps");
  }
  return c;
}

double total_cost(const std::vector<Curve>& curves, const std::vector<double>& q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < curves.size(); ++i) sum += curves[i].cost(q[i]);
  return sum;
}

// Best transfer f of flow from b to a within [f_lo, f_hi].
double best_transfer(const Curve& a, const Curve& b, double qa, double qb, double f_lo,
                     double f_hi, const PumpSolverOptions& opt) {
  auto g = [&](double f) {
    return a.cost(std::clamp(qa + f / a.parallel, a.lo, a.hi)) +
           b.cost(std::clamp(qb - f / b.parallel, b.lo, b.hi));
  };
  const int n = std::max(2, opt.grid_points);
  int best_k = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    const double f = f_lo + (f_hi - f_lo) * k / (n - 1);
    const double v = g(f);
    if (v < best_val) {
      best_val = v;
      best_k = k;
    }
  }
  double left = f_lo + (f_hi - f_lo) * std::max(0, best_k - 1) / (n - 1);
  double right = f_lo + (f_hi - f_lo) * std::min(n - 1, best_k + 1) / (n - 1);
  double x1 = right - kGolden * (right - left);
  double x2 = left + kGolden * (right - left);
  double g1 = g(x1);
  double g2 = g(x2);
  for (int it = 0; it < opt.golden_iterations; ++it) {
    if (g1 <= g2) {
      right = x2;
      x2 = x1;
      g2 = g1;
      x1 = right - kGolden * (right - left);
      g1 = g(x1);
    } else {
      left = x1;
      x1 = x2;
      g1 = g2;
      x2 = left + kGolden * (right - left);
      g2 = g(x2);
    }
  }
  double f = best_k * (f_hi - f_lo) / (n - 1) + f_lo;
  double val = best_val;
  if (g1 < val) {
    f = x1;
    val = g1;
  }
  if (g2 < val) f = x2;
  return f;
}

std::vector<double> optimize_flows(const std::vector<Curve>& curves, double total_flow,
                                   const PumpSolverOptions& opt) {
  const std::size_t n = curves.size();
  double lo_sum = 0.0;
  double span = 0.0;
  for (const auto& c : curves) {
    lo_sum += c.parallel * c.lo;
    span += c.parallel * (c.hi - c.lo);
  }
  const double slack = 1e-9 * total_flow;
  if (lo_sum > total_flow + slack || lo_sum + span < total_flow - slack) {
    throw Error(ErrorCode::kInfeasibleFlow,
                "caps make the total flow " + std::to_string(total_flow) + " unreachable");
  }
  const double theta = span > 0.0 ? std::clamp((total_flow - lo_sum) / span, 0.0, 1.0) : 0.0;
  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = curves[i].lo + theta * (curves[i].hi - curves[i].lo);
  }
  if (n == 1) {
    q[0] = std::clamp(total_flow / curves[0].parallel, curves[0].lo, curves[0].hi);
    return q;
  }
  double cost = total_cost(curves, q);
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    const double start = cost;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const Curve& ca = curves[a];
        const Curve& cb = curves[b];
        const double f_lo = std::max(ca.parallel * (ca.lo - q[a]), cb.parallel * (q[b] - cb.hi));
        const double f_hi = std::min(ca.parallel * (ca.hi - q[a]), cb.parallel * (q[b] - cb.lo));
        if (!(f_hi > f_lo)) continue;
        const double f = best_transfer(ca, cb, q[a], q[b], f_lo, f_hi, opt);
        const double na = std::clamp(q[a] + f / ca.parallel, ca.lo, ca.hi);
        const double nb = std::clamp(q[b] - f / cb.parallel, cb.lo, cb.hi);
        const double before = ca.cost(q[a]) + cb.cost(q[b]);
        const double after = ca.cost(na) + cb.cost(nb);
        if (after < before) {
          q[a] = na;
          q[b] = nb;
          cost += after - before;
        }
      }
    }
    if (start - cost <= 1e-12 * std::abs(start)) break;
  }
  return q;
}

void check_pattern(const PumpInstance& inst, const std::vector<PumpPatternEntry>& pattern) {
  if (pattern.empty()) throw Error(ErrorCode::kInvalidArgument, "empty pump pattern");
  std::set<int> seen;
  for (const auto& e : pattern) {
    if (e.type < 0 || e.type >= static_cast<int>(inst.types.size())) {
      throw Error(ErrorCode::kInvalidArgument, "pattern references unknown type " +
                                                   std::to_string(e.type));
    }
    if (!seen.insert(e.type).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "pattern lists type " + std::to_string(e.type) + " twice");
    }
    if (e.series < 1 || e.series > inst.max_series || e.parallel < 1 ||
        e.parallel > inst.max_parallel) {
      throw Error(ErrorCode::kInvalidArgument,
                  "pattern counts for type " + std::to_string(e.type) + " out of range");
    }
  }
}

PumpSolveResult solve_curves(const PumpInstance& inst, const std::vector<Curve>& curves,
                             const PumpSolverOptions& opt) {
  const std::vector<double> q = optimize_flows(curves, inst.total_flow, opt);
  PumpSolveResult result;
  result.config.types.assign(inst.types.size(), PumpTypeState{});
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const Curve& c = curves[i];
    PumpTypeState& s = result.config.types[static_cast<std::size_t>(c.index)];
    const double r = std::min(1.0, c.ratio(q[i]));
    s.active = true;
    s.series = c.series;
    s.parallel = c.parallel;
    s.flow = q[i];
    s.speed = r * inst.max_speed;
    s.power = std::min(power_at_ratio(*c.type, r, q[i]), c.type->max_power);
    s.pressure = c.dp;
    s.fraction = q[i] * c.parallel / inst.total_flow;
  }
  result.cost = pump_total_cost(inst, result.config);
  return result;
}

// Cached per (type, series, parallel) curve or the reason it is unusable.
struct Option {
  bool usable = false;
  Curve curve;
  double min_cost = 0.0;  // lower bound on this entry's contribution
};

}  // namespace

double pump_power(const PumpType& type, double speed, double max_speed, double flow) {
  check_domain(speed, max_speed, flow);
  return power_at_ratio(type, speed / max_speed, flow);
}

double pump_pressure(const PumpType& type, double speed, double max_speed, double flow) {
  check_domain(speed, max_speed, flow);
  return pressure_at_ratio(type, speed / max_speed, flow);
}

int PumpConfig::active_count() const {
  int n = 0;
  for (const auto& t : types) n += t.active ? 1 : 0;
  return n;
}

int PumpConfig::total_pumps() const {
  int n = 0;
  for (const auto& t : types) n += t.active ? t.series * t.parallel : 0;
  return n;
}

double pump_total_cost(const PumpInstance& instance, const PumpConfig& config) {
  double cost = 0.0;
  for (std::size_t i = 0; i < config.types.size() && i < instance.types.size(); ++i) {
    const PumpTypeState& s = config.types[i];
    if (!s.active) continue;
    const PumpType& t = instance.types[i];
    cost += (t.fixed_cost + t.power_cost * s.power) * s.parallel * s.series;
  }
  return cost;
}

double max_pump_pressure(const PumpType& type) {
  return type.m5 + type.m4 * type.m4 / (4.0 * type.m6);
}

PumpSolveResult solve_pump_continuous(const PumpInstance& instance,
                                      const std::vector<PumpPatternEntry>& pattern,
                                      const PumpSolverOptions& options) {
  validate_pump_instance(instance);
  check_pattern(instance, pattern);
  std::vector<PumpPatternEntry> sorted = pattern;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.type < b.type; });
  std::vector<Curve> curves;
  for (const auto& e : sorted) curves.push_back(make_curve(instance, e));
  return solve_curves(instance, curves, options);
}

PumpSolveResult solve_pump(const PumpInstance& instance, const PumpSolverOptions& options) {
  validate_pump_instance(instance);
  const int n = static_cast<int>(instance.types.size());
  const int per_type = instance.max_series * instance.max_parallel;
  double patterns = std::pow(1.0 + per_type, n) - 1.0;
  if (patterns > static_cast<double>(options.max_patterns)) {
    throw Error(ErrorCode::kScaleLimit,
                "pump enumeration needs " + std::to_string(static_cast<long long>(patterns)) +
                    " patterns, limit is " + std::to_string(options.max_patterns));
  }

  // options[i][k]: k = (series - 1) * max_parallel + (parallel - 1).
  std::vector<std::vector<Option>> opts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const PumpType& t = instance.types[static_cast<std::size_t>(i)];
    for (int s = 1; s <= instance.max_series; ++s) {
      for (int p = 1; p <= instance.max_parallel; ++p) {
        Option o;
        try {
          o.curve = make_curve(instance, {i, s, p});
          o.usable = true;
          double pmin = std::numeric_limits<double>::infinity();
          for (int k = 0; k <= kScanPoints; ++k) {
            const double v = o.curve.lo + (o.curve.hi - o.curve.lo) * k / kScanPoints;
            pmin = std::min(pmin, o.curve.power(v));
          }
          pmin = std::max(0.0, pmin - 0.01 * std::abs(pmin));
          o.min_cost = s * p * (t.fixed_cost + t.power_cost * pmin);
        } catch (const Error&) {
          o.usable = false;
        }
        opts[static_cast<std::size_t>(i)].push_back(o);
      }
    }
  }

  // Odometer over choices: 0 = off, k + 1 = opts[i][k]; type 0 most significant.
  std::vector<int> choice(static_cast<std::size_t>(n), 0);
  bool found = false;
  PumpSolveResult best;
  best.cost = std::numeric_limits<double>::infinity();
  int best_pumps = 0;
  auto advance = [&]() {
    for (int i = n - 1; i >= 0; --i) {
      int& c = choice[static_cast<std::size_t>(i)];
      if (c < per_type) {
        ++c;
        return true;
      }
      c = 0;
    }
    return false;
  };
  while (advance()) {
    std::vector<Curve> curves;
    double bound = 0.0;
    double capacity = 0.0;
    double floor_flow = 0.0;
    int pumps = 0;
    bool usable = true;
    for (int i = 0; i < n && usable; ++i) {
      const int c = choice[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      const Option& o = opts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c - 1)];
      if (!o.usable) {
        usable = false;
        break;
      }
      curves.push_back(o.curve);
      bound += o.min_cost;
      capacity += o.curve.parallel * o.curve.hi;
      floor_flow += o.curve.parallel * o.curve.lo;
      pumps += o.curve.series * o.curve.parallel;
    }
    if (!usable) continue;
    const double slack = 1e-9 * instance.total_flow;
    if (capacity < instance.total_flow - slack || floor_flow > instance.total_flow + slack) {
      continue;
    }
    if (found && bound > best.cost * (1.0 + 1e-9)) continue;
    PumpSolveResult r;
    try {
      r = solve_curves(instance, curves, options);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInfeasibleFlow) continue;
      throw;
    }
    const double tie = 1e-9 * std::max(1.0, std::abs(best.cost));
    if (!found || r.cost < best.cost - tie ||
        (std::abs(r.cost - best.cost) <= tie && pumps < best_pumps)) {
      best = std::move(r);
      best_pumps = pumps;
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorCode::kInfeasible, "no pump pattern can meet the flow and pressure targets");
  }
  return best;
}

Assignment flatten_pump_config(const PumpInstance& instance, const PumpConfig& config) {
  Assignment a;
  for (int i = 0; i < static_cast<int>(instance.types.size()); ++i) {
    PumpTypeState s;
    if (static_cast<std::size_t>(i) < config.types.size()) {
      s = config.types[static_cast<std::size_t>(i)];
    }
    if (!s.active) s = PumpTypeState{};
    a[pump_var_power(i)] = s.power;
    a[pump_var_speed(i)] = s.speed;
    a[pump_var_pressure(i)] = s.pressure;
    a[pump_var_flow(i)] = s.flow;
    a[pump_var_fraction(i)] = s.fraction;
    a[pump_var_parallel(i)] = s.parallel;
    a[pump_var_series(i)] = s.series;
    a[pump_var_active(i)] = s.active ? 1.0 : 0.0;
  }
  return a;
}

PumpConfig unflatten_pump_config(const PumpInstance& instance, const Assignment& point) {
  auto get = [&](const std::string& name) {
    auto it = point.find(name);
    if (it == point.end()) {
      throw Error(ErrorCode::kMissingVariable, "point does not assign variable '" + name + "'");
    }
    return it->second;
  };
  PumpConfig config;
  for (int i = 0; i < static_cast<int>(instance.types.size()); ++i) {
    PumpTypeState s;
    s.active = get(pump_var_active(i)) > 0.5;
    s.series = static_cast<int>(std::lround(get(pump_var_series(i))));
    s.parallel = static_cast<int>(std::lround(get(pump_var_parallel(i))));
    s.speed = get(pump_var_speed(i));
    s.flow = get(pump_var_flow(i));
    s.power = get(pump_var_power(i));
    s.pressure = get(pump_var_pressure(i));
    s.fraction = get(pump_var_fraction(i));
    config.types.push_back(s);
  }
  return config;
}

std::string format_pump_table(const PumpConfig& config, double cost) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-6s %-7s %-7s %-9s %-10s %-10s %s\n", "Pump", "On/Off",
                "Series", "Parallel", "Power", "Speed", "Flow Fraction");
  out += line;
  for (std::size_t i = 0; i < config.types.size(); ++i) {
    const PumpTypeState& s = config.types[i];
    std::snprintf(line, sizeof line, "%-6zu %-7s %-7d %-9d %-10.2f %-10.2f %.4f\n", i + 1,
                  s.active ? "On" : "Off", s.series, s.parallel, s.power, s.speed,
                  s.fraction);
    out += line;
  }
  std::snprintf(line, sizeof line, "Total Objective (Cost): $%.2f\n", cost);
  out += line;
  return out;
}

}  // namespace autoform
