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


#include <cctype>
#include <cmath>
#include <string>

#include "autoform/common/error.h"
#include "autoform/common/numeric_text.h"
#include "autoform/common/rng.h"
#include "internal.h"

namespace autoform {
namespace internal {
namespace {

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string humanize(std::string s) {
  for (char& c : s) {
    if (c == '_') c = ' ';
  }
  return s;
}

std::string with_article(const std::string& noun) {
  const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(noun.empty() ? 'x' : noun[0])));
  const bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  return (vowel ? "an " : "a ") + noun;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += (i + 1 == items.size()) ? (items.size() > 2 ? ", and " : " and ") : ", ";
    out += items[i];
  }
  return out;
}

class Writer {
 public:
  Writer(const WorldDescriptor& w, std::uint64_t style_seed, const std::set<std::string>& omitted)
      : w_(w), rng_(Rng::substream(style_seed, 0x7e57)), omitted_(omitted) {
    grouping_ = (style_seed % 2) == 1;
    for (const Element& e : formulation_elements(w)) parent_[e.id] = e.parent;
  }

  bool skip(const std::string& id) const {
    for (std::string cur = id; !cur.empty();) {
      if (omitted_.contains(cur)) return true;
      auto it = parent_.find(cur);
      cur = it == parent_.end() ? std::string() : it->second;
    }
    return false;
  }

  int variant(int n) { return static_cast<int>(rng_.integer(0, n - 1)); }

  // Context sentence joined onto the next emitted sentence with a semicolon.
  void lead_in(const std::string& sentence) { lead_in_ = sentence; }

  void emit(std::string sentence, const std::vector<std::string>& ids) {
    if (!lead_in_.empty()) {
      std::string head = lead_in_;
      if (head.back() == '.') head.pop_back();
      if (sentence.size() > 1 && std::isupper(static_cast<unsigned char>(sentence[0])) &&
          std::islower(static_cast<unsigned char>(sentence[1]))) {
        sentence[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(sentence[0])));
      }
      sentence = head + "; " + sentence;
      lead_in_.clear();
    }
    const int index = static_cast<int>(out_.sentences.size());
    out_.sentences.push_back(sentence);
    for (const auto& id : ids) out_.manifest[id].push_back(index);
  }

  std::string num(double v) const {
    return format_number(std::abs(v), grouping_ && std::abs(v) >= 10000.0);
  }

  std::string signed_num(double v) const { return (v < 0 ? "minus " : "") + num(v); }

  std::string amount(double v, const std::string& unit) const {
    if (unit == "$") return "$" + num(v);
    return num(v) + (unit.empty() ? "" : " " + unit);
  }

  const ElementInfo* var_info(const std::string& name) const {
    auto it = w_.metadata.variables.find(name);
    return it == w_.metadata.variables.end() ? nullptr : &it->second;
  }

  std::string constraint_label(const std::string& name) const {
    auto it = w_.metadata.constraints.find(name);
    if (it != w_.metadata.constraints.end() && !it->second.label.empty()) return it->second.label;
    return humanize(name);
  }

  std::string constraint_unit(const std::string& name) const {
    auto it = w_.metadata.constraints.find(name);
    return it == w_.metadata.constraints.end() ? "" : it->second.unit;
  }

  Rendered finish() { return std::move(out_); }

  const WorldDescriptor& w_;

 private:
  Rng rng_;
  const std::set<std::string>& omitted_;
  std::map<std::string, std::string> parent_;
  bool grouping_ = false;
  std::string lead_in_;
  Rendered out_;
};

std::string intro(Writer& wr) {
  const std::string& scenario = wr.w_.metadata.scenario;
  const int v = wr.variant(3);
  if (scenario.empty()) return "An organization is preparing its next operating plan.";
  switch (v) {
    case 0: return capitalize(with_article(scenario)) + " organization is preparing its next operating plan.";
    case 1: return "This planning problem comes from " + scenario + ".";
    default: return "Planners working in " + scenario + " need a decision model.";
  }
}

std::string constraint_sentence(Writer& wr, const LinearConstraint& c, const std::string& cid,
                                std::vector<std::string>& ids) {
  const int v = wr.variant(3);
  const int phrase = wr.variant(3);
  const std::string name = cid.substr(11);
  std::string terms;
  for (const auto& [var, a] : c.coefficients) {
    const std::string id = cid + "/" + var;
    if (wr.skip(id)) continue;
    ids.push_back(id);
    const std::string magnitude = std::abs(a) == 1.0 ? "" : wr.num(a) + " times ";
    if (terms.empty()) {
      terms = (a < 0 ? "minus " : "") + magnitude + var;
    } else {
      terms += (a < 0 ? " minus " : " plus ") + magnitude + var;
    }
  }
  if (terms.empty()) terms = "the combined usage";
  static const char* const kLe[] = {"must be at most", "cannot exceed", "is limited to at most"};
  static const char* const kGe[] = {"must be at least", "cannot fall below", "must reach at least"};
  static const char* const kEq[] = {"must equal", "must be exactly", "has to equal"};
  const char* cmp = c.comparator == Comparator::kLe   ? kLe[phrase]
                    : c.comparator == Comparator::kGe ? kGe[phrase]
                                                      : kEq[phrase];
  std::string rhs;
  const std::string rhs_id = cid + "/rhs";
  if (wr.skip(rhs_id)) {
    rhs = "an amount not stated here";
  } else {
    ids.push_back(rhs_id);
    const std::string unit = wr.constraint_unit(name);
    rhs = wr.signed_num(c.rhs) + (unit.empty() ? "" : " " + unit);
  }
  const std::string label = wr.constraint_label(name);
  const std::string body = terms + " " + cmp + " " + rhs + ".";
  switch (v) {
    case 0: return "For the " + label + ", " + body;
    case 1: return "The " + label + " constraint requires that " + body;
    default: return capitalize(label) + ": " + body;
  }
}

std::string objective_sentence(Writer& wr, std::vector<std::string>& ids) {
  const Objective& obj = wr.w_.formulation.objective;
  const Metadata& m = wr.w_.metadata;
  const int v = wr.variant(3);
  const std::string sense = obj.sense == Sense::kMax ? "maximize" : "minimize";
  const std::string label = m.objective_label.empty() ? "objective value" : m.objective_label;
  std::string lead;
  switch (v) {
    case 0: lead = "The goal is to " + sense + " the " + label; break;
    case 1: lead = "We want to " + sense + " the " + label; break;
    default: lead = "The objective is to " + sense + " the " + label; break;
  }
  std::vector<std::string> terms;
  for (const auto& [var, c] : obj.coefficients) {
    const std::string id = "objective/" + var;
    if (wr.skip(id)) continue;
    ids.push_back(id);
    terms.push_back(std::string(c < 0 ? "subtracts " : "adds ") +
                    wr.amount(c, m.objective_unit) + " for each unit of " + var);
  }
  if (obj.constant != 0.0 && !wr.skip("objective/constant")) {
    ids.push_back("objective/constant");
    terms.push_back(std::string(obj.constant < 0 ? "subtracts " : "adds ") + "a fixed " +
                    wr.amount(obj.constant, m.objective_unit));
  }
  if (terms.empty()) return lead + ".";
  return lead + ", which " + join_list(terms) + ".";
}

std::string variable_sentence(Writer& wr, const Variable& var, std::vector<std::string>& ids) {
  const int v = wr.variant(3);
  const ElementInfo* info = wr.var_info(var.name);
  const std::string label = info && !info->label.empty() ? info->label : humanize(var.name);
  const std::string unit = info ? info->unit : "";
  std::string s;
  switch (v) {
    case 0: s = "Let " + var.name + " be the " + label + (unit.empty() ? "" : ", measured in " + unit); break;
    case 1: s = "The decision " + var.name + " represents the " + label + (unit.empty() ? "" : " (in " + unit + ")"); break;
    default: s = "Use " + var.name + " for the " + label + (unit.empty() ? "" : ", counted in " + unit); break;
  }
  if (var.domain == Domain::kInteger) s += ", which must be a whole number";
  if (var.domain == Domain::kBinary) s += ", a yes-or-no choice";
  if (var.upper && var.domain != Domain::kBinary && !wr.skip("bound:" + var.name)) {
    ids.push_back("bound:" + var.name);
    static const char* const kCap[] = {", and it can be at most ", ", capped at ",
                                       ", up to a limit of "};
    s += kCap[v] + wr.num(*var.upper);
  }
  if (var.lower != 0.0 && !wr.skip("lower:" + var.name)) {
    ids.push_back("lower:" + var.name);
    s += ", and at least " + wr.signed_num(var.lower);
  }
  return s + ".";
}

void render_linear(Writer& wr) {
  const FormulationIR& ir = wr.w_.formulation;
  wr.lead_in(intro(wr));
  for (const auto& var : ir.variables) {
    std::vector<std::string> ids = {"variable:" + var.name};
    const std::string s = variable_sentence(wr, var, ids);
    if (!wr.skip(ids[0])) wr.emit(s, ids);
  }
  {
    std::vector<std::string> ids = {"objective"};
    const std::string s = objective_sentence(wr, ids);
    wr.emit(s, ids);
  }
  for (std::size_t k = 0; k < ir.constraints.size(); ++k) {
    const std::string& name = ir.constraints[k].name;
    const std::string cid = "constraint:" + (name.empty() ? "row_" + std::to_string(k) : name);
    std::vector<std::string> ids = {cid};
    const std::string s = constraint_sentence(wr, ir.constraints[k], cid, ids);
    if (!wr.skip(cid)) wr.emit(s, ids);
  }
}

void render_pump(Writer& wr) {
  const PumpInstance& p = *wr.w_.formulation.pump;
  const std::string& scenario = wr.w_.metadata.scenario;
  {
    const int v = wr.variant(2);
    const std::string where = scenario.empty() ? "an industrial site" : with_article(scenario);
    wr.lead_in(v == 0 ? "Engineers at " + where + " must design a pumping station."
                      : "A pumping station has to be designed for " + where + ".");
  }
  auto scalar = [&](const char* name, const std::vector<std::string>& variants) {
    const int v = wr.variant(static_cast<int>(variants.size()));
    const std::string id = std::string("pump:") + name;
    if (wr.skip(id)) return;
    std::string s = variants[static_cast<std::size_t>(v)];
    const double value = std::string(name) == "total_flow"       ? p.total_flow
                         : std::string(name) == "total_pressure" ? p.total_pressure
                         : std::string(name) == "max_speed"      ? p.max_speed
                         : std::string(name) == "max_series"     ? p.max_series
                                                                 : p.max_parallel;
    s.replace(s.find("{}"), 2, wr.num(value));
    wr.emit(s, {id});
  };
  scalar("total_flow", {"The station must deliver a total flow of {} units.",
                        "A total flow of {} units has to be delivered.",
                        "Required total flow: {} units."});
  scalar("total_pressure", {"The flow must be raised by a total pressure of {} units.",
                            "The network must provide a total pressure rise of {} units.",
                            "Required total pressure rise: {} units."});
  scalar("max_speed", {"No pump may run faster than {} RPM.", "The maximum pump speed is {} RPM.",
                       "Pump speeds are capped at {} RPM."});
  scalar("max_series", {"Each type can stack at most {} pumps in series.",
                        "At most {} pumps of one type may be placed in series.",
                        "The series count per type is limited to {}."});
  scalar("max_parallel", {"Each type can run at most {} pumps in parallel.",
                          "At most {} pumps of one type may operate in parallel.",
                          "The parallel count per type is limited to {}."});
  const int n = static_cast<int>(p.types.size());
  for (int i = 0; i < n; ++i) {
    const PumpType& t = p.types[static_cast<std::size_t>(i)];
    const std::string tid = "pump-type:" + std::to_string(i);
    const int v = wr.variant(3);
    std::vector<std::string> ids = {tid};
    std::vector<std::string> parts;
    auto field = [&](const char* f, const std::string& phrase) {
      const std::string id = tid + "/" + f;
      if (wr.skip(id)) return;
      ids.push_back(id);
      parts.push_back(phrase);
    };
    field("m1", "m1 = " + wr.num(t.m1));
    field("m2", "m2 = " + wr.num(t.m2));
    field("m3", "m3 = " + wr.num(t.m3));
    field("m4", "m4 = " + wr.num(t.m4));
    field("m5", "m5 = " + wr.num(t.m5));
    field("m6", "m6 = " + wr.num(t.m6));
    field("fixed_cost", "a fixed cost of $" + wr.num(t.fixed_cost) + " per pump");
    field("power_cost", "a power cost of $" + wr.num(t.power_cost) + " per kW");
    field("max_power", "a maximum power of " + wr.num(t.max_power) + " kW");
    static const char* const kLead[] = {"Pump type ", "Type ", "For type "};
    const std::string letter = type_letter(i);
    std::string lead = kLead[v] + letter;
    lead += v == 0 ? " has " : v == 1 ? " pumps come with " : " the data are ";
    wr.emit(lead + join_list(parts) + ".", ids);
  }
  for (int i = 0; i < n; ++i) {
    const std::string s = std::to_string(i);
    std::vector<std::string> ids;
    for (const auto& name : {pump_var_power(i), pump_var_speed(i), pump_var_pressure(i),
                             pump_var_flow(i), pump_var_fraction(i), pump_var_parallel(i),
                             pump_var_series(i), pump_var_active(i)}) {
      ids.push_back("variable:" + name);
    }
    wr.emit("For type " + type_letter(i) + ", the model uses " + pump_var_power(i) +
                " for the shaft power, " + pump_var_speed(i) + " for the speed, " +
                pump_var_pressure(i) + " for the pressure rise, " + pump_var_flow(i) +
                " for the flow per pump, " + pump_var_fraction(i) + " for the flow fraction, " +
                pump_var_parallel(i) + " for the pumps in parallel, " + pump_var_series(i) +
                " for the pumps in series, and " + pump_var_active(i) +
                " for the on/off switch.",
            ids);
  }
  auto equation = [&](const char* name, const std::string& text) {
    const std::string id = std::string("equation:") + name;
    if (!wr.skip(id)) wr.emit(text, {id});
  };
  equation("power",
           "The shaft power of one pump equals m1 times the speed ratio cubed, plus m2 times "
           "the squared speed ratio times its flow, minus m3 times the speed ratio times the "
           "squared flow, where the speed ratio is its speed divided by the maximum speed.");
  equation("pressure",
           "The pressure rise of one pump equals m4 times the speed ratio times its flow, plus "
           "m5 times the squared speed ratio, minus m6 times the squared flow.");
  equation("flow-balance",
           "The installed types share the total flow: the flow fractions sum to one, and each "
           "type's parallel count times its per-pump flow equals its fraction of the total "
           "flow.");
  equation("pressure-balance",
           "Within an installed type, the per-pump pressure rise times the series count must "
           "equal the total pressure, and a type that is not installed has no pumps, speed, "
           "power, pressure or flow.");
  wr.emit("The goal is to minimize the total cost, where every installed pump costs its "
          "type's fixed cost plus its power cost times its shaft power, counted over all "
          "pumps in series and in parallel.",
          {"objective"});
}

}  // namespace

Rendered render_sentences(const WorldDescriptor& w, std::uint64_t style_seed,
                          const std::set<std::string>& omitted) {
  Writer wr(w, style_seed, omitted);
  if (w.formulation.category == Category::kPump && w.formulation.pump) {
    render_pump(wr);
  } else {
    render_linear(wr);
  }
  return wr.finish();
}

std::string value_sentence(const WorldDescriptor& w, const std::string& id,
                           std::vector<double>& values) {
  values.clear();
  const auto elements = formulation_elements(w);
  for (const Element& e : elements) {
    if (e.value && is_within(e.id, id)) values.push_back(*e.value);
  }
  const Rendered full = render_sentences(w, 0, {});
  auto whole = [&]() -> std::string {
    auto it = full.manifest.find(id);
    if (it == full.manifest.end() || it->second.empty()) {
      throw Error(ErrorCode::kNotFound, "no rendered sentence for element '" + id + "'");
    }
    return full.sentences[static_cast<std::size_t>(it->second.front())];
  };
  Writer wr(w, 0, {});
  const Metadata& m = w.metadata;
  double value = values.empty() ? 0.0 : values.front();
  if (id.rfind("objective/", 0) == 0) {
    const std::string var = id.substr(10);
    if (var == "constant") {
      return std::string("The objective also ") + (value < 0 ? "subtracts" : "adds") +
             " a fixed " + wr.amount(value, m.objective_unit) + ".";
    }
    return "In the objective, each unit of " + var + (value < 0 ? " subtracts " : " adds ") +
           wr.amount(value, m.objective_unit) + ".";
  }
  if (id.rfind("bound:", 0) == 0) {
    return "The variable " + id.substr(6) + " can be at most " + wr.num(value) + ".";
  }
  if (id.rfind("lower:", 0) == 0) {
    return "The variable " + id.substr(6) + " must be at least " + wr.signed_num(value) + ".";
  }
  if (id.rfind("constraint:", 0) == 0 && id.find('/') != std::string::npos) {
    const auto slash = id.find('/');
    const std::string name = id.substr(11, slash - 11);
    const std::string sub = id.substr(slash + 1);
    const std::string label = wr.constraint_label(name);
    if (sub == "rhs") {
      const std::string unit = wr.constraint_unit(name);
      return "The right-hand side of the " + label + " constraint is " + wr.signed_num(value) +
             (unit.empty() ? "" : " " + unit) + ".";
    }
    return "In the " + label + " constraint, the coefficient of " + sub + " is " +
           wr.signed_num(value) + ".";
  }
  if (id.rfind("pump-type:", 0) == 0 && id.find('/') != std::string::npos) {
    const auto slash = id.find('/');
    const int i = std::stoi(id.substr(10, slash - 10));
    const std::string f = id.substr(slash + 1);
    const std::string lead = "For pump type " + type_letter(i) + ", ";
    if (f == "fixed_cost") return lead + "the fixed cost is $" + wr.num(value) + " per pump.";
    if (f == "power_cost") return lead + "the power cost is $" + wr.num(value) + " per kW.";
    if (f == "max_power") return lead + "the maximum power is " + wr.num(value) + " kW.";
    return lead + f + " = " + wr.num(value) + ".";
  }
  return whole();
}

}  // namespace internal

Description render_description(const WorldDescriptor& w, std::uint64_t style_seed) {
  validate_formulation(w.formulation);
  if (w.formulation.category != Category::kPump && w.formulation.constraints.empty()) {
    throw Error(ErrorCode::kInvalidFormulation, "formulation has no constraints");
  }
  internal::Rendered r = internal::render_sentences(w, style_seed, {});
  Description d;
  d.text = join_sentences(r.sentences);
  d.manifest = std::move(r.manifest);
  d.scenario = w.metadata.scenario;
  d.variant = style_seed;
  return d;
}

}  // namespace autoform
