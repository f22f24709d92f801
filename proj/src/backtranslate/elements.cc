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
#include <cctype>
#include <cmath>
#include <string>

#include "autoform/common/error.h"
#include "autoform/common/numeric_text.h"
#include "internal.h"

namespace autoform {
namespace {

const char* const kPumpScalars[] = {"total_flow", "total_pressure", "max_speed", "max_series",
                                    "max_parallel"};
const char* const kPumpFields[] = {"m1", "m2", "m3", "m4", "m5", "m6",
                                   "fixed_cost", "power_cost", "max_power"};
const char* const kEquations[] = {"power", "pressure", "flow-balance", "pressure-balance"};

double pump_scalar(const PumpInstance& p, const std::string& name) {
  if (name == "total_flow") return p.total_flow;
  if (name == "total_pressure") return p.total_pressure;
  if (name == "max_speed") return p.max_speed;
  if (name == "max_series") return p.max_series;
  return p.max_parallel;
}

double pump_field(const PumpType& t, const std::string& name) {
  if (name == "m1") return t.m1;
  if (name == "m2") return t.m2;
  if (name == "m3") return t.m3;
  if (name == "m4") return t.m4;
  if (name == "m5") return t.m5;
  if (name == "m6") return t.m6;
  if (name == "fixed_cost") return t.fixed_cost;
  if (name == "power_cost") return t.power_cost;
  return t.max_power;
}

const std::set<std::string>& stopwords() {
  static const std::set<std::string> s = {
      "the", "of",   "a",    "an",   "and",   "or",    "in",    "on",   "for",  "to",
      "per", "each", "is",   "be",   "what",  "which", "by",    "from", "at",   "with",
      "unit", "total", "number", "how", "many", "much", "much", "it",   "its",  "are",
      "can", "you",  "we",   "our",  "there", "this",  "that",  "give", "tell", "me"};
  return s;
}

std::set<std::string> tokens_of(const std::string& text) {
  std::set<std::string> out;
  for (auto& t : word_tokens(text)) {
    if (!stopwords().contains(t)) out.insert(t);
  }
  return out;
}

std::string constraint_id(const FormulationIR& ir, std::size_t k) {
  const auto& name = ir.constraints[k].name;
  return "constraint:" + (name.empty() ? "row_" + std::to_string(k) : name);
}

}  // namespace

namespace internal {

std::string type_letter(int i) { return std::string(1, static_cast<char>('A' + i)); }

bool is_within(const std::string& id, const std::string& ancestor) {
  return id == ancestor ||
         (id.size() > ancestor.size() && id.compare(0, ancestor.size(), ancestor) == 0 &&
          id[ancestor.size()] == '/');
}

bool contains_identifier(const std::string& text, const std::string& name) {
  auto ident = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  };
  for (std::size_t pos = text.find(name); pos != std::string::npos;
       pos = text.find(name, pos + 1)) {
    const bool left = pos == 0 || !ident(text[pos - 1]);
    const std::size_t end = pos + name.size();
    const bool right = end >= text.size() || !ident(text[end]);
    if (left && right) return true;
  }
  return false;
}

namespace {

std::vector<std::set<std::string>> raw_keyword_groups(const WorldDescriptor& w,
                                                      const std::string& id) {
  const Metadata& m = w.metadata;
  auto var_group = [&](const std::string& name) {
    std::set<std::string> g = tokens_of(name);
    if (auto it = m.variables.find(name); it != m.variables.end()) {
      g.merge(tokens_of(it->second.label));
    }
    return g;
  };
  auto constraint_group = [&](const std::string& name) {
    std::set<std::string> g = tokens_of(name);
    if (auto it = m.constraints.find(name); it != m.constraints.end()) {
      g.merge(tokens_of(it->second.label));
      g.merge(tokens_of(it->second.unit));
    }
    return g;
  };
  const std::set<std::string> equation_words = {"equation", "formula", "curve", "relationship",
                                                "relation", "expression"};
  if (id == "objective") {
    std::set<std::string> g = tokens_of(m.objective_label);
    g.insert("objective");
    return {g};
  }
  if (id.rfind("objective/", 0) == 0) {
    std::set<std::string> owner = tokens_of(m.objective_label);
    owner.insert({"objective", "cost", "price", "profit", "revenue", "margin", "return",
                  "contribution", "penalty"});
    const std::string rest = id.substr(10);
    if (rest == "constant") return {owner, {"fixed", "constant"}};
    return {owner, var_group(rest)};
  }
  if (id.rfind("variable:", 0) == 0) return {var_group(id.substr(9))};
  if (id.rfind("bound:", 0) == 0) return {var_group(id.substr(6))};
  if (id.rfind("lower:", 0) == 0) return {var_group(id.substr(6))};
  if (id.rfind("constraint:", 0) == 0) {
    const std::string rest = id.substr(11);
    const auto slash = rest.find('/');
    const std::string name = rest.substr(0, slash);
    if (slash == std::string::npos) return {constraint_group(name)};
    const std::string sub = rest.substr(slash + 1);
    if (sub == "rhs") return {constraint_group(name)};
    return {constraint_group(name), var_group(sub)};
  }
  if (id.rfind("pump:", 0) == 0) {
    const std::string s = id.substr(5);
    const std::set<std::string> overall = {"total", "required", "overall", "demand", "target"};
    if (s == "total_flow") return {{"flow"}, overall};
    if (s == "total_pressure") return {{"pressure"}, overall};
    if (s == "max_speed") return {{"speed", "rpm"}};
    if (s == "max_series") return {{"series"}};
    return {{"parallel"}};
  }
  if (id.rfind("pump-type:", 0) == 0) {
    const std::string rest = id.substr(10);
    const auto slash = rest.find('/');
    const int i = std::stoi(rest.substr(0, slash));
    std::string letter = type_letter(i);
    letter[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(letter[0])));
    std::vector<std::set<std::string>> groups = {{"type", "pump"}, {letter}};
    if (slash == std::string::npos) return groups;
    const std::string f = rest.substr(slash + 1);
    if (f == "fixed_cost") {
      groups.push_back({"fixed"});
    } else if (f == "power_cost") {
      groups.push_back({"power", "energy", "electricity"});
      groups.push_back({"cost", "price", "rate"});
    } else if (f == "max_power") {
      groups.push_back({"power"});
      groups.push_back({"maximum", "max", "limit", "cap", "rating", "capacity"});
    } else {
      groups.push_back({f});
    }
    return groups;
  }
  if (id == "equation:power") return {{"power"}, equation_words};
  if (id == "equation:pressure") return {{"pressure"}, equation_words};
  if (id == "equation:flow-balance") {
    return {{"flow"}, {"split", "share", "balance", "fraction", "divided", "distribute"}};
  }
  if (id == "equation:pressure-balance") return {{"series"}, {"pressure"}};
  return {};
}

}  // namespace

std::vector<std::set<std::string>> keyword_groups(const WorldDescriptor& w,
                                                  const std::string& id) {
  auto groups = raw_keyword_groups(w, id);
  for (auto& g : groups) {
    std::set<std::string> normalized;
    for (const auto& k : g) {
      for (auto& t : word_tokens(k)) normalized.insert(t);
    }
    g = std::move(normalized);
  }
  return groups;
}

}  // namespace internal

std::string_view to_string(ElementKind k) {
  switch (k) {
    case ElementKind::kObjective: return "objective";
    case ElementKind::kVariable: return "variable";
    case ElementKind::kConstraint: return "constraint";
    case ElementKind::kCoefficient: return "coefficient";
    case ElementKind::kBound: return "bound";
    case ElementKind::kParameter: return "parameter";
    case ElementKind::kPumpType: return "pump-type";
    case ElementKind::kEquation: return "equation";
  }
  return "parameter";
}

ElementKind parse_element_kind(std::string_view s) {
  for (ElementKind k : {ElementKind::kObjective, ElementKind::kVariable, ElementKind::kConstraint,
                        ElementKind::kCoefficient, ElementKind::kBound, ElementKind::kParameter,
                        ElementKind::kPumpType, ElementKind::kEquation}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorCode::kParse, "unknown element kind '" + std::string(s) + "'");
}

std::vector<Element> formulation_elements(const WorldDescriptor& w) {
  const FormulationIR& ir = w.formulation;
  std::vector<Element> out;
  if (ir.category == Category::kPump && ir.pump) {
    const PumpInstance& p = *ir.pump;
    for (const char* s : kPumpScalars) {
      const bool bound = std::string(s) != "total_flow" && std::string(s) != "total_pressure";
      out.push_back({std::string("pump:") + s,
                     bound ? ElementKind::kBound : ElementKind::kParameter, "",
                     pump_scalar(p, s)});
    }
    for (int i = 0; i < static_cast<int>(p.types.size()); ++i) {
      const std::string type_id = "pump-type:" + std::to_string(i);
      out.push_back({type_id, ElementKind::kPumpType, "", std::nullopt});
      for (const char* f : kPumpFields) {
        const bool coefficient = f[0] == 'm' && f[1] != 'a';
        out.push_back({type_id + "/" + f,
                       coefficient ? ElementKind::kCoefficient : ElementKind::kParameter, type_id,
                       pump_field(p.types[static_cast<std::size_t>(i)], f)});
      }
    }
    for (const auto& v : ir.variables) {
      out.push_back({"variable:" + v.name, ElementKind::kVariable, "", std::nullopt});
    }
    for (const char* e : kEquations) {
      out.push_back({std::string("equation:") + e, ElementKind::kEquation, "", std::nullopt});
    }
    out.push_back({"objective", ElementKind::kObjective, "", std::nullopt});
    return out;
  }
  for (const auto& v : ir.variables) {
    const std::string vid = "variable:" + v.name;
    out.push_back({vid, ElementKind::kVariable, "", std::nullopt});
    if (v.upper && v.domain != Domain::kBinary) {
      out.push_back({"bound:" + v.name, ElementKind::kBound, vid, *v.upper});
    }
    if (v.lower != 0.0) out.push_back({"lower:" + v.name, ElementKind::kBound, vid, v.lower});
  }
  out.push_back({"objective", ElementKind::kObjective, "", std::nullopt});
  for (const auto& [name, c] : ir.objective.coefficients) {
    std::optional<double> value;
    if (std::abs(c) != 1.0) value = c;
    out.push_back({"objective/" + name, ElementKind::kCoefficient, "objective", value});
  }
  if (ir.objective.constant != 0.0) {
    out.push_back({"objective/constant", ElementKind::kParameter, "objective",
                   ir.objective.constant});
  }
  for (std::size_t k = 0; k < ir.constraints.size(); ++k) {
    const auto& c = ir.constraints[k];
    const std::string cid = constraint_id(ir, k);
    out.push_back({cid, ElementKind::kConstraint, "", std::nullopt});
    for (const auto& [name, a] : c.coefficients) {
      std::optional<double> value;
      if (std::abs(a) != 1.0) value = a;
      out.push_back({cid + "/" + name, ElementKind::kCoefficient, cid, value});
    }
    out.push_back({cid + "/rhs", ElementKind::kParameter, cid, c.rhs});
  }
  return out;
}

std::vector<Element> omittable_elements(const WorldDescriptor& w) {
  std::vector<Element> out;
  std::map<std::string, int> terms;
  for (const Element& e : formulation_elements(w)) {
    if (e.kind == ElementKind::kCoefficient && e.parent.rfind("constraint:", 0) == 0) {
      ++terms[e.parent];
    }
  }
  for (const Element& e : formulation_elements(w)) {
    switch (e.kind) {
      case ElementKind::kCoefficient:
        if (!e.value) break;
        if (e.parent.rfind("constraint:", 0) == 0 && terms[e.parent] < 2) break;
        out.push_back(e);
        break;
      case ElementKind::kBound:
      case ElementKind::kParameter:
      case ElementKind::kConstraint:
        out.push_back(e);
        break;
      case ElementKind::kEquation: {
        Element c = e;
        c.kind = ElementKind::kConstraint;
        out.push_back(c);
        break;
      }
      default:
        break;
    }
  }
  return out;
}

}  // namespace autoform
