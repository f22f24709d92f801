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
#include <map>
#include <set>
#include <string>

#include "autoform/common/numeric_text.h"
#include "internal.h"

namespace autoform {
namespace {

using Manifest = std::map<std::string, std::vector<int>>;

const std::set<std::string> kMaxWords = {"maximize", "maximise", "maximizing", "maximising"};
const std::set<std::string> kMinWords = {"minimize", "minimise", "minimizing", "minimising"};

std::multiset<std::string> literal_keys(std::string_view text) {
  std::multiset<std::string> out;
  for (const auto& lit : extract_literals(text)) out.insert(literal_key(lit.value));
  return out;
}

std::set<std::string> token_set(std::string_view text) {
  auto t = word_tokens(text);
  return {t.begin(), t.end()};
}

bool intersects(const std::set<std::string>& a, const std::set<std::string>& b) {
  for (const auto& x : a) {
    if (b.contains(x)) return true;
  }
  return false;
}

class View {
 public:
  View(const Description& d, const WorldDescriptor& w)
      : sentences_(split_sentences(d.text)), text_(d.text) {
    aligned_ = d.manifest.empty();
    manifest_ = aligned_ ? align_manifest(d.text, w) : d.manifest;
  }

  bool aligned() const { return aligned_; }
  const Manifest& manifest() const { return manifest_; }
  int size() const { return static_cast<int>(sentences_.size()); }
  const std::string& text() const { return text_; }

  bool covered(const std::string& id) const {
    auto it = manifest_.find(id);
    if (it == manifest_.end() || it->second.empty()) return false;
    for (int i : it->second) {
      if (i < 0 || i >= size()) return false;
    }
    return true;
  }

  std::string span(const std::vector<int>& indices) const {
    std::string out;
    for (int i : indices) {
      if (i < 0 || i >= size()) continue;
      out += sentences_[static_cast<std::size_t>(i)];
      out += ' ';
    }
    return out;
  }

  std::string span_of(const std::string& id) const { return span(manifest_.at(id)); }

  // Sentences where the value of `e` should be stated: its own entry, its
  // parent's, or (empty vector) the whole text.
  std::vector<int> location(const Element& e) const {
    if (covered(e.id)) return manifest_.at(e.id);
    if (!e.parent.empty() && covered(e.parent)) return manifest_.at(e.parent);
    return {};
  }

  std::string location_text(const Element& e) const {
    const auto loc = location(e);
    return loc.empty() ? text_ : span(loc);
  }

 private:
  std::vector<std::string> sentences_;
  std::string text_;
  bool aligned_ = false;
  Manifest manifest_;
};

void fail(FiveCheckReport& r, int check, std::string detail) {
  r.failures[check].push_back(std::move(detail));
}

std::string value_text(const Element& e) { return literal_key(*e.value); }

}  // namespace

bool FiveCheckReport::check(int number) const {
  switch (number) {
    case 1: return data_values_present;
    case 2: return constraints_present;
    case 3: return objective_correct;
    case 4: return parameters_described;
    case 5: return self_consistent;
    default: return false;
  }
}

Manifest align_manifest(std::string_view text, const WorldDescriptor& w) {
  const auto sentences = split_sentences(text);
  std::vector<std::set<std::string>> tokens;
  std::vector<std::multiset<std::string>> literals;
  for (const auto& s : sentences) {
    tokens.push_back(token_set(s));
    literals.push_back(literal_keys(s));
  }
  Manifest out;
  auto add_where = [&](const std::string& id, auto&& predicate) {
    for (int i = 0; i < static_cast<int>(sentences.size()); ++i) {
      if (predicate(i)) out[id].push_back(i);
    }
  };
  const FormulationIR& ir = w.formulation;
  for (const Element& e : formulation_elements(w)) {
    switch (e.kind) {
      case ElementKind::kVariable: {
        const std::string name = e.id.substr(9);
        add_where(e.id, [&](int i) {
          return internal::contains_identifier(sentences[static_cast<std::size_t>(i)], name);
        });
        break;
      }
      case ElementKind::kConstraint: {
        const auto groups = internal::keyword_groups(w, e.id);
        const LinearConstraint* c = nullptr;
        for (std::size_t k = 0; k < ir.constraints.size(); ++k) {
          const std::string& n = ir.constraints[k].name;
          if ("constraint:" + (n.empty() ? "row_" + std::to_string(k) : n) == e.id) {
            c = &ir.constraints[k];
          }
        }
        if (c == nullptr) break;
        const std::string key = literal_key(c->rhs);
        add_where(e.id, [&](int i) {
          return literals[i].contains(key) && !groups.empty() && intersects(groups[0], tokens[i]);
        });
        break;
      }
      case ElementKind::kObjective:
        add_where(e.id, [&](int i) {
          return intersects(kMaxWords, tokens[i]) || intersects(kMinWords, tokens[i]);
        });
        break;
      case ElementKind::kPumpType: {
        const int t = std::stoi(e.id.substr(10));
        const PumpType& pt = ir.pump->types[static_cast<std::size_t>(t)];
        add_where(e.id, [&](int i) {
          return literals[i].contains(literal_key(pt.m1)) && literals[i].contains(literal_key(pt.m4));
        });
        break;
      }
      case ElementKind::kEquation: {
        const std::string name = e.id.substr(9);
        add_where(e.id, [&](int i) {
          const auto& tk = tokens[i];
          if (name == "power") return tk.contains("power") && tk.contains("m1");
          if (name == "pressure") return tk.contains("m4") && tk.contains("m5");
          if (name == "flow-balance") {
            return tk.contains("flow") &&
                   intersects({"fraction", "share", "split", "sum"}, tk) && !tk.contains("m1");
          }
          return tk.contains("serie") && tk.contains("pressure") && literals[i].empty();
        });
        break;
      }
      default:
        if (e.id.rfind("pump:", 0) == 0) {
          const auto groups = internal::keyword_groups(w, e.id);
          const std::string key = value_text(e);
          add_where(e.id, [&](int i) {
            return literals[i].contains(key) && intersects(groups[0], tokens[i]);
          });
        }
        break;
    }
  }
  return out;
}

FiveCheckReport verify_description(const Description& d, const WorldDescriptor& w) {
  FiveCheckReport r;
  const View view(d, w);
  const auto elements = formulation_elements(w);
  std::map<std::string, const Element*> by_id;
  for (const Element& e : elements) by_id[e.id] = &e;
  const bool pump = w.formulation.category == Category::kPump && w.formulation.pump;

  // 1: every numeric parameter appears as a literal where it is asserted.
  if (view.aligned()) {
    const auto present = literal_keys(view.text());
    for (const Element& e : elements) {
      if (e.value && !present.contains(value_text(e))) {
        fail(r, 1, "missing literal " + value_text(e) + " for " + e.id);
      }
    }
  } else {
    std::map<std::vector<int>, std::map<std::string, std::vector<std::string>>> required;
    for (const Element& e : elements) {
      if (e.value) required[view.location(e)][value_text(e)].push_back(e.id);
    }
    for (const auto& [loc, keys] : required) {
      const auto available = literal_keys(loc.empty() ? view.text() : view.span(loc));
      for (const auto& [key, ids] : keys) {
        const std::size_t have = available.count(key);
        if (have >= ids.size()) continue;
        std::string who;
        for (const auto& id : ids) who += (who.empty() ? "" : ", ") + id;
        fail(r, 1, "missing literal " + key + " (" + std::to_string(ids.size() - have) +
                       " of " + std::to_string(ids.size()) + " for " + who + ")");
      }
    }
  }
  r.data_values_present = !r.failures.contains(1);

  // 2: every constraint is asserted somewhere.
  for (const Element& e : elements) {
    const bool structural = pump ? e.kind == ElementKind::kEquation
                                 : e.kind == ElementKind::kConstraint;
    if (structural && !view.covered(e.id)) fail(r, 2, "no sentence asserts " + e.id);
  }
  r.constraints_present = !r.failures.contains(2);

  // 3: sense keyword and objective coefficients.
  const Sense sense = pump ? Sense::kMin : w.formulation.objective.sense;
  if (!view.covered("objective")) {
    fail(r, 3, "no sentence states the objective");
  } else {
    const auto tokens = token_set(view.span_of("objective"));
    const auto& right = sense == Sense::kMax ? kMaxWords : kMinWords;
    const auto& wrong = sense == Sense::kMax ? kMinWords : kMaxWords;
    if (!intersects(right, tokens)) {
      fail(r, 3, std::string("objective sentence lacks '") +
                     (sense == Sense::kMax ? "maximize" : "minimize") + "'");
    }
    if (intersects(wrong, tokens)) fail(r, 3, "objective sentence states the opposite sense");
  }
  for (const Element& e : elements) {
    const bool objective_value =
        e.value && (e.parent == "objective" || e.id.ends_with("/fixed_cost") ||
                    e.id.ends_with("/power_cost"));
    if (objective_value && !literal_keys(view.location_text(e)).contains(value_text(e))) {
      fail(r, 3, "objective coefficient " + value_text(e) + " for " + e.id + " missing");
    }
  }
  r.objective_correct = !r.failures.contains(3);

  // 4: variables named; pump scalars, types and curve coefficients described.
  for (const Element& e : elements) {
    if (e.kind == ElementKind::kVariable) {
      const std::string name = e.id.substr(9);
      if (!view.covered(e.id) || !internal::contains_identifier(view.span_of(e.id), name)) {
        fail(r, 4, "variable " + name + " is not named");
      }
    } else if (pump && (e.kind == ElementKind::kPumpType || e.id.rfind("pump:", 0) == 0)) {
      if (!view.covered(e.id)) fail(r, 4, e.id + " is not described");
    }
  }
  if (pump) {
    const auto tokens = token_set(view.text());
    for (const char* m : {"m1", "m2", "m3", "m4", "m5", "m6"}) {
      if (!tokens.contains(m)) fail(r, 4, std::string("coefficient ") + m + " is not named");
    }
  }
  r.parameters_described = !r.failures.contains(4);

  // 5: manifest spans agree with the values they assert.
  for (const auto& [id, indices] : view.manifest()) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      fail(r, 5, "manifest key " + id + " is not an element of the formulation");
      continue;
    }
    for (int i : indices) {
      if (i < 0 || i >= view.size()) {
        fail(r, 5, "manifest entry " + id + " points past the text");
        continue;
      }
      if (it->second->value &&
          !literal_keys(view.span({i})).contains(value_text(*it->second))) {
        fail(r, 5, "sentence " + std::to_string(i) + " asserts " + id + " with a value other than " +
                       value_text(*it->second));
      }
    }
  }
  r.self_consistent = !r.failures.contains(5);
  return r;
}

}  // namespace autoform
