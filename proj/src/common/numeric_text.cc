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

#include "autoform/common/numeric_text.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

namespace autoform {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // Nudge by a few ulps so that 0.125 stored as 0.12499999 still rounds up.
  const double scaled = value * scale;
  const double nudged =
      scaled + std::copysign(std::abs(scaled) * 1e-12, scaled);
  const double r = std::round(nudged) / scale;
  return r == 0.0 ? 0.0 : r;
}

std::string literal_key(double value) {
  const double mag = std::abs(value);
  int decimals = 2;
  if (mag > 0.0) {
    const int sig = 4 - static_cast<int>(std::floor(std::log10(mag))) - 1;
    if (sig > decimals) decimals = sig;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, round_to(mag, decimals));
  return buf;
}

std::string format_number(double value, bool thousands) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10f", std::abs(value));
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  if (thousands) {
    const auto dot = s.find('.');
    std::string int_part = s.substr(0, dot);
    const std::string frac = dot == std::string::npos ? "" : s.substr(dot);
    std::string grouped;
    const int n = static_cast<int>(int_part.size());
    for (int i = 0; i < n; ++i) {
      grouped.push_back(int_part[static_cast<std::size_t>(i)]);
      const int remaining = n - i - 1;
      if (remaining > 0 && remaining % 3 == 0) grouped.push_back(',');
    }
    s = grouped + frac;
  }
  if (value < 0.0 && s != "0") s.insert(s.begin(), '-');
  return s;
}

std::vector<NumericLiteral> extract_literals(std::string_view text) {
  std::vector<NumericLiteral> out;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    if (!is_digit(text[i]) ||
        (i > 0 && (is_word_char(text[i - 1]) || text[i - 1] == '.'))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    std::string digits;
    while (i < n) {
      if (is_digit(text[i])) {
        digits.push_back(text[i]);
        ++i;
      } else if (text[i] == ',' && i + 3 < n && is_digit(text[i + 1]) &&
                 is_digit(text[i + 2]) && is_digit(text[i + 3]) &&
                 (i + 4 >= n || !is_digit(text[i + 4]))) {
        // A grouping comma is followed by exactly three digits.
        ++i;
      } else {
        break;
      }
    }
    if (i + 1 < n && text[i] == '.' && is_digit(text[i + 1])) {
      digits.push_back('.');
      ++i;
      while (i < n && is_digit(text[i])) digits.push_back(text[i++]);
    }
    if (i < n && is_word_char(text[i])) {
      // Glued to letters (e.g. "3rd", "2x"): not a data literal.
      while (i < n && is_word_char(text[i])) ++i;
      continue;
    }
    out.push_back({std::stod(digits), start, i - start});
  }
  return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  const std::size_t n = text.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char c = text[i];
    current.push_back(c);
    const bool terminal = c == '.' || c == '?' || c == '!';
    const bool boundary =
        i + 1 == n || std::isspace(static_cast<unsigned char>(text[i + 1]));
    if (terminal && boundary) {
      auto b = current.find_first_not_of(" \t\r\n");
      if (b != std::string::npos) out.push_back(current.substr(b));
      current.clear();
    }
  }
  auto b = current.find_first_not_of(" \t\r\n");
  if (b != std::string::npos) {
    auto e = current.find_last_not_of(" \t\r\n");
    out.push_back(current.substr(b, e - b + 1));
  }
  return out;
}

std::string join_sentences(const std::vector<std::string>& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    if (!out.empty()) out.push_back(' ');
    out += s;
  }
  return out;
}

std::vector<std::string> word_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (cur.size() > 3 && cur.back() == 's' && cur[cur.size() - 2] != 's') {
      cur.pop_back();
    }
    out.push_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c)) != 0) {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else {
      flush();
    }
  }
  flush();
  return out;
}

}  // namespace autoform
