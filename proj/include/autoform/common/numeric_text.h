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

// Helpers for numbers that travel through prose: formatting values for
// rendering, extracting numeric literals back out of text, and the
// normalized keys used to compare the two.

#ifndef AUTOFORM_COMMON_NUMERIC_TEXT_H_
#define AUTOFORM_COMMON_NUMERIC_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace autoform {

// Rounds half away from zero at `decimals` places.
double round_to(double value, int decimals);

// Normalized comparison key for the magnitude of `value`: two decimals, or
// four significant digits when that is finer (so 0.00058 and 0.00049 stay
// distinct). Accepts "2,000", "2000" and "2000.00" as the same literal.
std::string literal_key(double value);

// Shortest plain decimal rendering (no exponent, trailing zeros trimmed).
// With `thousands`, the integer part is grouped with commas.
std::string format_number(double value, bool thousands = false);

struct NumericLiteral {
  double value;  // magnitude; signs are expressed in words by the renderer
  std::size_t offset;
  std::size_t length;
};

// Numbers that start a token: digits glued to letters or underscores (m1,
// P_0) are part of identifiers and are skipped.
std::vector<NumericLiteral> extract_literals(std::string_view text);

// Splits on '.', '?' or '!' followed by whitespace or end of text. Decimal
// points inside numbers never split.
std::vector<std::string> split_sentences(std::string_view text);

std::string join_sentences(const std::vector<std::string>& sentences);

// Lowercased alphanumeric tokens with a trailing plural 's' stripped from
// words longer than three characters.
std::vector<std::string> word_tokens(std::string_view text);

}  // namespace autoform

#endif  // AUTOFORM_COMMON_NUMERIC_TEXT_H_
