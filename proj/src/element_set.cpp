// Copyright 2026 The Authors.
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

#include "matcyc/element_set.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "matcyc/error.hpp"

namespace matcyc {

ElementSet ElementSet::of(std::initializer_list<int> elements) {
  ElementSet s;
  for (int e : elements) s = s.with(e);
  return s;
}

ElementSet ElementSet::from_labels(std::initializer_list<int> labels) {
  return from_labels(std::vector<int>(labels));
}

ElementSet ElementSet::from_labels(const std::vector<int>& labels) {
  ElementSet s;
  for (int label : labels) {
    if (label < 1 || label > kMaxElements) {
      throw Error(ErrorKind::kInvalidSubset,
                  "element label out of range: " + std::to_string(label));
    }
    s = s.with(label - 1);
  }
  return s;
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int e : *this) out.push_back(e);
  return out;
}

std::vector<int> ElementSet::labels() const {
  std::vector<int> out = elements();
  for (int& e : out) ++e;
  return out;
}

bool lex_less(ElementSet a, ElementSet b) {
  // Walk both ascending lists; the first differing position decides.
  ElementSet::Word x = a.bits();
  ElementSet::Word y = b.bits();
  while (x != 0 && y != 0) {
    const int ex = std::countr_zero(x);
    const int ey = std::countr_zero(y);
    if (ex != ey) return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

bool size_lex_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

std::string format_set(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : s) {
    if (!first) out += ',';
    out += std::to_string(e + 1);
    first = false;
  }
  out += '}';
  return out;
}

ElementSet parse_set(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) {
      v.remove_prefix(1);
    }
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t' ||
                          v.back() == '\r')) {
      v.remove_suffix(1);
    }
    return v;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') {
      throw Error(ErrorKind::kParse, "unbalanced braces in set: " +
                                         std::string(text));
    }
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty() || text == "-") return {};
  ElementSet s;
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    int label = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), label);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::kParse,
                  "bad element label '" + std::string(token) + "'");
    }
    s |= ElementSet::from_labels({label});
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return s;
}

ElementSet::Word compress(ElementSet s, ElementSet mask) {
  ElementSet::Word out = 0;
  int pos = 0;
  for (int e : mask) {
    if (s.contains(e)) out |= ElementSet::Word{1} << pos;
    ++pos;
  }
  return out;
}

}  // namespace matcyc
