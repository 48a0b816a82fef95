// Copyright 2026 The wilc Authors
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
#include "wilc/invariants.hpp"

#include <cctype>

namespace wilc {

// Factors are I<k>, D<m>I<k> or DI<k> (one Delta), optionally raised with ^p,
// joined by '*'. Example: I2*DI2*D2I3^2.
std::optional<TraceWord> parse_word(const std::string& text) {
  TraceWord w;
  std::size_t i = 0;
  auto number = [&](int& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) return false;
    out = std::stoi(text.substr(start, i - start));
    return true;
  };
  while (i < text.size()) {
    int m = 0, k = 0, p = 1;
    if (text[i] == 'D') {
      ++i;
      if (!number(m)) m = 1;
    }
    if (i >= text.size() || text[i] != 'I') return std::nullopt;
    ++i;
    if (!number(k)) return std::nullopt;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (!number(p) || p < 1) return std::nullopt;
    }
    for (int r = 0; r < p; ++r) w.emplace_back(k, m);
    if (i < text.size()) {
      if (text[i] != '*') return std::nullopt;
      ++i;
      if (i == text.size()) return std::nullopt;
    }
  }
  if (w.empty()) return std::nullopt;
  return w;
}

std::string render_word(const TraceWord& w) {
  std::string s;
  for (auto [k, m] : w) {
    if (!s.empty()) s += "*";
    if (m == 1) s += "D";
    if (m > 1) s += "D" + std::to_string(m);
    s += "I" + std::to_string(k);
  }
  return s;
}

}  // namespace wilc
