// Copyright 2026 The symzero Authors
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

#include "symzero/action_set.hpp"

#include <cctype>
#include <cstdlib>

#include "symzero/errors.hpp"

namespace symzero {

std::string ActionSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int a : actions()) {
    if (!first) out += ",";
    out += std::to_string(a);
    first = false;
  }
  out += "}";
  return out;
}

ActionSet ActionSet::parse(const std::string& text) {
  std::string body;
  body.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) body += c;
  }
  if (body.empty()) throw ParseError("empty action set literal");

  bool braced = body.front() == '{';
  if (braced) {
    if (body.back() != '}') throw ParseError("unbalanced braces in action set: " + text);
    body = body.substr(1, body.size() - 2);
    if (body.empty()) return ActionSet();
  }
  if (!braced && body.find(',') == std::string::npos) {
    // Plain decimal bitmask.
    char* end = nullptr;
    unsigned long long mask = std::strtoull(body.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') throw ParseError("bad action set literal: " + text);
    return ActionSet::from_mask(mask);
  }
  ActionSet s;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty()) throw ParseError("bad action set literal: " + text);
    char* end = nullptr;
    long a = std::strtol(item.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || a < 1 || a > kMaxActions) {
      throw ParseError("action out of range in set literal: " + text);
    }
    s = s.with(static_cast<int>(a));
    pos = comma == std::string::npos ? body.size() : comma + 1;
  }
  return s;
}

}  // namespace symzero
