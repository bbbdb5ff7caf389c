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

#include "symzero/game_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "symzero/errors.hpp"

namespace symzero {

namespace {

// Tokens from non-comment lines, in order.
std::vector<std::string> read_tokens(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

}  // namespace

SkewGame read_game(std::istream& in) {
  const auto tokens = read_tokens(in);
  if (tokens.empty()) throw ParseError("game file is empty");
  long n = 0;
  try {
    n = std::stol(tokens[0]);
  } catch (const std::exception&) {
    throw ParseError("game file must start with the action count, got '" + tokens[0] + "'");
  }
  if (n < 1) throw EmptyMatrix("game file declares n < 1");
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (tokens.size() - 1 != expected) {
    throw LengthMismatch("game file for n=" + std::to_string(n) + " needs " +
                         std::to_string(expected) + " upper-triangle values, got " +
                         std::to_string(tokens.size() - 1));
  }
  RatVec values;
  values.reserve(expected);
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    values.push_back(rat_from_string(tokens[i]));
  }
  return SkewGame::from_upper(static_cast<int>(n), values);
}

SkewGame read_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open game file: " + path);
  try {
    return read_game(in);
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_game(std::ostream& out, const SkewGame& g) {
  out << g.n() << "\n";
  const auto upper = g.upper_triangle();
  for (std::size_t i = 0; i < upper.size(); ++i) {
    if (i) out << " ";
    out << rat_to_string(upper[i]);
  }
  out << "\n";
}

void write_game_file(const std::string& path, const SkewGame& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open game file for writing: " + path);
  write_game(out, g);
}

}  // namespace symzero
