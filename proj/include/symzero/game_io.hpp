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

#pragma once

#include <iosfwd>
#include <string>

#include "symzero/game.hpp"

namespace symzero {

/// Game file format (plain text):
///   line 1: integer n
///   line 2: n(n-1)/2 whitespace-separated rationals ("a/b", integer, or
///           decimal literal; decimals convert exactly) filling the strict
///           upper triangle row-major.
/// Lines starting with '#' are comments. The reader tolerates values spread
/// over several lines; the writer always emits the canonical two-line form.
SkewGame read_game(std::istream& in);
SkewGame read_game_file(const std::string& path);

void write_game(std::ostream& out, const SkewGame& g);
void write_game_file(const std::string& path, const SkewGame& g);

}  // namespace symzero
