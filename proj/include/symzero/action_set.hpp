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

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace symzero {

/// A subset of the action universe {1..n}, stored as a bitmask. Actions are
/// 1-indexed; action i occupies bit i-1. The mask representation limits the
/// universe to n <= 63, which also makes subsets usable as histogram keys.
class ActionSet {
 public:
  static constexpr int kMaxActions = 63;

  constexpr ActionSet() = default;

  static ActionSet from_mask(std::uint64_t mask) { return ActionSet(mask); }

  static ActionSet of(std::initializer_list<int> actions) {
    ActionSet s;
    for (int a : actions) s = s.with(a);
    return s;
  }

  static ActionSet full(int n) {
    if (n <= 0) return ActionSet();
    return ActionSet(n >= 64 ? ~0ull : ((1ull << n) - 1));
  }

  std::uint64_t mask() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  bool contains(int action) const {
    return action >= 1 && action <= 64 && (bits_ >> (action - 1)) & 1;
  }

  ActionSet with(int action) const { return ActionSet(bits_ | (1ull << (action - 1))); }
  ActionSet without(int action) const { return ActionSet(bits_ & ~(1ull << (action - 1))); }

  ActionSet sym_diff(const ActionSet& o) const { return ActionSet(bits_ ^ o.bits_); }
  ActionSet intersect(const ActionSet& o) const { return ActionSet(bits_ & o.bits_); }
  ActionSet unite(const ActionSet& o) const { return ActionSet(bits_ | o.bits_); }
  ActionSet complement(int n) const { return ActionSet(full(n).bits_ & ~bits_); }
  bool subset_of(const ActionSet& o) const { return (bits_ & ~o.bits_) == 0; }

  /// Smallest action in the set; 0 when empty.
  int min_action() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  /// Actions in ascending order.
  std::vector<int> actions() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) {
      out.push_back(std::countr_zero(b) + 1);
    }
    return out;
  }

  std::string to_string() const;

  /// Accepts "{1,2,3}", "1,2,3", or a plain decimal bitmask such as "7".
  static ActionSet parse(const std::string& text);

  auto operator<=>(const ActionSet&) const = default;

 private:
  explicit constexpr ActionSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

}  // namespace symzero
