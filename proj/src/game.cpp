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

#include "symzero/game.hpp"

#include "symzero/errors.hpp"

namespace symzero {

namespace {

void check_universe(ActionSet s, int n, const char* what) {
  if (!s.subset_of(ActionSet::full(n))) {
    throw OutOfRange(std::string(what) + ": " + s.to_string() + " is not a subset of {1.." +
                     std::to_string(n) + "}");
  }
}

}  // namespace

SkewGame::SkewGame(const std::vector<std::vector<BigRat>>& entries) {
  const std::size_t n = entries.size();
  if (n == 0) throw EmptyMatrix("game matrix must have at least one action");
  if (n > static_cast<std::size_t>(ActionSet::kMaxActions)) {
    throw TooLarge("game size exceeds the " + std::to_string(ActionSet::kMaxActions) +
                   "-action limit");
  }
  for (const auto& row : entries) {
    if (row.size() != n) throw LengthMismatch("game matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (entries[i][j] != -entries[j][i]) {
        throw NotSkewSymmetric("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ") violates G = -G^T");
      }
    }
  }
  n_ = static_cast<int>(n);
  entries_.reserve(n * n);
  for (const auto& row : entries) {
    for (const auto& e : row) entries_.push_back(e);
  }
}

SkewGame SkewGame::from_upper(int n, const RatVec& values) {
  if (n <= 0) throw EmptyMatrix("game matrix must have at least one action");
  if (n > ActionSet::kMaxActions) {
    throw TooLarge("game size exceeds the " + std::to_string(ActionSet::kMaxActions) +
                   "-action limit");
  }
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (values.size() != expected) {
    throw LengthMismatch("expected " + std::to_string(expected) + " upper-triangle values, got " +
                         std::to_string(values.size()));
  }
  std::vector<BigRat> entries(static_cast<std::size_t>(n) * n, BigRat(0));
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      entries[i * n + j] = values[k];
      entries[j * n + i] = -values[k];
      ++k;
    }
  }
  return SkewGame(n, std::move(entries), Unchecked{});
}

RatVec SkewGame::upper_triangle() const {
  RatVec out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) out.push_back(at(i, j));
  }
  return out;
}

std::vector<std::vector<BigRat>> SkewGame::rows() const {
  std::vector<std::vector<BigRat>> out(n_);
  for (int i = 1; i <= n_; ++i) {
    out[i - 1].reserve(n_);
    for (int j = 1; j <= n_; ++j) out[i - 1].push_back(at(i, j));
  }
  return out;
}

Strategy::Strategy(RatVec probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw EmptyMatrix("strategy must cover at least one action");
  BigRat sum(0);
  for (const auto& p : probs_) {
    if (sgn(p) < 0) throw Error("strategy probabilities must be nonnegative");
    sum += p;
  }
  if (sum != 1) throw Error("strategy probabilities must sum to exactly 1");
}

SkewGame restrict(const SkewGame& g, ActionSet s) {
  if (s.empty()) throw EmptySubset("cannot restrict to the empty action set");
  check_universe(s, g.n(), "restrict");
  const auto idx = s.actions();
  const int m = static_cast<int>(idx.size());
  RatVec upper;
  upper.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) upper.push_back(g.at(idx[a], idx[b]));
  }
  return SkewGame::from_upper(m, upper);
}

RatVec restrict_vec(const RatVec& v, ActionSet s, int n) {
  if (s.empty()) throw EmptySubset("cannot restrict to the empty action set");
  if (static_cast<int>(v.size()) != n) throw DimensionMismatch("vector length does not match n");
  check_universe(s, n, "restrict_vec");
  RatVec out;
  out.reserve(s.size());
  for (int a : s.actions()) out.push_back(v[a - 1]);
  return out;
}

SkewGame flip(const SkewGame& g, ActionSet s) {
  check_universe(s, g.n(), "flip");
  const int n = g.n();
  RatVec upper;
  upper.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (s.contains(i) != s.contains(j)) {
        upper.push_back(-g.at(i, j));
      } else {
        upper.push_back(g.at(i, j));
      }
    }
  }
  return SkewGame::from_upper(n, upper);
}

RatVec flip_vec(const RatVec& v, ActionSet s, int n) {
  if (static_cast<int>(v.size()) != n) throw DimensionMismatch("vector length does not match n");
  check_universe(s, n, "flip_vec");
  RatVec out = v;
  for (int a : s.actions()) out[a - 1] = -out[a - 1];
  return out;
}

ActionSet support(const RatVec& v) {
  ActionSet s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) > 0) s = s.with(static_cast<int>(i) + 1);
  }
  return s;
}

ActionSet support(const Strategy& p) { return support(p.probs()); }

ActionSet neg_support(const RatVec& v) {
  ActionSet s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) < 0) s = s.with(static_cast<int>(i) + 1);
  }
  return s;
}

RatVec mat_vec(const SkewGame& g, const RatVec& v) {
  if (static_cast<int>(v.size()) != g.n()) {
    throw DimensionMismatch("vector length does not match game size");
  }
  const int n = g.n();
  RatVec out(n, BigRat(0));
  BigRat term;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (sgn(v[j - 1]) == 0) continue;
      term = g.at(i, j);
      term *= v[j - 1];
      out[i - 1] += term;
    }
  }
  return out;
}

BigRat expected_payoff(const SkewGame& g, const Strategy& q, const Strategy& p) {
  if (q.n() != g.n() || p.n() != g.n()) {
    throw DimensionMismatch("strategy length does not match game size");
  }
  const RatVec gp = mat_vec(g, p.probs());
  BigRat out(0);
  BigRat term;
  for (int i = 1; i <= g.n(); ++i) {
    term = q.at(i);
    term *= gp[i - 1];
    out += term;
  }
  return out;
}

}  // namespace symzero
