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

#include <vector>

#include "symzero/action_set.hpp"
#include "symzero/rational.hpp"

namespace symzero {

/// An n x n exact-rational skew-symmetric payoff matrix. Entry (i, j) is the
/// row player's payoff when the row player picks action i and the column
/// player picks action j. Skew-symmetry is validated once at construction;
/// every other operation may assume it. Immutable after construction.
class SkewGame {
 public:
  /// Validates shape and skew-symmetry. Throws EmptyMatrix, LengthMismatch
  /// (non-square input) or NotSkewSymmetric.
  explicit SkewGame(const std::vector<std::vector<BigRat>>& entries);

  /// Fills the strict upper triangle row-major from `values` (length must be
  /// n(n-1)/2); the lower triangle is the negation, the diagonal zero. This
  /// parameterization makes non-skew matrices unrepresentable.
  static SkewGame from_upper(int n, const RatVec& values);

  int n() const { return n_; }

  /// 1-indexed access.
  const BigRat& at(int i, int j) const { return entries_[(i - 1) * n_ + (j - 1)]; }

  /// Strict upper triangle, row-major; the canonical serialization payload.
  RatVec upper_triangle() const;

  std::vector<std::vector<BigRat>> rows() const;

  bool operator==(const SkewGame& o) const { return n_ == o.n_ && entries_ == o.entries_; }

 private:
  struct Unchecked {};
  SkewGame(int n, std::vector<BigRat> entries, Unchecked) : n_(n), entries_(std::move(entries)) {}

  int n_ = 0;
  std::vector<BigRat> entries_;  // row-major n*n
};

/// A probability vector over actions: entries >= 0 summing to exactly 1.
class Strategy {
 public:
  /// Throws NotOptimal-unrelated validation errors: EmptyMatrix when empty,
  /// ParseError-style Error when entries are negative or do not sum to 1.
  explicit Strategy(RatVec probs);

  int n() const { return static_cast<int>(probs_.size()); }
  const BigRat& at(int i) const { return probs_[i - 1]; }
  const RatVec& probs() const { return probs_; }

  bool operator==(const Strategy& o) const { return probs_ == o.probs_; }

 private:
  RatVec probs_;
};

/// make_game: validated construction from a full square matrix.
/// Examples pinned by tests: rock-paper-scissors is
/// [[0,1,-1],[-1,0,1],[1,-1,0]].
inline SkewGame make_game(const std::vector<std::vector<BigRat>>& entries) {
  return SkewGame(entries);
}

/// The |S| x |S| principal submatrix G_S in ascending index order.
SkewGame restrict(const SkewGame& g, ActionSet s);

/// The subvector v_S in ascending index order.
RatVec restrict_vec(const RatVec& v, ActionSet s, int n);

/// The sign-flip automorphism Phi_S: entries with exactly one index in S are
/// negated. Phi forms an abelian group: Phi_S . Phi_T = Phi_{S sym_diff T},
/// Phi_S = Phi_{N\S}, and every element is self-inverse.
SkewGame flip(const SkewGame& g, ActionSet s);

/// Vector analogue of Phi_S: coordinates with index in S are negated. Chosen
/// so that flip(G,S) * flip_vec(v,S) = flip_vec(G*v, S) for all G, v, S.
RatVec flip_vec(const RatVec& v, ActionSet s, int n);

/// Exact sign classification; no tolerance anywhere.
ActionSet support(const RatVec& v);
ActionSet support(const Strategy& p);
ActionSet neg_support(const RatVec& v);

/// Matrix-vector product G*v.
RatVec mat_vec(const SkewGame& g, const RatVec& v);

/// q^T G p, exactly. Throws DimensionMismatch.
BigRat expected_payoff(const SkewGame& g, const Strategy& q, const Strategy& p);

}  // namespace symzero
