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

#include "symzero/game.hpp"
#include "symzero/lp.hpp"

namespace symzero {

/// Result of analyzing a symmetric game. For skew-symmetric G the optimal
/// set is the polytope P(G) = {p in the simplex : G p <= 0} and the value
/// is 0.
struct SolveReport {
  Strategy strategy;          // one optimal strategy (a vertex of P(G))
  ActionSet maximal_support;  // union of supports over all optimal strategies
  bool unique = false;
  bool quasi_strict = false;  // of the returned strategy
  BigRat value;               // always 0 for symmetric games
};

/// A general zero-sum game: `payoffs[i][j]` is the row player's payoff.
struct BimatrixZeroSum {
  std::vector<RatVec> payoffs;

  int num_rows() const { return static_cast<int>(payoffs.size()); }
  int num_cols() const { return payoffs.empty() ? 0 : static_cast<int>(payoffs[0].size()); }
};

struct BimatrixSolution {
  BigRat value;
  Strategy row;
  Strategy col;
};

/// Some vertex of P(G). P(G) is never empty (minimax with value 0).
Strategy some_optimal(const SkewGame& g);

/// Exact bounds of coordinate i over P(G). Throws OutOfRange.
BigRat max_coordinate(const SkewGame& g, int i);
BigRat min_coordinate(const SkewGame& g, int i);

/// {i : max over P(G) of p_i > 0}.
ActionSet maximal_support(const SkewGame& g);

/// {i : min over P(G) of (G p)_i = 0}. By the equalizer theorem this equals
/// maximal_support for every game.
ActionSet equalized_actions(const SkewGame& g);

/// True iff P(G) is a singleton, decided by the 2n coordinate bounds.
bool is_unique(const SkewGame& g);

/// True iff (G p)_i < 0 for every i outside support(p). Throws NotOptimal
/// when p is not in P(G).
bool is_quasi_strict(const SkewGame& g, const Strategy& p);

SolveReport analyze(const SkewGame& g);

/// True iff G has an optimal strategy with support exactly S, decided by
/// maximizing a uniform slack t under p_i >= t on S (exists iff the optimum
/// is strictly positive). Throws EmptySubset.
bool has_optimal_with_support(const SkewGame& g, ActionSet s);

/// True iff the subgame G_S has a totally mixed optimal strategy.
bool subgame_totally_mixed(const SkewGame& g, ActionSet s);

/// Value and a maximin pair for a general zero-sum game via the standard
/// primal/dual linear programs. Throws EmptyMatrix.
BimatrixSolution solve_bimatrix_zero_sum(const BimatrixZeroSum& game);

/// True iff the row player's optimal set contains a full-support strategy,
/// decided by maximizing a uniform slack over the optimal polytope.
bool row_full_support_optimal(const BimatrixZeroSum& game);

}  // namespace symzero
