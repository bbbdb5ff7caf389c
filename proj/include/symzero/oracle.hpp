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

#include <optional>
#include <set>
#include <vector>

#include "symzero/game.hpp"

// Brute-force reference implementations used to validate the solver and the
// skew linear algebra at small n. Nothing here shares code with the simplex:
// vertices come from enumerating active-constraint subsets and solving each
// linear system by an independent elimination routine.
namespace symzero::oracle {

struct VertexSet {
  std::vector<Strategy> vertices;
  bool complete = true;  // always true at the supported sizes

  bool unique() const { return vertices.size() == 1; }
};

/// All vertices of P(G) = {p >= 0, sum p = 1, G p <= 0}, by solving every
/// (n-1)-subset of active inequality constraints together with the simplex
/// equality and filtering for exact feasibility. n <= 6 (throws TooLarge).
VertexSet vertices_of_optimal_set(const SkewGame& g);

struct SupportCensus {
  std::set<ActionSet> supports;  // supports achievable by some optimal strategy
  bool unique = false;
};

/// Achievable supports = closure of vertex supports under union (a convex
/// combination with positive weights realizes exactly the union, since all
/// coordinates are nonnegative). n <= 6.
SupportCensus brute_supports(const SkewGame& g);

/// Signed perfect-matching sum; the Pfaffian's definition, used as the
/// oracle for the elimination-based implementation. Dimension <= 8 (throws
/// TooLarge) and even (throws OddDimension).
BigRat pfaffian_by_matchings(const std::vector<RatVec>& matrix);

/// For a game with multiple optimal strategies, an even-cardinality S with
/// det(G_S) = 0, found by scanning non-quasi-strict optimal vertices p and
/// testing S = p_+ and S = p_+ u {i}. Absent when the optimum is unique.
/// n <= 8.
std::optional<ActionSet> singular_submatrix_witness(const SkewGame& g);

}  // namespace symzero::oracle
