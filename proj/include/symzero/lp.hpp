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

#include "symzero/rational.hpp"

namespace symzero::lp {

enum class Relation { LessEq, Eq, GreaterEq };

struct Constraint {
  RatVec coeffs;
  Relation rel = Relation::LessEq;
  BigRat rhs;
};

/// maximize objective . x  subject to the constraints and x >= 0.
struct Program {
  int num_vars = 0;
  RatVec objective;
  std::vector<Constraint> constraints;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  BigRat value;
  RatVec point;  // an optimal basic solution (vertex) when status == Optimal
};

/// Two-phase primal simplex over exact arithmetic with Bland's anti-cycling
/// rule. Pivoting is integer-exact (Edmonds-style: the tableau holds integers
/// scaled by the previous pivot), with an overflow-checked int64 fast path
/// that falls back to GMP integers. Returns a status instead of throwing so
/// that callers can treat infeasibility as an answer.
Solution solve(const Program& program);

/// Same as solve() but enforces the caller's feasibility/boundedness promise:
/// throws Infeasible or Unbounded.
Solution lp_optimize(const Program& program);

}  // namespace symzero::lp
