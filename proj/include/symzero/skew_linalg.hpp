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
#include <vector>

#include "symzero/game.hpp"

namespace symzero {

/// Exact Pfaffian of an even-size skew-symmetric matrix via pivoted
/// Schur-complement elimination (O(n^3)); the 0x0 Pfaffian is 1 by the
/// empty-product convention. Pf(A)^2 = det(A). Throws OddDimension on odd
/// input and NotSkewSymmetric when validation fails.
BigRat pfaffian(const std::vector<RatVec>& matrix);

/// Entry i is the Pfaffian of G with row i and column i removed. Defined for
/// odd n only (throws EvenDimension).
RatVec principal_pfaffians(const SkewGame& g);

/// w with w_i = (-1)^(i+1) * principal_pfaffians(G)_i. Satisfies G*w = 0
/// exactly; w is the zero vector iff rank(G) < n-1, otherwise w spans the
/// kernel. Odd n only.
RatVec kernel_vector(const SkewGame& g);

/// Exact rank via elimination; always even for skew-symmetric matrices.
int rank(const SkewGame& g);

/// Kaplansky's criterion: the game has a unique totally mixed optimal
/// strategy iff the principal Pfaffians strictly alternate in sign (all
/// nonzero, consecutive entries of opposite sign). Returns the normalized
/// kernel vector in that case, absent otherwise (including any zero
/// principal Pfaffian). Odd n only.
std::optional<Strategy> kaplansky_totally_mixed(const SkewGame& g);

/// The kernel sign class {S, N\S} with S = N minus the kernel support,
/// canonicalized as the member not containing action 1. Absent when the
/// kernel vector vanishes or has a zero coordinate (rank deficiency or the
/// measure-zero boundary events). Odd n only.
std::optional<ActionSet> kernel_sign_class(const SkewGame& g);

}  // namespace symzero
