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

#include <gmpxx.h>

#include <string>
#include <vector>

namespace symzero {

/// Arbitrary-precision exact arithmetic. All game payoffs, strategies and
/// intermediate solver quantities are BigRat; there is no floating point in
/// any decision path.
using BigInt = mpz_class;
using BigRat = mpq_class;

/// A plain action-indexed vector of rationals (no normalization constraint).
using RatVec = std::vector<BigRat>;

/// Parses "a/b", an integer literal, or a decimal literal with optional
/// exponent ("0.25", "-1.5e-3"). Decimals convert exactly. Throws ParseError.
BigRat rat_from_string(const std::string& text);

/// Canonical form: "a" when the denominator is 1, otherwise "a/b".
std::string rat_to_string(const BigRat& q);

/// Exact conversion; every finite double is a rational. Throws ParseError on
/// NaN or infinity.
BigRat rat_from_double(double x);

double rat_to_double(const BigRat& q);

std::string vec_to_string(const RatVec& v);

}  // namespace symzero
