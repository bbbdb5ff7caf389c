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

#include <stdexcept>
#include <string>

namespace symzero {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction / shape errors.
struct NotSkewSymmetric : Error { using Error::Error; };
struct EmptyMatrix : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// Subset errors.
struct EmptySubset : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

// Parity errors (Pfaffian-related).
struct OddDimension : Error { using Error::Error; };
struct EvenDimension : Error { using Error::Error; };

// Linear programming errors.
struct Infeasible : Error { using Error::Error; };
struct Unbounded : Error { using Error::Error; };
struct NotOptimal : Error { using Error::Error; };

// Size caps and experiment errors.
struct TooLarge : Error { using Error::Error; };
struct TooFewTrials : Error { using Error::Error; };
struct ConditioningEmpty : Error { using Error::Error; };

// Input parsing / IO.
struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace symzero
