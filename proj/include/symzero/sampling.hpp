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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "symzero/game.hpp"

namespace symzero::sampling {

/// Splittable deterministic random source (splitmix64). Identical
/// (seed, path) yields identical draws; distinct child indices give
/// statistically independent substreams, so trials can run in any order and
/// in parallel with identical results.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  /// Derives the substream for e.g. a trial index.
  RandomStream child(std::uint64_t index) const;

  std::uint64_t next_u64();
  bool next_bit() { return next_u64() >> 63; }

  /// Uniform in [0, bound), bias-free.
  std::uint64_t next_below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit();

  /// |z| for z ~ N(0,1), via Box-Muller on two uniform draws.
  double next_gaussian_magnitude();

 private:
  std::uint64_t state_;
};

/// Name of the generator, echoed in experiment reports.
inline constexpr const char* kGeneratorName = "splitmix64";

enum class SamplerKind { OddInt, Gaussian, Uniform, Tournament, Symmetrized, Constant };

/// Which distribution to draw games from. All built-in samplers draw each
/// strict-upper-triangle entry with an explicit fair sign bit separated from
/// the magnitude, so the realized distributions are exactly sign-symmetric
/// (hence Phi_S-invariant) despite floating-point discretization of the
/// continuous magnitudes.
struct SamplerSpec {
  SamplerKind kind = SamplerKind::OddInt;
  int n = 3;
  long bound = 4;          // odd-int: entries uniform over {±1, ±3, .., ±(2*bound+1)}
  BigRat half_width = 1;   // uniform: magnitude range [0, half_width]
  std::shared_ptr<const SkewGame> constant;   // constant kind (useful as a base)
  std::shared_ptr<const SamplerSpec> base;    // symmetrized kind

  void validate() const;
  std::string describe() const;
};

SamplerSpec odd_int_spec(int n, long bound = 4);
SamplerSpec gaussian_spec(int n);
SamplerSpec uniform_spec(int n, BigRat half_width = BigRat(1));
SamplerSpec tournament_spec(int n);
SamplerSpec constant_spec(SkewGame game);

/// Wraps a base sampler: draws G from the base and a uniform subset T, and
/// returns flip(G, T). The result distribution is Phi_S-invariant for every S
/// because T -> S sym_diff T is a bijection on subsets.
SamplerSpec symmetrized(SamplerSpec base);

/// One game from the spec's distribution, consuming draws from `stream`.
SkewGame draw_game(const SamplerSpec& spec, RandomStream& stream);

/// Individual samplers (draw_game dispatches to these).
SkewGame odd_int_game(int n, long bound, RandomStream& stream);
SkewGame gaussian_game(int n, RandomStream& stream);
SkewGame uniform_game(int n, const BigRat& half_width, RandomStream& stream);
SkewGame tournament_game(int n, RandomStream& stream);

/// Deterministic substream for (seed, trial index).
RandomStream substream(std::uint64_t seed, std::uint64_t trial_index);

/// Enumerates all 2^(n(n-1)/2) tournament games exactly once, in
/// upper-triangle binary counting order. n <= 7 (throws TooLarge).
class TournamentEnumerator {
 public:
  explicit TournamentEnumerator(int n);

  std::uint64_t count() const { return count_; }
  bool has_next() const { return next_ < count_; }
  SkewGame next();

  /// The game at a given position, independent of iteration state.
  SkewGame at(std::uint64_t index) const;

 private:
  int n_;
  std::uint64_t count_;
  std::uint64_t next_ = 0;
};

}  // namespace symzero::sampling
