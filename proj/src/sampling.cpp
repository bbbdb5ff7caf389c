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

#include "symzero/sampling.hpp"

#include <cmath>

#include "symzero/errors.hpp"

namespace symzero::sampling {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

RandomStream RandomStream::child(std::uint64_t index) const {
  std::uint64_t s = mix64(state_ + kGolden);
  s = mix64(s ^ mix64(index + 0x8E9BAC2F0DDF3C01ULL));
  return RandomStream(s);
}

std::uint64_t RandomStream::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

std::uint64_t RandomStream::next_below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection; exactly uniform.
  std::uint64_t x = next_u64();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (lo < threshold) {
      x = next_u64();
      m = static_cast<__uint128_t>(x) * bound;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double RandomStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_gaussian_magnitude() {
  const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
  const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;          // [0,1)
  const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  return std::fabs(z);
}

void SamplerSpec::validate() const {
  if (n < 1) throw EmptyMatrix("sampler needs n >= 1");
  if (n > ActionSet::kMaxActions) throw TooLarge("sampler n exceeds the action limit");
  switch (kind) {
    case SamplerKind::OddInt:
      if (bound < 0) throw Error("odd-int bound must be nonnegative");
      break;
    case SamplerKind::Uniform:
      if (sgn(half_width) <= 0) throw Error("uniform half-width must be positive");
      break;
    case SamplerKind::Constant:
      if (!constant) throw Error("constant sampler needs a game");
      if (constant->n() != n) throw DimensionMismatch("constant game size does not match n");
      break;
    case SamplerKind::Symmetrized:
      if (!base) throw Error("symmetrized sampler needs a base sampler");
      if (base->n != n) throw DimensionMismatch("base sampler size does not match n");
      base->validate();
      break;
    default:
      break;
  }
}

std::string SamplerSpec::describe() const {
  switch (kind) {
    case SamplerKind::OddInt:
      return "odd-int(n=" + std::to_string(n) + ",bound=" + std::to_string(bound) + ")";
    case SamplerKind::Gaussian:
      return "gaussian(n=" + std::to_string(n) + ")";
    case SamplerKind::Uniform:
      return "uniform(n=" + std::to_string(n) + ",half-width=" + rat_to_string(half_width) + ")";
    case SamplerKind::Tournament:
      return "tournament(n=" + std::to_string(n) + ")";
    case SamplerKind::Symmetrized:
      return "symmetrized(" + (base ? base->describe() : std::string("?")) + ")";
    case SamplerKind::Constant:
      return "constant(n=" + std::to_string(n) + ")";
  }
  return "?";
}

SamplerSpec odd_int_spec(int n, long bound) {
  SamplerSpec s;
  s.kind = SamplerKind::OddInt;
  s.n = n;
  s.bound = bound;
  return s;
}

SamplerSpec gaussian_spec(int n) {
  SamplerSpec s;
  s.kind = SamplerKind::Gaussian;
  s.n = n;
  return s;
}

SamplerSpec uniform_spec(int n, BigRat half_width) {
  SamplerSpec s;
  s.kind = SamplerKind::Uniform;
  s.n = n;
  s.half_width = std::move(half_width);
  return s;
}

SamplerSpec tournament_spec(int n) {
  SamplerSpec s;
  s.kind = SamplerKind::Tournament;
  s.n = n;
  return s;
}

SamplerSpec constant_spec(SkewGame game) {
  SamplerSpec s;
  s.kind = SamplerKind::Constant;
  s.n = game.n();
  s.constant = std::make_shared<const SkewGame>(std::move(game));
  return s;
}

SamplerSpec symmetrized(SamplerSpec base) {
  SamplerSpec s;
  s.kind = SamplerKind::Symmetrized;
  s.n = base.n;
  s.base = std::make_shared<const SamplerSpec>(std::move(base));
  return s;
}

SkewGame odd_int_game(int n, long bound, RandomStream& stream) {
  const std::size_t count = static_cast<std::size_t>(n) * (n - 1) / 2;
  RatVec upper;
  upper.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const long magnitude = 2 * static_cast<long>(stream.next_below(bound + 1)) + 1;
    upper.emplace_back(stream.next_bit() ? magnitude : -magnitude);
  }
  return SkewGame::from_upper(n, upper);
}

SkewGame gaussian_game(int n, RandomStream& stream) {
  const std::size_t count = static_cast<std::size_t>(n) * (n - 1) / 2;
  RatVec upper;
  upper.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    BigRat magnitude = rat_from_double(stream.next_gaussian_magnitude());
    if (!stream.next_bit()) magnitude = -magnitude;
    upper.push_back(std::move(magnitude));
  }
  return SkewGame::from_upper(n, upper);
}

SkewGame uniform_game(int n, const BigRat& half_width, RandomStream& stream) {
  const std::size_t count = static_cast<std::size_t>(n) * (n - 1) / 2;
  RatVec upper;
  upper.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    BigRat magnitude = rat_from_double(stream.next_unit());
    magnitude *= half_width;
    if (!stream.next_bit()) magnitude = -magnitude;
    upper.push_back(std::move(magnitude));
  }
  return SkewGame::from_upper(n, upper);
}

SkewGame tournament_game(int n, RandomStream& stream) {
  const std::size_t count = static_cast<std::size_t>(n) * (n - 1) / 2;
  RatVec upper;
  upper.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    upper.emplace_back(stream.next_bit() ? 1 : -1);
  }
  return SkewGame::from_upper(n, upper);
}

SkewGame draw_game(const SamplerSpec& spec, RandomStream& stream) {
  switch (spec.kind) {
    case SamplerKind::OddInt:
      return odd_int_game(spec.n, spec.bound, stream);
    case SamplerKind::Gaussian:
      return gaussian_game(spec.n, stream);
    case SamplerKind::Uniform:
      return uniform_game(spec.n, spec.half_width, stream);
    case SamplerKind::Tournament:
      return tournament_game(spec.n, stream);
    case SamplerKind::Constant:
      return *spec.constant;
    case SamplerKind::Symmetrized: {
      SkewGame g = draw_game(*spec.base, stream);
      const std::uint64_t mask = stream.next_u64() & ActionSet::full(spec.n).mask();
      return flip(g, ActionSet::from_mask(mask));
    }
  }
  throw Error("unhandled sampler kind");
}

RandomStream substream(std::uint64_t seed, std::uint64_t trial_index) {
  return RandomStream(seed).child(trial_index);
}

TournamentEnumerator::TournamentEnumerator(int n) : n_(n) {
  if (n < 1) throw EmptyMatrix("tournament enumeration needs n >= 1");
  if (n > 7) throw TooLarge("tournament enumeration is capped at n = 7 (2^21 games)");
  count_ = 1ull << (static_cast<std::uint64_t>(n) * (n - 1) / 2);
}

SkewGame TournamentEnumerator::at(std::uint64_t index) const {
  const std::size_t count = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  RatVec upper;
  upper.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    upper.emplace_back((index >> k) & 1 ? 1 : -1);
  }
  return SkewGame::from_upper(n_, upper);
}

SkewGame TournamentEnumerator::next() {
  if (!has_next()) throw OutOfRange("tournament enumeration exhausted");
  return at(next_++);
}

}  // namespace symzero::sampling
