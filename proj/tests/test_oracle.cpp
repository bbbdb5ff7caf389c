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

#include <doctest.h>

#include "symzero/errors.hpp"
#include "symzero/oracle.hpp"
#include "symzero/sampling.hpp"
#include "symzero/skew_linalg.hpp"
#include "symzero/solver.hpp"

using namespace symzero;
using oracle::brute_supports;
using oracle::singular_submatrix_witness;
using oracle::vertices_of_optimal_set;

namespace {

SkewGame rps() { return SkewGame::from_upper(3, {BigRat(1), BigRat(-1), BigRat(1)}); }

SkewGame rps4() {
  return SkewGame::from_upper(
      4, {BigRat(1), BigRat(-1), BigRat(1), BigRat(1), BigRat(1), BigRat(1)});
}

SkewGame all_zero(int n) {
  return SkewGame::from_upper(n, RatVec(static_cast<std::size_t>(n) * (n - 1) / 2, BigRat(0)));
}

bool in_polytope(const SkewGame& g, const Strategy& p) {
  for (const auto& v : mat_vec(g, p.probs())) {
    if (sgn(v) > 0) return false;
  }
  return true;
}

// Multi-optimum fixtures at n <= 5 for the witness search.
std::vector<SkewGame> degenerate_fixtures() {
  std::vector<SkewGame> games;
  for (int n = 2; n <= 5; ++n) games.push_back(all_zero(n));
  // RPS plus a duplicate of action 3: optima form a segment.
  games.push_back(SkewGame::from_upper(
      4, {BigRat(1), BigRat(-1), BigRat(-1), BigRat(1), BigRat(1), BigRat(0)}));
  // RPS plus an action tied against everything.
  games.push_back(SkewGame::from_upper(
      4, {BigRat(1), BigRat(-1), BigRat(0), BigRat(1), BigRat(0), BigRat(0)}));
  // The 4-cycle: kernel is two-dimensional, optima form a segment.
  games.push_back(SkewGame::from_upper(
      4, {BigRat(1), BigRat(0), BigRat(-1), BigRat(1), BigRat(0), BigRat(1)}));
  // A 5-action version: 4-cycle plus an action losing to everything.
  games.push_back(SkewGame::from_upper(5, {BigRat(1), BigRat(0), BigRat(-1), BigRat(1), BigRat(1),
                                           BigRat(0), BigRat(1), BigRat(1), BigRat(1), BigRat(1)}));
  return games;
}

}  // namespace

TEST_CASE("vertex enumeration on the fixtures") {
  const auto v_rps = vertices_of_optimal_set(rps());
  REQUIRE(v_rps.vertices.size() == 1);
  CHECK(v_rps.vertices[0].probs() == RatVec{BigRat(1, 3), BigRat(1, 3), BigRat(1, 3)});
  CHECK(v_rps.unique());
  CHECK(v_rps.complete);

  const auto v_zero = vertices_of_optimal_set(all_zero(3));
  CHECK(v_zero.vertices.size() == 3);
  for (const auto& v : v_zero.vertices) CHECK(support(v).size() == 1);

  const auto v_rps4 = vertices_of_optimal_set(rps4());
  REQUIRE(v_rps4.vertices.size() == 1);
  CHECK(v_rps4.vertices[0].probs() ==
        RatVec{BigRat(1, 3), BigRat(1, 3), BigRat(1, 3), BigRat(0)});

  CHECK_THROWS_AS(vertices_of_optimal_set(all_zero(7)), TooLarge);
}

TEST_CASE("every enumerated vertex lies in P(G)") {
  sampling::RandomStream stream(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(stream.next_below(5));
    const SkewGame g = sampling::odd_int_game(n, 3, stream);
    const auto vs = vertices_of_optimal_set(g);
    CHECK(!vs.vertices.empty());
    for (const auto& v : vs.vertices) CHECK(in_polytope(g, v));
    // Exact duplicates are filtered.
    for (std::size_t i = 0; i < vs.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.vertices.size(); ++j) {
        CHECK(vs.vertices[i].probs() != vs.vertices[j].probs());
      }
    }
  }
}

TEST_CASE("uniqueness equivalence between oracle and solver") {
  for (const SkewGame& g : degenerate_fixtures()) {
    CHECK(vertices_of_optimal_set(g).unique() == is_unique(g));
  }
  CHECK(vertices_of_optimal_set(rps()).unique() == is_unique(rps()));

  sampling::RandomStream stream(515);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(stream.next_below(5));
    const SkewGame g = trial % 2 == 0 ? sampling::odd_int_game(n, 3, stream)
                                      : sampling::gaussian_game(n, stream);
    CHECK(vertices_of_optimal_set(g).unique() == is_unique(g));
  }
}

TEST_CASE("brute-force achievable supports") {
  const auto rps_census = brute_supports(rps());
  CHECK(rps_census.unique);
  CHECK(rps_census.supports == std::set<ActionSet>{ActionSet::full(3)});

  const auto zero_census = brute_supports(all_zero(3));
  CHECK(!zero_census.unique);
  CHECK(zero_census.supports.size() == 7);  // every nonempty subset

  // Maximal support from the oracle matches the solver, and achievable
  // supports agree with has_optimal_with_support over all subsets.
  sampling::RandomStream stream(808);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(stream.next_below(5));
    const SkewGame g = sampling::odd_int_game(n, 3, stream);
    const auto census = brute_supports(g);

    ActionSet oracle_max;
    for (const auto& s : census.supports) oracle_max = oracle_max.unite(s);
    CHECK(oracle_max == maximal_support(g));

    for (std::uint64_t mask = 1; mask <= ActionSet::full(n).mask(); ++mask) {
      const ActionSet s = ActionSet::from_mask(mask);
      CHECK(census.supports.count(s) == static_cast<std::size_t>(has_optimal_with_support(g, s)));
    }
  }
}

TEST_CASE("achievable supports on the degenerate fixtures") {
  for (const SkewGame& g : degenerate_fixtures()) {
    if (g.n() > 6) continue;
    const auto census = brute_supports(g);
    for (std::uint64_t mask = 1; mask <= ActionSet::full(g.n()).mask(); ++mask) {
      const ActionSet s = ActionSet::from_mask(mask);
      CHECK(census.supports.count(s) == static_cast<std::size_t>(has_optimal_with_support(g, s)));
    }
  }
}

TEST_CASE("kernel cross-check: unique totally mixed optimum equals the kernel") {
  sampling::RandomStream stream(90210);
  int hit = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + 2 * static_cast<int>(stream.next_below(3));  // 1,3,5
    const SkewGame g = sampling::odd_int_game(n, 4, stream);
    const auto vs = vertices_of_optimal_set(g);
    if (!(vs.unique() && support(vs.vertices[0]) == ActionSet::full(n))) continue;
    ++hit;
    const auto kap = kaplansky_totally_mixed(g);
    REQUIRE(kap.has_value());
    CHECK(kap->probs() == vs.vertices[0].probs());
  }
  CHECK(hit > 40);
}

TEST_CASE("matching-sum pfaffian caps") {
  CHECK_THROWS_AS(oracle::pfaffian_by_matchings(std::vector<RatVec>(10, RatVec(10, BigRat(0)))),
                  TooLarge);
  CHECK_THROWS_AS(oracle::pfaffian_by_matchings(std::vector<RatVec>(3, RatVec(3, BigRat(0)))),
                  OddDimension);
}

TEST_CASE("singular submatrix witness") {
  CHECK(!singular_submatrix_witness(rps()).has_value());
  CHECK(!singular_submatrix_witness(rps4()).has_value());

  const auto w = singular_submatrix_witness(all_zero(3));
  REQUIRE(w.has_value());
  CHECK(w->size() == 2);

  for (const SkewGame& g : degenerate_fixtures()) {
    const auto witness = singular_submatrix_witness(g);
    REQUIRE(witness.has_value());
    CHECK(witness->size() % 2 == 0);
    // Verify singularity independently via the Pfaffian: Pf = 0 iff det = 0
    // for even skew matrices.
    CHECK(pfaffian(restrict(g, *witness).rows()) == 0);
  }
}
