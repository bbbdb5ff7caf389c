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
#include "symzero/lp.hpp"
#include "symzero/sampling.hpp"

using namespace symzero;
using lp::Constraint;
using lp::Program;
using lp::Relation;
using lp::Status;

namespace {

Constraint row(RatVec coeffs, Relation rel, BigRat rhs) {
  Constraint c;
  c.coeffs = std::move(coeffs);
  c.rel = rel;
  c.rhs = std::move(rhs);
  return c;
}

// Simplex-membership program: x in the probability simplex over k actions.
Program simplex_program(int k) {
  Program p;
  p.num_vars = k;
  p.objective.assign(k, BigRat(0));
  p.constraints.push_back(row(RatVec(k, BigRat(1)), Relation::Eq, BigRat(1)));
  return p;
}

bool satisfies(const Program& p, const RatVec& x) {
  for (const auto& c : p.constraints) {
    BigRat lhs(0);
    for (int i = 0; i < p.num_vars; ++i) lhs += c.coeffs[i] * x[i];
    switch (c.rel) {
      case Relation::LessEq:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Eq:
        if (lhs != c.rhs) return false;
        break;
      case Relation::GreaterEq:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  for (const auto& v : x) {
    if (sgn(v) < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("maximize a coordinate over the simplex") {
  Program p = simplex_program(3);
  p.objective[0] = 1;
  const auto sol = lp::lp_optimize(p);
  CHECK(sol.status == Status::Optimal);
  CHECK(sol.value == 1);
  CHECK(sol.point == RatVec{BigRat(1), BigRat(0), BigRat(0)});
}

TEST_CASE("maximize p1 over P(rock-paper-scissors) gives 1/3") {
  // G p <= 0 rows for RPS plus the simplex equality.
  Program p = simplex_program(3);
  p.objective[0] = 1;
  p.constraints.push_back(row({BigRat(0), BigRat(1), BigRat(-1)}, Relation::LessEq, BigRat(0)));
  p.constraints.push_back(row({BigRat(-1), BigRat(0), BigRat(1)}, Relation::LessEq, BigRat(0)));
  p.constraints.push_back(row({BigRat(1), BigRat(-1), BigRat(0)}, Relation::LessEq, BigRat(0)));
  const auto sol = lp::lp_optimize(p);
  CHECK(sol.value == BigRat(1, 3));
  CHECK(sol.point == RatVec{BigRat(1, 3), BigRat(1, 3), BigRat(1, 3)});
}

TEST_CASE("infeasible programs are reported") {
  Program p = simplex_program(2);
  p.objective[0] = 1;
  p.constraints.push_back(row({BigRat(1), BigRat(0)}, Relation::LessEq, BigRat(-1)));
  CHECK(lp::solve(p).status == Status::Infeasible);
  CHECK_THROWS_AS(lp::lp_optimize(p), Infeasible);
}

TEST_CASE("unbounded programs are reported") {
  Program p;
  p.num_vars = 2;
  p.objective = {BigRat(1), BigRat(0)};
  p.constraints.push_back(row({BigRat(0), BigRat(1)}, Relation::LessEq, BigRat(5)));
  CHECK(lp::solve(p).status == Status::Unbounded);
  CHECK_THROWS_AS(lp::lp_optimize(p), Unbounded);
}

TEST_CASE("equalities, surplus rows and negative right-hand sides") {
  // max x + y  s.t.  x + y = 3/2,  x >= 1/2,  -y >= -2  (i.e. y <= 2)
  Program p;
  p.num_vars = 2;
  p.objective = {BigRat(1), BigRat(1)};
  p.constraints.push_back(row({BigRat(1), BigRat(1)}, Relation::Eq, BigRat(3, 2)));
  p.constraints.push_back(row({BigRat(1), BigRat(0)}, Relation::GreaterEq, BigRat(1, 2)));
  p.constraints.push_back(row({BigRat(0), BigRat(-1)}, Relation::GreaterEq, BigRat(-2)));
  const auto sol = lp::lp_optimize(p);
  CHECK(sol.value == BigRat(3, 2));
  CHECK(satisfies(p, sol.point));

  // Flip the same program to exercise rhs normalization.
  Program q;
  q.num_vars = 2;
  q.objective = {BigRat(1), BigRat(-1)};
  q.constraints.push_back(row({BigRat(-1), BigRat(-1)}, Relation::Eq, BigRat(-4)));
  q.constraints.push_back(row({BigRat(-1), BigRat(0)}, Relation::LessEq, BigRat(-1)));
  const auto qsol = lp::lp_optimize(q);
  CHECK(qsol.value == 4);  // x = 4, y = 0
  CHECK(satisfies(q, qsol.point));
}

TEST_CASE("redundant equalities leave a driven-out artificial") {
  // Duplicate equality rows force the redundant-row path in phase 1.
  Program p;
  p.num_vars = 2;
  p.objective = {BigRat(1), BigRat(0)};
  p.constraints.push_back(row({BigRat(1), BigRat(1)}, Relation::Eq, BigRat(1)));
  p.constraints.push_back(row({BigRat(1), BigRat(1)}, Relation::Eq, BigRat(1)));
  p.constraints.push_back(row({BigRat(2), BigRat(2)}, Relation::Eq, BigRat(2)));
  const auto sol = lp::lp_optimize(p);
  CHECK(sol.value == 1);
  CHECK(satisfies(p, sol.point));
}

TEST_CASE("degenerate equality systems pivot zero-level artificials out") {
  // The pair x+y = 1, x+y+z = 1 forces z = 0: after phase 1 one artificial
  // can remain basic at level zero on a row whose only nonzero entry is the
  // z column, exercising the drive-out pivot (both coefficient signs).
  for (const long z_coeff : {1L, -1L}) {
    Program p;
    p.num_vars = 3;
    p.objective = {BigRat(1), BigRat(0), BigRat(0)};
    p.constraints.push_back(row({BigRat(1), BigRat(1), BigRat(0)}, Relation::Eq, BigRat(1)));
    p.constraints.push_back(
        row({BigRat(1), BigRat(1), BigRat(z_coeff)}, Relation::Eq, BigRat(1)));
    const auto sol = lp::lp_optimize(p);
    CHECK(sol.value == 1);
    CHECK(sol.point[2] == 0);
    CHECK(satisfies(p, sol.point));
  }
}

TEST_CASE("beale's cycling example terminates under bland's rule") {
  Program p;
  p.num_vars = 4;
  p.objective = {BigRat(3, 4), BigRat(-150), BigRat(1, 50), BigRat(-6)};
  p.constraints.push_back(row({BigRat(1, 4), BigRat(-60), BigRat(-1, 25), BigRat(9)},
                              Relation::LessEq, BigRat(0)));
  p.constraints.push_back(row({BigRat(1, 2), BigRat(-90), BigRat(-1, 50), BigRat(3)},
                              Relation::LessEq, BigRat(0)));
  p.constraints.push_back(row({BigRat(0), BigRat(0), BigRat(1), BigRat(0)},
                              Relation::LessEq, BigRat(1)));
  const auto sol = lp::lp_optimize(p);
  CHECK(sol.value == BigRat(1, 20));
  CHECK(satisfies(p, sol.point));
}

TEST_CASE("large coefficients fall back to big-integer pivoting") {
  const BigRat big(BigInt(1) << 45);
  Program p;
  p.num_vars = 2;
  p.objective = {big, BigRat(1)};
  p.constraints.push_back(row({big, big}, Relation::LessEq, big * 3));
  p.constraints.push_back(row({BigRat(1), BigRat(0)}, Relation::LessEq, BigRat(2)));
  const auto sol = lp::lp_optimize(p);
  CHECK(sol.value == big * 2 + 1);  // x = 2, y = 1
  CHECK(satisfies(p, sol.point));
}

TEST_CASE("fast path and big-integer path agree on random programs") {
  sampling::RandomStream stream(271);
  const BigRat scale(BigInt(1) << 40);
  for (int trial = 0; trial < 200; ++trial) {
    const int nvars = 2 + static_cast<int>(stream.next_below(3));
    const int nrows = 1 + static_cast<int>(stream.next_below(4));
    Program p = simplex_program(nvars);
    for (int i = 0; i < nvars; ++i) {
      p.objective[i] = BigRat(static_cast<long>(stream.next_below(11)) - 5);
    }
    for (int r = 0; r < nrows; ++r) {
      RatVec coeffs;
      for (int i = 0; i < nvars; ++i) {
        coeffs.emplace_back(static_cast<long>(stream.next_below(11)) - 5);
      }
      p.constraints.push_back(row(std::move(coeffs), Relation::LessEq,
                                  BigRat(static_cast<long>(stream.next_below(5)))));
    }

    const auto small = lp::solve(p);

    // Scaling every row and the objective by a 2^40 factor preserves the
    // feasible set, scales the optimum, and forces the GMP path.
    Program scaled = p;
    for (auto& c : scaled.objective) c *= scale;
    for (auto& c : scaled.constraints) {
      for (auto& v : c.coeffs) v *= scale;
      c.rhs *= scale;
    }
    const auto large = lp::solve(scaled);

    REQUIRE(small.status == large.status);
    if (small.status == Status::Optimal) {
      CHECK(large.value == small.value * scale);
      CHECK(satisfies(p, small.point));
      CHECK(satisfies(scaled, large.point));
    }
  }
}
