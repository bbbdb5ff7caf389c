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

#include "symzero/solver.hpp"

#include "symzero/errors.hpp"

namespace symzero {

namespace {

// P(G): G p <= 0 (n rows) and sum p = 1, over p >= 0.
lp::Program polytope_program(const SkewGame& g) {
  const int n = g.n();
  lp::Program p;
  p.num_vars = n;
  p.objective.assign(n, BigRat(0));
  p.constraints.reserve(n + 1);
  for (int i = 1; i <= n; ++i) {
    lp::Constraint row;
    row.rel = lp::Relation::LessEq;
    row.rhs = 0;
    row.coeffs.reserve(n);
    for (int j = 1; j <= n; ++j) row.coeffs.push_back(g.at(i, j));
    p.constraints.push_back(std::move(row));
  }
  lp::Constraint simplex_row;
  simplex_row.rel = lp::Relation::Eq;
  simplex_row.rhs = 1;
  simplex_row.coeffs.assign(n, BigRat(1));
  p.constraints.push_back(std::move(simplex_row));
  return p;
}

void check_action(const SkewGame& g, int i) {
  if (i < 1 || i > g.n()) {
    throw OutOfRange("action " + std::to_string(i) + " not in {1.." + std::to_string(g.n()) + "}");
  }
}

BigRat coordinate_bound(const SkewGame& g, int i, int direction) {
  lp::Program p = polytope_program(g);
  p.objective[i - 1] = direction;
  const lp::Solution sol = lp::lp_optimize(p);
  return direction > 0 ? sol.value : -sol.value;
}

}  // namespace

Strategy some_optimal(const SkewGame& g) {
  const lp::Solution sol = lp::lp_optimize(polytope_program(g));
  return Strategy(sol.point);
}

BigRat max_coordinate(const SkewGame& g, int i) {
  check_action(g, i);
  return coordinate_bound(g, i, 1);
}

BigRat min_coordinate(const SkewGame& g, int i) {
  check_action(g, i);
  return coordinate_bound(g, i, -1);
}

ActionSet maximal_support(const SkewGame& g) {
  ActionSet s;
  for (int i = 1; i <= g.n(); ++i) {
    if (sgn(max_coordinate(g, i)) > 0) s = s.with(i);
  }
  return s;
}

ActionSet equalized_actions(const SkewGame& g) {
  // min over P(G) of (G p)_i, via maximizing its negation. The minimum is
  // <= 0 by the P(G) constraints; i is equalized iff it equals 0.
  ActionSet out;
  const int n = g.n();
  for (int i = 1; i <= n; ++i) {
    lp::Program p = polytope_program(g);
    for (int j = 1; j <= n; ++j) p.objective[j - 1] = -g.at(i, j);
    const lp::Solution sol = lp::lp_optimize(p);
    if (sgn(sol.value) == 0) out = out.with(i);
  }
  return out;
}

bool is_unique(const SkewGame& g) {
  for (int i = 1; i <= g.n(); ++i) {
    const BigRat hi = max_coordinate(g, i);
    // 0 <= min <= max, so max = 0 pins the coordinate without a second LP.
    if (sgn(hi) == 0) continue;
    if (min_coordinate(g, i) != hi) return false;
  }
  return true;
}

bool is_quasi_strict(const SkewGame& g, const Strategy& p) {
  if (p.n() != g.n()) throw DimensionMismatch("strategy length does not match game size");
  const RatVec gp = mat_vec(g, p.probs());
  for (const auto& v : gp) {
    if (sgn(v) > 0) throw NotOptimal("strategy is not in P(G)");
  }
  const ActionSet supp = support(p);
  for (int i = 1; i <= g.n(); ++i) {
    if (!supp.contains(i) && sgn(gp[i - 1]) == 0) return false;
  }
  return true;
}

SolveReport analyze(const SkewGame& g) {
  Strategy strategy = some_optimal(g);

  ActionSet max_supp;
  bool unique = true;
  for (int i = 1; i <= g.n(); ++i) {
    const BigRat hi = max_coordinate(g, i);
    if (sgn(hi) > 0) {
      max_supp = max_supp.with(i);
      if (unique && min_coordinate(g, i) != hi) unique = false;
    }
  }

  const bool qs = is_quasi_strict(g, strategy);
  return SolveReport{std::move(strategy), max_supp, unique, qs, BigRat(0)};
}

bool has_optimal_with_support(const SkewGame& g, ActionSet s) {
  if (s.empty()) throw EmptySubset("support query needs a nonempty action set");
  if (!s.subset_of(ActionSet::full(g.n()))) {
    throw OutOfRange("support set " + s.to_string() + " exceeds the game's actions");
  }
  const int n = g.n();
  const auto members = s.actions();
  const int k = static_cast<int>(members.size());

  // Variables: q_1..q_k (probabilities on S) and the uniform slack t.
  lp::Program p;
  p.num_vars = k + 1;
  p.objective.assign(k + 1, BigRat(0));
  p.objective[k] = 1;

  for (int i = 1; i <= n; ++i) {
    lp::Constraint row;
    row.rel = lp::Relation::LessEq;
    row.rhs = 0;
    row.coeffs.assign(k + 1, BigRat(0));
    for (int c = 0; c < k; ++c) row.coeffs[c] = g.at(i, members[c]);
    p.constraints.push_back(std::move(row));
  }
  lp::Constraint simplex_row;
  simplex_row.rel = lp::Relation::Eq;
  simplex_row.rhs = 1;
  simplex_row.coeffs.assign(k + 1, BigRat(0));
  for (int c = 0; c < k; ++c) simplex_row.coeffs[c] = 1;
  p.constraints.push_back(std::move(simplex_row));
  for (int c = 0; c < k; ++c) {
    lp::Constraint slack_row;  // t - q_c <= 0
    slack_row.rel = lp::Relation::LessEq;
    slack_row.rhs = 0;
    slack_row.coeffs.assign(k + 1, BigRat(0));
    slack_row.coeffs[c] = -1;
    slack_row.coeffs[k] = 1;
    p.constraints.push_back(std::move(slack_row));
  }

  const lp::Solution sol = lp::solve(p);
  if (sol.status == lp::Status::Infeasible) return false;  // empty face of P(G)
  if (sol.status != lp::Status::Optimal) throw Unbounded("support program cannot be unbounded");
  return sgn(sol.value) > 0;
}

bool subgame_totally_mixed(const SkewGame& g, ActionSet s) {
  if (s.empty()) throw EmptySubset("subgame query needs a nonempty action set");
  const SkewGame sub = restrict(g, s);
  return has_optimal_with_support(sub, ActionSet::full(sub.n()));
}

BimatrixSolution solve_bimatrix_zero_sum(const BimatrixZeroSum& game) {
  const int m = game.num_rows();
  const int n = game.num_cols();
  if (m == 0 || n == 0) throw EmptyMatrix("bimatrix game must be nonempty");
  for (const auto& row : game.payoffs) {
    if (static_cast<int>(row.size()) != n) throw LengthMismatch("payoff matrix must be rectangular");
  }

  // Row player: maximize v (split v = vp - vm) s.t. q^T A >= v per column.
  lp::Program row_lp;
  row_lp.num_vars = m + 2;
  row_lp.objective.assign(m + 2, BigRat(0));
  row_lp.objective[m] = 1;
  row_lp.objective[m + 1] = -1;
  for (int j = 0; j < n; ++j) {
    lp::Constraint c;  // vp - vm - sum_i A_ij q_i <= 0
    c.rel = lp::Relation::LessEq;
    c.rhs = 0;
    c.coeffs.assign(m + 2, BigRat(0));
    for (int i = 0; i < m; ++i) c.coeffs[i] = -game.payoffs[i][j];
    c.coeffs[m] = 1;
    c.coeffs[m + 1] = -1;
    row_lp.constraints.push_back(std::move(c));
  }
  lp::Constraint row_simplex;
  row_simplex.rel = lp::Relation::Eq;
  row_simplex.rhs = 1;
  row_simplex.coeffs.assign(m + 2, BigRat(0));
  for (int i = 0; i < m; ++i) row_simplex.coeffs[i] = 1;
  row_lp.constraints.push_back(std::move(row_simplex));

  const lp::Solution row_sol = lp::lp_optimize(row_lp);
  RatVec q(row_sol.point.begin(), row_sol.point.begin() + m);

  // Column player: minimize w s.t. A p <= w per row.
  lp::Program col_lp;
  col_lp.num_vars = n + 2;
  col_lp.objective.assign(n + 2, BigRat(0));
  col_lp.objective[n] = -1;
  col_lp.objective[n + 1] = 1;
  for (int i = 0; i < m; ++i) {
    lp::Constraint c;  // sum_j A_ij p_j - wp + wm <= 0
    c.rel = lp::Relation::LessEq;
    c.rhs = 0;
    c.coeffs.assign(n + 2, BigRat(0));
    for (int j = 0; j < n; ++j) c.coeffs[j] = game.payoffs[i][j];
    c.coeffs[n] = -1;
    c.coeffs[n + 1] = 1;
    col_lp.constraints.push_back(std::move(c));
  }
  lp::Constraint col_simplex;
  col_simplex.rel = lp::Relation::Eq;
  col_simplex.rhs = 1;
  col_simplex.coeffs.assign(n + 2, BigRat(0));
  for (int j = 0; j < n; ++j) col_simplex.coeffs[j] = 1;
  col_lp.constraints.push_back(std::move(col_simplex));

  const lp::Solution col_sol = lp::lp_optimize(col_lp);
  RatVec p(col_sol.point.begin(), col_sol.point.begin() + n);

  return BimatrixSolution{row_sol.value, Strategy(std::move(q)), Strategy(std::move(p))};
}

bool row_full_support_optimal(const BimatrixZeroSum& game) {
  const BimatrixSolution sol = solve_bimatrix_zero_sum(game);
  const int m = game.num_rows();
  const int n = game.num_cols();

  // Maximize the uniform slack t over {q in simplex : q^T A >= value}.
  lp::Program p;
  p.num_vars = m + 1;
  p.objective.assign(m + 1, BigRat(0));
  p.objective[m] = 1;
  for (int j = 0; j < n; ++j) {
    lp::Constraint c;  // -(q^T A)_j <= -value
    c.rel = lp::Relation::LessEq;
    c.rhs = -sol.value;
    c.coeffs.assign(m + 1, BigRat(0));
    for (int i = 0; i < m; ++i) c.coeffs[i] = -game.payoffs[i][j];
    p.constraints.push_back(std::move(c));
  }
  lp::Constraint simplex_row;
  simplex_row.rel = lp::Relation::Eq;
  simplex_row.rhs = 1;
  simplex_row.coeffs.assign(m + 1, BigRat(0));
  for (int i = 0; i < m; ++i) simplex_row.coeffs[i] = 1;
  p.constraints.push_back(std::move(simplex_row));
  for (int i = 0; i < m; ++i) {
    lp::Constraint c;  // t - q_i <= 0
    c.rel = lp::Relation::LessEq;
    c.rhs = 0;
    c.coeffs.assign(m + 1, BigRat(0));
    c.coeffs[i] = -1;
    c.coeffs[m] = 1;
    p.constraints.push_back(std::move(c));
  }
  const lp::Solution slack = lp::lp_optimize(p);
  return sgn(slack.value) > 0;
}

}  // namespace symzero
