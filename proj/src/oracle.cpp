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

#include "symzero/oracle.hpp"

#include <algorithm>

#include "symzero/errors.hpp"

namespace symzero::oracle {

namespace {

// Exact Gaussian elimination; empty result when the system is singular.
std::optional<RatVec> solve_linear_system(std::vector<RatVec> a, RatVec b) {
  const int n = static_cast<int>(b.size());
  BigRat factor, term;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (sgn(a[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = col + 1; r < n; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      factor = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) {
        term = factor;
        term *= a[col][c];
        a[r][c] -= term;
      }
      term = factor;
      term *= b[col];
      b[r] -= term;
    }
  }
  RatVec x(n, BigRat(0));
  for (int r = n - 1; r >= 0; --r) {
    BigRat acc = b[r];
    for (int c = r + 1; c < n; ++c) {
      term = a[r][c];
      term *= x[c];
      acc -= term;
    }
    x[r] = acc / a[r][r];
  }
  return x;
}

BigRat determinant(std::vector<RatVec> a) {
  const int n = static_cast<int>(a.size());
  BigRat det(1), factor, term;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (sgn(a[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return BigRat(0);
    if (pivot != col) {
      std::swap(a[col], a[pivot]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      factor = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) {
        term = factor;
        term *= a[col][c];
        a[r][c] -= term;
      }
    }
  }
  return det;
}

bool feasible_point(const SkewGame& g, const RatVec& p) {
  for (const auto& v : p) {
    if (sgn(v) < 0) return false;
  }
  const RatVec gp = mat_vec(g, p);
  for (const auto& v : gp) {
    if (sgn(v) > 0) return false;
  }
  return true;
}

// Every vertex of P(G), regardless of the public size caps (callers cap).
std::vector<RatVec> enumerate_vertices(const SkewGame& g) {
  const int n = g.n();
  std::vector<RatVec> vertices;

  // Inequality rows 0..n-1: p_i = 0 candidates; rows n..2n-1: (Gp)_i = 0.
  const int num_ineq = 2 * n;
  const int need = n - 1;
  std::vector<int> combo(need);
  for (int i = 0; i < need; ++i) combo[i] = i;

  auto try_combo = [&]() {
    std::vector<RatVec> a;
    RatVec b;
    a.reserve(n);
    b.reserve(n);
    for (int idx : combo) {
      RatVec row(n, BigRat(0));
      if (idx < n) {
        row[idx] = 1;
      } else {
        for (int j = 1; j <= n; ++j) row[j - 1] = g.at(idx - n + 1, j);
      }
      a.push_back(std::move(row));
      b.emplace_back(0);
    }
    a.emplace_back(n, BigRat(1));
    b.emplace_back(1);

    auto x = solve_linear_system(std::move(a), std::move(b));
    if (!x) return;
    if (!feasible_point(g, *x)) return;
    if (std::find(vertices.begin(), vertices.end(), *x) == vertices.end()) {
      vertices.push_back(std::move(*x));
    }
  };

  if (need == 0) {
    // n = 1: the simplex equality alone pins p = (1).
    RatVec p{BigRat(1)};
    if (feasible_point(g, p)) vertices.push_back(std::move(p));
  } else {
    while (true) {
      try_combo();
      int i = need - 1;
      while (i >= 0 && combo[i] == num_ineq - need + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < need; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return vertices;
}

}  // namespace

VertexSet vertices_of_optimal_set(const SkewGame& g) {
  if (g.n() > 6) throw TooLarge("vertex enumeration is capped at n = 6");
  VertexSet out;
  for (auto& v : enumerate_vertices(g)) out.vertices.emplace_back(std::move(v));
  return out;
}

SupportCensus brute_supports(const SkewGame& g) {
  if (g.n() > 6) throw TooLarge("support enumeration is capped at n = 6");
  const auto vertices = enumerate_vertices(g);
  SupportCensus out;
  out.unique = vertices.size() == 1;
  std::set<ActionSet> closure;
  for (const auto& v : vertices) closure.insert(support(v));
  // Close under union: the barycenter of any vertex subset has support equal
  // to the union of their supports.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ActionSet> current(closure.begin(), closure.end());
    for (const auto& a : current) {
      for (const auto& b : current) {
        if (closure.insert(a.unite(b)).second) grew = true;
      }
    }
  }
  out.supports = std::move(closure);
  return out;
}

BigRat pfaffian_by_matchings(const std::vector<RatVec>& matrix) {
  const std::size_t n = matrix.size();
  if (n > 8) throw TooLarge("matching-sum Pfaffian is capped at 8x8");
  if (n % 2 != 0) throw OddDimension("Pfaffian requires an even-size matrix");
  for (const auto& row : matrix) {
    if (row.size() != n) throw LengthMismatch("matrix must be square");
  }
  if (n == 0) return BigRat(1);

  // Recursive expansion along the smallest live index:
  //   Pf(A) = sum_j (-1)^pos(j) A[first][j] Pf(A minus {first, j}),
  // which enumerates the signed perfect matchings.
  std::vector<int> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = static_cast<int>(i);

  struct Rec {
    const std::vector<RatVec>& m;
    BigRat run(std::vector<int>& live) {
      if (live.empty()) return BigRat(1);
      BigRat acc(0);
      const int first = live[0];
      for (std::size_t pos = 1; pos < live.size(); ++pos) {
        const int j = live[pos];
        std::vector<int> rest;
        rest.reserve(live.size() - 2);
        for (std::size_t k = 1; k < live.size(); ++k) {
          if (k != pos) rest.push_back(live[k]);
        }
        BigRat term = m[first][j];
        term *= run(rest);
        if (pos % 2 == 0) term = -term;
        acc += term;
      }
      return acc;
    }
  } rec{matrix};
  return rec.run(live);
}

std::optional<ActionSet> singular_submatrix_witness(const SkewGame& g) {
  const int n = g.n();
  if (n > 8) throw TooLarge("witness search is capped at n = 8");
  const auto vertices = enumerate_vertices(g);
  if (vertices.size() <= 1) return std::nullopt;

  auto submatrix = [&](ActionSet s) {
    const auto idx = s.actions();
    std::vector<RatVec> m(idx.size(), RatVec(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = 0; b < idx.size(); ++b) m[a][b] = g.at(idx[a], idx[b]);
    }
    return m;
  };

  // A game with multiple optima has a non-quasi-strict optimal vertex p:
  // some i outside p_+ with (Gp)_i = 0. Then G_S p_S = 0 for both S = p_+
  // and S = p_+ u {i}; whichever has even size is singular.
  for (const auto& p : vertices) {
    const ActionSet supp = support(p);
    const RatVec gp = mat_vec(g, p);
    for (int i = 1; i <= n; ++i) {
      if (supp.contains(i) || sgn(gp[i - 1]) != 0) continue;
      const ActionSet candidate = supp.size() % 2 == 0 ? supp : supp.with(i);
      if (sgn(determinant(submatrix(candidate))) == 0) return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace symzero::oracle
