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

#include "symzero/skew_linalg.hpp"

#include "symzero/errors.hpp"

namespace symzero {

namespace {

void validate_skew(const std::vector<RatVec>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw LengthMismatch("matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (m[i][j] != -m[j][i]) throw NotSkewSymmetric("matrix violates A = -A^T");
    }
  }
}

// Pf([[0, a, b^T], [-a, 0, c^T], [-b, -c, D]]) = a * Pf(D - (b c^T - c b^T)/a)
BigRat pfaffian_in_place(std::vector<RatVec>& m) {
  const int n = static_cast<int>(m.size());
  BigRat result(1);
  BigRat term;
  for (int k = 0; k + 1 < n; k += 2) {
    // Pivot: bring a nonzero into (k, k+1), swapping row/column pairs.
    int pivot = -1;
    for (int j = k + 1; j < n; ++j) {
      if (sgn(m[k][j]) != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) return BigRat(0);
    if (pivot != k + 1) {
      std::swap(m[pivot], m[k + 1]);
      for (int i = 0; i < n; ++i) std::swap(m[i][pivot], m[i][k + 1]);
      result = -result;
    }
    const BigRat a = m[k][k + 1];
    result *= a;
    for (int i = k + 2; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        // m[i][j] -= (m[k][i]*m[k+1][j] - m[k][j]*m[k+1][i]) / a
        term = m[k][i];
        term *= m[k + 1][j];
        m[i][j] -= term / a;
        term = m[k][j];
        term *= m[k + 1][i];
        m[i][j] += term / a;
        m[j][i] = -m[i][j];
      }
    }
  }
  return result;
}

std::vector<RatVec> delete_index(const SkewGame& g, int skip) {
  const int n = g.n();
  std::vector<RatVec> out;
  out.reserve(n - 1);
  for (int i = 1; i <= n; ++i) {
    if (i == skip) continue;
    RatVec row;
    row.reserve(n - 1);
    for (int j = 1; j <= n; ++j) {
      if (j == skip) continue;
      row.push_back(g.at(i, j));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

BigRat pfaffian(const std::vector<RatVec>& matrix) {
  if (matrix.size() % 2 != 0) {
    throw OddDimension("Pfaffian requires an even-size matrix, got " +
                       std::to_string(matrix.size()));
  }
  validate_skew(matrix);
  auto work = matrix;
  return pfaffian_in_place(work);
}

RatVec principal_pfaffians(const SkewGame& g) {
  if (g.n() % 2 == 0) {
    throw EvenDimension("principal Pfaffians are defined for odd n, got " +
                        std::to_string(g.n()));
  }
  RatVec out;
  out.reserve(g.n());
  for (int i = 1; i <= g.n(); ++i) {
    auto sub = delete_index(g, i);
    out.push_back(pfaffian_in_place(sub));
  }
  return out;
}

RatVec kernel_vector(const SkewGame& g) {
  RatVec w = principal_pfaffians(g);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i % 2 == 1) w[i] = -w[i];
  }
  return w;
}

int rank(const SkewGame& g) {
  const int n = g.n();
  auto m = g.rows();
  int rank_count = 0;
  BigRat factor, term;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pivot = -1;
    for (int i = row; i < n; ++i) {
      if (sgn(m[i][col]) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    for (int i = row + 1; i < n; ++i) {
      if (sgn(m[i][col]) == 0) continue;
      factor = m[i][col] / m[row][col];
      for (int j = col; j < n; ++j) {
        term = factor;
        term *= m[row][j];
        m[i][j] -= term;
      }
    }
    ++row;
    ++rank_count;
  }
  return rank_count;
}

std::optional<Strategy> kaplansky_totally_mixed(const SkewGame& g) {
  if (g.n() % 2 == 0) {
    throw EvenDimension("Kaplansky's criterion is defined for odd n, got " +
                        std::to_string(g.n()));
  }
  const RatVec pf = principal_pfaffians(g);
  for (std::size_t i = 0; i < pf.size(); ++i) {
    if (sgn(pf[i]) == 0) return std::nullopt;
    if (i > 0 && sgn(pf[i]) == sgn(pf[i - 1])) return std::nullopt;
  }
  // Alternating Pfaffians make the kernel vector one-signed; normalizing by
  // its sum yields the unique totally mixed optimal strategy.
  RatVec w = kernel_vector(g);
  BigRat sum(0);
  for (const auto& x : w) sum += x;
  for (auto& x : w) x /= sum;
  return Strategy(std::move(w));
}

std::optional<ActionSet> kernel_sign_class(const SkewGame& g) {
  if (g.n() % 2 == 0) {
    throw EvenDimension("kernel sign class is defined for odd n, got " + std::to_string(g.n()));
  }
  const RatVec w = kernel_vector(g);
  for (const auto& x : w) {
    if (sgn(x) == 0) return std::nullopt;  // rank < n-1 or a zero coordinate
  }
  const ActionSet s = support(w).complement(g.n());
  return s.contains(1) ? s.complement(g.n()) : s;
}

}  // namespace symzero
