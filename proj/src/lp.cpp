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

#include "symzero/lp.hpp"

#include <cstdint>
#include <stdexcept>

#include "symzero/errors.hpp"

namespace symzero::lp {

namespace {

// ---------------------------------------------------------------------------
// Integerized form: each row (and the objective) scaled by a positive integer
// so that all tableau entries start as integers. Row scaling preserves the
// feasible set; the objective scale is divided back out of the optimum.
// ---------------------------------------------------------------------------

struct IntRow {
  std::vector<BigInt> coeffs;  // length num_vars
  Relation rel = Relation::LessEq;
  BigInt rhs;
};

struct IntProgram {
  int num_vars = 0;
  std::vector<BigInt> objective;
  BigInt objective_scale = 1;
  std::vector<IntRow> rows;
};

BigInt lcm_of_denominators(const RatVec& values, const BigRat& extra) {
  BigInt l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  }
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), extra.get_den().get_mpz_t());
  return l;
}

BigInt scaled_to_int(const BigRat& v, const BigInt& scale) {
  BigInt out = scale;
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), v.get_den().get_mpz_t());
  out *= v.get_num();
  return out;
}

IntProgram integerize(const Program& p) {
  IntProgram out;
  out.num_vars = p.num_vars;
  if (static_cast<int>(p.objective.size()) != p.num_vars) {
    throw DimensionMismatch("objective width does not match variable count");
  }
  const BigRat zero(0);
  out.objective_scale = lcm_of_denominators(p.objective, zero);
  out.objective.reserve(p.num_vars);
  for (const auto& c : p.objective) out.objective.push_back(scaled_to_int(c, out.objective_scale));
  out.rows.reserve(p.constraints.size());
  for (const auto& row : p.constraints) {
    if (static_cast<int>(row.coeffs.size()) != p.num_vars) {
      throw DimensionMismatch("constraint width does not match variable count");
    }
    IntRow ir;
    ir.rel = row.rel;
    const BigInt scale = lcm_of_denominators(row.coeffs, row.rhs);
    ir.coeffs.reserve(p.num_vars);
    for (const auto& c : row.coeffs) ir.coeffs.push_back(scaled_to_int(c, scale));
    ir.rhs = scaled_to_int(row.rhs, scale);
    out.rows.push_back(std::move(ir));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scalar policies. The tableau stores values scaled by the previous pivot
// `den` (Edmonds-style integer pivoting): the real cell value is T[i][j]/den,
// and every pivot division is exact. `den` can turn negative after a
// degenerate drive-out pivot, so single-cell sign queries multiply by
// sgn(den) while ratio comparisons cross-multiply (the den^2 factor keeps
// them sign-safe).
// ---------------------------------------------------------------------------

struct I64Overflow {};

struct I64Ops {
  using Int = std::int64_t;
  struct Scratch {};

  static void set(Int& dst, const BigInt& src) {
    if (!src.fits_slong_p()) throw I64Overflow{};
    dst = src.get_si();
  }
  static void set_zero(Int& dst) { dst = 0; }
  static void sub_assign(Int& dst, Int src, Scratch&) {
    if (__builtin_sub_overflow(dst, src, &dst)) throw I64Overflow{};
  }
  static int sign(Int v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

  // dst = (dst * piv - a * b) / den, exactly.
  static void pivot_update(Int& dst, Int piv, Int a, Int b, Int den, Scratch&) {
    Int t1, t2;
    if (__builtin_mul_overflow(dst, piv, &t1)) throw I64Overflow{};
    if (__builtin_mul_overflow(a, b, &t2)) throw I64Overflow{};
    if (__builtin_sub_overflow(t1, t2, &t1)) throw I64Overflow{};
    if (t1 % den != 0) throw std::logic_error("integer pivot division not exact");
    dst = t1 / den;
  }

  // Compares a*d with b*c.
  static int cmp_products(Int a, Int d, Int b, Int c, Scratch&) {
    Int t1, t2;
    if (__builtin_mul_overflow(a, d, &t1)) throw I64Overflow{};
    if (__builtin_mul_overflow(b, c, &t2)) throw I64Overflow{};
    return t1 < t2 ? -1 : (t1 > t2 ? 1 : 0);
  }

  static BigRat to_rat(Int num, Int den) {
    BigRat q(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
    q.canonicalize();
    return q;
  }
};

struct MpzOps {
  using Int = BigInt;
  struct Scratch {
    BigInt t1, t2;
  };

  static void set(Int& dst, const BigInt& src) { dst = src; }
  static void set_zero(Int& dst) { dst = 0; }
  static void sub_assign(Int& dst, const Int& src, Scratch&) { dst -= src; }
  static int sign(const Int& v) { return sgn(v); }

  static void pivot_update(Int& dst, const Int& piv, const Int& a, const Int& b, const Int& den,
                           Scratch& s) {
    mpz_mul(s.t1.get_mpz_t(), dst.get_mpz_t(), piv.get_mpz_t());
    mpz_mul(s.t2.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_sub(s.t1.get_mpz_t(), s.t1.get_mpz_t(), s.t2.get_mpz_t());
    mpz_divexact(dst.get_mpz_t(), s.t1.get_mpz_t(), den.get_mpz_t());
  }

  static int cmp_products(const Int& a, const Int& d, const Int& b, const Int& c, Scratch& s) {
    mpz_mul(s.t1.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    mpz_mul(s.t2.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
    return mpz_cmp(s.t1.get_mpz_t(), s.t2.get_mpz_t());
  }

  static BigRat to_rat(const Int& num, const Int& den) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
  }
};

// ---------------------------------------------------------------------------
// The tableau. Columns: structural vars, then slack/surplus, then artificial,
// then rhs. Rows: one per constraint, then the phase-2 objective row, then
// the phase-1 objective row when artificials exist. Artificial columns never
// enter the basis; once built they are skipped by every update.
// ---------------------------------------------------------------------------

template <class Ops>
class Simplex {
  using Z = typename Ops::Int;

 public:
  Solution run(const IntProgram& p) {
    build(p);
    if (!phase_one()) return Solution{Status::Infeasible, BigRat(0), {}};
    if (!phase_two()) return Solution{Status::Unbounded, BigRat(0), {}};
    return extract(p);
  }

 private:
  int rows_ = 0;       // constraint rows
  int cols_ = 0;       // total columns incl. rhs
  int num_vars_ = 0;   // structural
  int art_begin_ = 0;  // first artificial column
  int rhs_ = 0;        // rhs column index
  int zrow_ = 0;       // phase-2 objective row
  int z1row_ = 0;      // phase-1 objective row (only valid with artificials)
  bool have_artificials_ = false;
  std::vector<Z> t_;
  std::vector<int> basis_;
  Z den_;
  typename Ops::Scratch scratch_;

  Z& at(int r, int c) { return t_[static_cast<std::size_t>(r) * cols_ + c]; }

  void build(const IntProgram& p) {
    num_vars_ = p.num_vars;
    rows_ = static_cast<int>(p.rows.size());

    int num_slack = 0;
    int num_art = 0;
    std::vector<int> flip(rows_, 1);
    std::vector<Relation> rel(rows_);
    for (int r = 0; r < rows_; ++r) {
      rel[r] = p.rows[r].rel;
      if (sgn(p.rows[r].rhs) < 0) {
        flip[r] = -1;
        rel[r] = rel[r] == Relation::LessEq
                     ? Relation::GreaterEq
                     : (rel[r] == Relation::GreaterEq ? Relation::LessEq : Relation::Eq);
      }
      // A >= row with rhs 0 is just a flipped <= row; no artificial needed.
      if (rel[r] == Relation::GreaterEq && sgn(p.rows[r].rhs) == 0) {
        flip[r] = -flip[r];
        rel[r] = Relation::LessEq;
      }
      if (rel[r] == Relation::LessEq || rel[r] == Relation::GreaterEq) ++num_slack;
      if (rel[r] == Relation::Eq || rel[r] == Relation::GreaterEq) ++num_art;
    }

    have_artificials_ = num_art > 0;
    art_begin_ = num_vars_ + num_slack;
    rhs_ = art_begin_ + num_art;
    cols_ = rhs_ + 1;
    zrow_ = rows_;
    z1row_ = have_artificials_ ? rows_ + 1 : rows_;
    const int total_rows = z1row_ + 1;

    t_.resize(static_cast<std::size_t>(total_rows) * cols_);
    basis_.assign(rows_, -1);
    static const BigInt kOne(1);
    static const BigInt kMinusOne(-1);
    Ops::set(den_, kOne);

    for (int r = 0; r < total_rows; ++r) {
      for (int c = 0; c < cols_; ++c) Ops::set_zero(at(r, c));
    }

    int slack = num_vars_;
    int art = art_begin_;
    BigInt tmp;
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < num_vars_; ++c) {
        tmp = p.rows[r].coeffs[c];
        if (flip[r] < 0) tmp = -tmp;
        Ops::set(at(r, c), tmp);
      }
      tmp = p.rows[r].rhs;
      if (flip[r] < 0) tmp = -tmp;
      Ops::set(at(r, rhs_), tmp);

      switch (rel[r]) {
        case Relation::LessEq:
          Ops::set(at(r, slack), kOne);
          basis_[r] = slack++;
          break;
        case Relation::GreaterEq:
          Ops::set(at(r, slack), kMinusOne);
          ++slack;
          Ops::set(at(r, art), kOne);
          basis_[r] = art++;
          break;
        case Relation::Eq:
          Ops::set(at(r, art), kOne);
          basis_[r] = art++;
          break;
      }
    }

    // Phase-2 objective row: negated costs under the zero-cost start basis.
    for (int c = 0; c < num_vars_; ++c) {
      tmp = -p.objective[c];
      Ops::set(at(zrow_, c), tmp);
    }

    // Phase-1 objective row (maximize minus the sum of artificials): the
    // reduced-cost row equals minus the sum of the artificial-basic rows over
    // the non-artificial columns.
    if (have_artificials_) {
      for (int r = 0; r < rows_; ++r) {
        if (basis_[r] < art_begin_) continue;
        for (int c = 0; c <= rhs_; ++c) {
          if (c >= art_begin_ && c < rhs_) continue;
          Ops::sub_assign(at(z1row_, c), at(r, c), scratch_);
        }
      }
    }
  }

  int den_sign() { return Ops::sign(den_); }

  void pivot(int prow, int pcol) {
    const int total_rows = have_artificials_ ? z1row_ + 1 : zrow_ + 1;
    for (int r = 0; r < total_rows; ++r) {
      if (r == prow) continue;
      for (int c = 0; c <= rhs_; ++c) {
        if (c == pcol || (c >= art_begin_ && c < rhs_)) continue;
        Ops::pivot_update(at(r, c), at(prow, pcol), at(r, pcol), at(prow, c), den_, scratch_);
      }
      Ops::set_zero(at(r, pcol));
    }
    den_ = at(prow, pcol);
    basis_[prow] = pcol;
  }

  // Bland entering rule against the given objective row; -1 when optimal.
  int entering(int objective_row) {
    const int ds = den_sign();
    for (int c = 0; c < art_begin_; ++c) {
      if (Ops::sign(at(objective_row, c)) * ds < 0) return c;
    }
    return -1;
  }

  // Bland leaving rule (least ratio, ties by least basic variable index);
  // -1 when the entering column is unbounded.
  int leaving(int pcol) {
    const int ds = den_sign();
    int best = -1;
    for (int r = 0; r < rows_; ++r) {
      if (Ops::sign(at(r, pcol)) * ds <= 0) continue;
      if (best < 0) {
        best = r;
        continue;
      }
      const int cmp =
          Ops::cmp_products(at(r, rhs_), at(best, pcol), at(best, rhs_), at(r, pcol), scratch_);
      if (cmp < 0 || (cmp == 0 && basis_[r] < basis_[best])) best = r;
    }
    return best;
  }

  bool phase_one() {
    if (!have_artificials_) return true;
    while (true) {
      const int pcol = entering(z1row_);
      if (pcol < 0) break;
      const int prow = leaving(pcol);
      if (prow < 0) {
        // -(sum of artificials) is bounded above by 0.
        throw std::logic_error("phase-1 objective unbounded");
      }
      pivot(prow, pcol);
    }
    if (Ops::sign(at(z1row_, rhs_)) != 0) return false;

    // Drive remaining zero-level artificials out of the basis. A row with no
    // nonzero structural/slack entry is redundant and stays all-zero.
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < art_begin_) continue;
      for (int c = 0; c < art_begin_; ++c) {
        if (Ops::sign(at(r, c)) != 0) {
          pivot(r, c);
          break;
        }
      }
    }
    return true;
  }

  bool phase_two() {
    while (true) {
      const int pcol = entering(zrow_);
      if (pcol < 0) return true;
      const int prow = leaving(pcol);
      if (prow < 0) return false;
      pivot(prow, pcol);
    }
  }

  Solution extract(const IntProgram& p) {
    Solution sol;
    sol.status = Status::Optimal;
    sol.point.assign(num_vars_, BigRat(0));
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < num_vars_) {
        sol.point[basis_[r]] = Ops::to_rat(at(r, rhs_), den_);
      }
    }
    sol.value = Ops::to_rat(at(zrow_, rhs_), den_);
    sol.value /= BigRat(p.objective_scale);
    return sol;
  }
};

bool fits_fast_path(const IntProgram& p) {
  // Seed magnitudes small enough that typical pivot sequences stay inside
  // int64; growth overflow is caught per-operation regardless.
  static const BigInt kLimit = BigInt(1) << 31;
  auto small = [](const BigInt& v) {
    return mpz_cmpabs(v.get_mpz_t(), kLimit.get_mpz_t()) <= 0;
  };
  for (const auto& c : p.objective) {
    if (!small(c)) return false;
  }
  for (const auto& row : p.rows) {
    for (const auto& c : row.coeffs) {
      if (!small(c)) return false;
    }
    if (!small(row.rhs)) return false;
  }
  return true;
}

}  // namespace

Solution solve(const Program& program) {
  const IntProgram ip = integerize(program);
  if (fits_fast_path(ip)) {
    thread_local Simplex<I64Ops> fast;
    try {
      return fast.run(ip);
    } catch (const I64Overflow&) {
      // retry below with big integers
    }
  }
  thread_local Simplex<MpzOps> exact;
  return exact.run(ip);
}

Solution lp_optimize(const Program& program) {
  Solution sol = solve(program);
  if (sol.status == Status::Infeasible) throw Infeasible("linear program is infeasible");
  if (sol.status == Status::Unbounded) throw Unbounded("linear program is unbounded");
  return sol;
}

}  // namespace symzero::lp
