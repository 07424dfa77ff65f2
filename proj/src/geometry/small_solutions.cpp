// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/small_solutions.hpp"

#include "geodim/errors.hpp"
#include "geodim/ilp.hpp"

namespace geodim::geometry {

namespace {

void check_shape(const IntMatrix& A, const IntVec& b) {
  if (A.rows.size() != b.size())
    throw InputError("system has " + std::to_string(A.rows.size()) + " rows but " +
                     std::to_string(b.size()) + " right-hand sides");
  for (const auto& r : A.rows)
    if (r.size() != A.cols) throw InputError("matrix row length does not match column count");
}

IntegerProgram make_program(const IntMatrix& A, const IntVec& b, Relation rel, const BigInt& cap) {
  if (cap < 0) throw InputError("cap must be nonnegative");
  IntegerProgram p;
  p.num_vars = A.cols;
  for (std::size_t i = 0; i < A.rows.size(); ++i)
    p.constraints.push_back({RatVec(A.rows[i].begin(), A.rows[i].end()), rel, Rational(b[i])});
  p.upper.assign(A.cols, cap);
  return p;
}

}  // namespace

std::optional<IntVec> small_solution_eq(const IntMatrix& A, const IntVec& b, const BigInt& cap,
                                        const SmallSolutionOptions& opts) {
  check_shape(A, b);
  if (!solvable_over_z(A, b)) return std::nullopt;
  return lexmin_ilp(make_program(A, b, Relation::eq, cap), opts.node_budget);
}

std::optional<IntVec> small_solution_ineq(const IntMatrix& A, const IntVec& b, const BigInt& cap,
                                          const SmallSolutionOptions& opts) {
  check_shape(A, b);
  for (const auto& x : b)
    if (x < 0) throw InputError("right-hand side has a negative entry");
  return lexmin_ilp(make_program(A, b, Relation::ge, cap), opts.node_budget);
}

std::optional<IntVec> min_sum_solution_eq(const IntMatrix& A, const IntVec& b, const IntVec& lower,
                                          const BigInt& cap, const SmallSolutionOptions& opts) {
  check_shape(A, b);
  if (lower.size() != A.cols) throw InputError("lower bound arity does not match column count");
  // Branching cannot refute a lattice with no points, so rule that out first.
  if (!solvable_over_z(A, b)) return std::nullopt;
  IntegerProgram p = make_program(A, b, Relation::eq, cap);
  p.lower = lower;
  p.objective.assign(A.cols, Rational(1));
  IlpResult best = solve_ilp(p, opts.node_budget);
  if (best.status != LpStatus::optimal) return std::nullopt;
  RatVec ones(A.cols, Rational(1));
  p.constraints.push_back({ones, Relation::eq, best.value});
  p.objective.clear();
  auto point = lexmin_ilp(std::move(p), opts.node_budget);
  if (!point) throw std::logic_error("optimal total lost after fixing it");
  return point;
}

BigInt equality_cap(std::size_t unknowns, std::size_t equations, const BigInt& max_entry) {
  BigInt base = BigInt(static_cast<unsigned long>(unknowns)) * max_entry + 1;
  BigInt p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), equations);
  return p * BigInt(static_cast<unsigned long>(equations + 1));
}

BigInt inequality_cap(std::size_t rank, const BigInt& max_entry) {
  BigInt base = BigInt(static_cast<unsigned long>(rank)) * max_entry;
  BigInt p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), rank);
  return p * BigInt(static_cast<unsigned long>(rank + 1));
}

BigInt max_entry(const IntMatrix& A, const IntVec& b) {
  BigInt m = inf_norm(b);
  for (const auto& r : A.rows) {
    BigInt n = inf_norm(r);
    if (n > m) m = n;
  }
  return m;
}

bool solvable_over_z(const IntMatrix& A, const IntVec& b) {
  check_shape(A, b);
  // Unimodular column operations bring A to lower echelon form H = AU; then
  // Ax = b is solvable iff Hy = b is, which forward substitution decides.
  std::vector<IntVec> H = A.rows;
  const std::size_t m = H.size(), n = A.cols;
  std::vector<std::size_t> pivot_col(m, n);
  std::size_t c = 0;
  for (std::size_t i = 0; i < m && c < n; ++i) {
    for (std::size_t j = c + 1; j < n; ++j) {
      while (H[i][j] != 0) {
        // Euclid on the pair of columns (c, j).
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), H[i][c].get_mpz_t(), H[i][j].get_mpz_t());
        for (std::size_t r = i; r < m; ++r) {
          H[r][c] -= q * H[r][j];
          std::swap(H[r][c], H[r][j]);
        }
      }
    }
    if (H[i][c] != 0) pivot_col[i] = c++;
  }
  std::vector<BigInt> y(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    BigInt rest = b[i];
    for (std::size_t k = 0; k < n; ++k)
      if (y[k] != 0) rest -= H[i][k] * y[k];
    if (pivot_col[i] == n) {
      if (rest != 0) return false;
      continue;
    }
    const BigInt& h = H[i][pivot_col[i]];
    if (!mpz_divisible_p(rest.get_mpz_t(), h.get_mpz_t())) return false;
    y[pivot_col[i]] = rest / h;
  }
  return true;
}

}  // namespace geodim::geometry
