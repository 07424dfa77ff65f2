// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "geodim/bigint.hpp"

namespace geodim::geometry {

struct IntMatrix {
  std::size_t cols = 0;
  std::vector<IntVec> rows;
};

struct SmallSolutionOptions {
  // Relaxations solved before giving up with ResourceLimit.
  std::size_t node_budget = 200000;
};

// Lexicographically least x >= 0 with Ax = b and max |x_i| <= cap.
std::optional<IntVec> small_solution_eq(const IntMatrix& A, const IntVec& b, const BigInt& cap,
                                        const SmallSolutionOptions& opts = {});

// Lexicographically least x >= 0 with Ax >= b and max |x_i| <= cap. b >= 0.
std::optional<IntVec> small_solution_ineq(const IntMatrix& A, const IntVec& b, const BigInt& cap,
                                          const SmallSolutionOptions& opts = {});

// Among x >= 0 with Ax = b, lower <= x <= cap, the ones of least total
// sum; the lexicographically least of those.
std::optional<IntVec> min_sum_solution_eq(const IntMatrix& A, const IntVec& b, const IntVec& lower,
                                          const BigInt& cap, const SmallSolutionOptions& opts = {});

// (nN+1)^m (m+1) for n unknowns, m equations, max entry N. Concrete
// stand-in for the O(nN)^m small-solution bound of equality systems.
BigInt equality_cap(std::size_t unknowns, std::size_t equations, const BigInt& max_entry);

// (r+1)(rN)^r for r = rank(A), N = max entry of A and b.
BigInt inequality_cap(std::size_t rank, const BigInt& max_entry);

BigInt max_entry(const IntMatrix& A, const IntVec& b);

// Whether Ax = b has a solution in Z^n, ignoring signs and caps.
bool solvable_over_z(const IntMatrix& A, const IntVec& b);

}  // namespace geodim::geometry
