// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// into the geometry, witness or zreach modules, so agreement is evidence.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "geodim/rational.hpp"
#include "geodim/small_solutions.hpp"
#include "geodim/vass.hpp"

namespace geodim::testing {

// Integer elimination with gcd normalisation; no division.
std::size_t int_rank(std::vector<IntVec> rows);
// Bareiss determinant of a square matrix.
BigInt bareiss_det(std::vector<IntVec> m);
// Each row scaled by the lcm of its denominators.
std::vector<IntVec> integer_rows(const geometry::RationalMatrix& m);

// Simple cycles as transition sequences, each reported once (rooted at
// its least state). Stops after `limit` cycles; `complete` says whether
// the enumeration finished.
struct CycleEnumeration {
  std::vector<std::vector<TransitionId>> cycles;
  bool complete = true;
};
CycleEnumeration simple_cycles(const Vass& v, std::size_t limit = 200000);

// g and g_scc from simple-cycle effects, SCCs by transitive closure.
struct BruteDims {
  std::size_t g = 0, g_scc = 0;
  bool complete = true;
};
BruteDims brute_dimensions(const Vass& v);

// Every K (ascending, |K| = rows) whose columns form an invertible block.
std::vector<std::vector<std::size_t>> valid_distinguished_sets(const geometry::RationalMatrix& basis);
bool brute_small(const geometry::RationalMatrix& basis, const IntVec& v, const BigInt& C);
bool brute_thin(const geometry::RationalMatrix& basis, const IntVec& v, const std::vector<BigInt>& Cvec);

// Fourier-Motzkin: is {x in Q^n : Ax >= b, x >= 0} nonempty?
bool fm_feasible(const geometry::IntMatrix& A, const IntVec& b);
// Nonnegative integer solution of Ax >= b of least max-norm, searched
// shell by shell up to `limit`.
std::optional<std::vector<std::int64_t>> min_norm_solution_ineq(const geometry::IntMatrix& A, const IntVec& b,
                                                                std::int64_t limit);

// Closed walk at a state reachable from `from` with integer effect >= 0
// and != 0, found by breadth-first search over (state, effect) with every
// partial effect inside [-box, box] and length <= max_len.
struct ClosedWalkSearch {
  std::optional<std::vector<TransitionId>> walk;
  StateId base = 0;
  std::size_t explored = 0;
};
ClosedWalkSearch brute_positive_closed_walk(const Vass& v, StateId from, std::int64_t box, std::size_t max_len);

// States reachable from q in the transition graph (q included).
std::vector<bool> graph_reachable(const Vass& v, StateId q);

// Random integer matrix entries in [-N, N].
IntVec random_ints(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi);

}  // namespace geodim::testing
