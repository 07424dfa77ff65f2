// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact (rational) two-phase simplex with Bland's rule plus depth-first
// branch and bound. Sized for the tiny systems the deciders build.

#include <cstddef>
#include <optional>
#include <vector>

#include "geodim/rational.hpp"

namespace geodim::geometry {

enum class Relation { eq, ge, le };

struct LinearConstraint {
  RatVec coeffs;
  Relation rel = Relation::eq;
  Rational rhs;
};

struct IntegerProgram {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> constraints;
  std::vector<BigInt> lower;                 // empty = all zero
  std::vector<std::optional<BigInt>> upper;  // empty = all unbounded
  RatVec objective;                          // minimised; empty = zero
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  RatVec x;
  Rational value;
};

LpResult solve_lp(const IntegerProgram& p);

struct IlpResult {
  LpStatus status = LpStatus::infeasible;
  IntVec x;
  Rational value;
  std::size_t nodes = 0;
};

// Throws ResourceLimit once more than node_budget relaxations were solved.
IlpResult solve_ilp(const IntegerProgram& p, std::size_t node_budget);

// Lexicographically least integer point, by successive minimisation of
// x_0, x_1, ... . Variables must be bounded below.
std::optional<IntVec> lexmin_ilp(IntegerProgram p, std::size_t node_budget, std::size_t* nodes = nullptr);

}  // namespace geodim::geometry
