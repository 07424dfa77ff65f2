// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "geodim/cycle_space.hpp"

namespace geodim::geometry {

struct Profile {
  std::vector<std::size_t> distinguished;  // K*, ascending
  std::vector<BigInt> sorted_values;       // u_1 <= ... <= u_g
};

enum class Verdict { small, large, thin, thick };
const char* to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::small;
  Profile profile;
  // Clean basis with distinguished set K*; present for small and thin.
  std::optional<CleanBasis> witness;
};

// Matroid greedy over coordinates ordered by (v[i], i).
Profile greedy_distinguished(const CleanBasis& space, const IntVec& v);
Profile greedy_distinguished(const CycleSpace& space, const IntVec& v);

Classification classify_small(const CleanBasis& space, const IntVec& v, const BigInt& C);
Classification classify_small(const CycleSpace& space, const IntVec& v, const BigInt& C);

// Cvec must be ascending with one threshold per basis vector; throws
// InputError otherwise.
Classification classify_thin(const CleanBasis& space, const IntVec& v, const std::vector<BigInt>& Cvec);
Classification classify_thin(const CycleSpace& space, const IntVec& v, const std::vector<BigInt>& Cvec);

}  // namespace geodim::geometry
