// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "geodim/rational.hpp"
#include "geodim/scc.hpp"
#include "geodim/vass.hpp"

namespace geodim::geometry {

// A basis whose columns at `distinguished` form the identity matrix, row k
// carrying the 1 in column distinguished[k].
struct CleanBasis {
  RationalMatrix basis;
  std::vector<std::size_t> distinguished;

  std::size_t rank() const { return basis.rows(); }
  std::size_t dim() const { return basis.cols(); }
};

// Canonical clean basis: rref of the generators, K = pivot columns.
CleanBasis clean_basis(std::size_t dim, const std::vector<IntVec>& generators);
CleanBasis clean_basis(const RationalMatrix& generators);

// True when the submatrix at K is exactly the identity.
bool is_clean(const CleanBasis& b);

// Change of basis making K (any order) distinguished; nullopt when the
// columns at K are not a basis of the column space.
std::optional<CleanBasis> rebase(const CleanBasis& b, std::span<const std::size_t> K);

// Two cycles from the SCC base state whose effect difference is the
// generator: with = tree(p) t back(p'), without = tree(p') back(p').
struct CycleCertificate {
  TransitionId transition = 0;
  std::vector<TransitionId> with_transition;
  std::vector<TransitionId> without_transition;
};

struct SccCycles {
  std::size_t component = 0;
  StateId base = 0;
  std::vector<IntVec> generators;  // nonzero only
  std::vector<CycleCertificate> certificates;
  std::size_t rank = 0;
};

struct CycleSpace {
  std::size_t dim = 0;
  SccDecomposition sccs;
  std::vector<SccCycles> per_scc;  // one entry per component, same order
  std::vector<IntVec> generators;  // union, in component order
  std::size_t rank = 0;            // g
  std::size_t scc_rank = 0;        // g_scc
  CleanBasis basis;
};

CycleSpace cycle_space(const Vass& v);
std::size_t geometric_dimension(const Vass& v);
std::size_t scc_dimension(const Vass& v);

// Replays both certificate cycles and compares the difference.
bool verify_certificate(const Vass& v, StateId base, const IntVec& generator,
                        const CycleCertificate& cert);

}  // namespace geodim::geometry
