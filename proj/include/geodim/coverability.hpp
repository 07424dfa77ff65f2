// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>

#include "geodim/bounds.hpp"
#include "geodim/vass.hpp"

namespace geodim::witness {

enum class Outcome { yes, no, inconclusive };
const char* to_string(Outcome o);

struct DeciderOptions {
  std::optional<BigInt> cap;  // default: the length bound for the problem
  std::size_t node_budget = 1000000;
  std::size_t ceiling_bits = kDefaultCeilingBits;
};

struct SearchStats {
  std::size_t nodes_expanded = 0;
  std::size_t nodes_stored = 0;
  std::size_t depth_reached = 0;
  std::size_t accel_nodes = 0;  // nodes of the fallback acceleration tree
};

struct CoverWitness {
  Run run;
  ZConfiguration target;
  std::size_t length() const { return run.length(); }
};

struct CoverResult {
  Outcome outcome = Outcome::inconclusive;
  std::optional<CoverWitness> witness;
  BoundParams params;
  BoundValue cap;
  bool cap_is_default = true;
  // `no` holds for every length, not just up to the cap: either the search
  // space closed, the default cap was used, or acceleration certified it.
  bool certified = false;
  bool accelerated = false;
  SearchStats stats;
};

// Shortest covering run (lexicographically least index sequence among the
// shortest) of length <= cap. Default cap min(L_g, K_g).
CoverResult decide_coverability(const Vass& v, const Configuration& s, const Configuration& t,
                                const DeciderOptions& opts = {});

// Covering run to q(G, ..., G). Default cap is the simultaneous-unboundedness
// L_g for this G.
CoverResult decide_uniform_cover(const Vass& v, const Configuration& s, StateId q, const BigInt& G,
                                 const DeciderOptions& opts = {});

// (d, n, M, g) of v with the given target norm and G.
BoundParams params_of(const Vass& v, const BigInt& ynorm = 0, const BigInt& G = 0);

BoundValue min_bound(const BoundValue& a, const BoundValue& b);

}  // namespace geodim::witness
