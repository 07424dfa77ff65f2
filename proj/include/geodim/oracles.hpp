// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Naive ground-truth engines. They share no code with the deciders beyond
// the core model, so a disagreement points at one side.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geodim/vass.hpp"

namespace geodim::oracles {

struct BfsReach {
  std::vector<ZConfiguration> configs;  // BFS order
  std::vector<std::size_t> distance;
  // Some successor was dropped by the box or the depth cap.
  bool truncated = false;

  std::optional<std::size_t> distance_to(const ZConfiguration& c) const;
  // Least distance of a reached configuration covering t.
  std::optional<std::size_t> distance_to_cover(const ZConfiguration& t) const;
};

// Configurations reachable from s without leaving 0 <= c[i] <= box[i] and
// within `depth` steps.
BfsReach bfs_reach(const Vass& v, const Configuration& s, const IntVec& box, std::uint64_t depth);

struct UpwardBasis {
  std::vector<std::vector<IntVec>> minimal;  // per state, an antichain
  std::size_t iterations = 0;

  bool contains(const Configuration& c) const;
};

// Minimal elements of the set of configurations that can cover t.
// Throws ResourceLimit after `budget` worklist steps.
UpwardBasis backward_coverability(const Vass& v, const Configuration& t, std::size_t budget = 1000000);

// nullopt marks omega.
using OmegaVec = std::vector<std::optional<BigInt>>;

struct KmNode {
  std::optional<std::size_t> parent;
  std::optional<TransitionId> via;
  StateId state = 0;
  OmegaVec values;
};

struct KarpMillerTree {
  std::vector<KmNode> nodes;
  bool truncated = false;

  // Queries throw ResourceLimit on a truncated tree.
  bool bounded() const;
  bool counter_bounded(std::size_t i) const;
  bool simultaneous_omega(StateId q) const;
  // "id parent state v1,v2,..." per node, "w" for omega, parent -1 at the root.
  std::string dump(const Vass& v) const;
};

KarpMillerTree karp_miller(const Vass& v, const Configuration& s, std::size_t budget = 1000000);

}  // namespace geodim::oracles
