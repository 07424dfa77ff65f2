// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Karp-Miller style acceleration used by the deciders as a fallback
// certificate. Kept separate from the oracles module on purpose.
//
// Nodes optionally carry a bit set of "high" counters: bit i is set once the
// counter has been >= threshold somewhere on the branch. Acceleration only
// fires against an ancestor with the same state and the same bits, so the
// tree still covers every (state, bits, values) reachable in the product.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "geodim/compact.hpp"

namespace geodim::witness::detail {

constexpr Word kOmega = std::numeric_limits<Word>::max();

struct AccelNode {
  std::size_t parent;
  TransitionId via;
  StateId state;
  std::uint64_t flags;
};

struct AccelTree {
  std::size_t dim = 0;
  std::vector<AccelNode> nodes;
  std::vector<Word> values;  // flat, kOmega for omega
  bool truncated = false;

  std::span<const Word> at(std::size_t id) const { return {values.data() + id * dim, dim}; }
  bool has_omega() const;
};

AccelTree accelerate(const CompactVass& v, StateId s, std::span<const Word> x,
                     std::optional<Word> flag_threshold, std::size_t budget);

// Some node at `state` has values >= y (omega above everything).
bool tree_covers(const AccelTree& tree, StateId state, std::span<const Word> y);

}  // namespace geodim::witness::detail
