// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "geodim/vass.hpp"

namespace geodim {

struct SccDecomposition {
  // Topological order of the condensation: every bridge goes from a lower to
  // a higher component index. States inside a component are ascending.
  std::vector<std::vector<StateId>> components;
  std::vector<std::size_t> component_of;           // per state
  std::vector<std::vector<TransitionId>> internal;  // per component, ascending
  std::vector<TransitionId> bridges;                // ascending
  // Condensation is a simple path with exactly one bridge between consecutive
  // components (a single component counts as a line).
  bool line = false;
};

SccDecomposition scc_decompose(const Vass& v);

}  // namespace geodim
