// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "geodim/vass.hpp"

namespace geodim {

// Hierholzer walk from `start` to `end` using transition t exactly
// multiplicity[t] times. At every state the walk leaves by the lowest-index
// transition with remaining uses. Throws InputError when the multigraph has
// no such Euler path.
std::vector<TransitionId> euler_walk(const Vass& v, const std::vector<std::uint64_t>& multiplicity,
                                     StateId start, StateId end);

}  // namespace geodim
