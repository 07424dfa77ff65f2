// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "geodim/vass.hpp"

namespace geodim {

// States q1..qd in a line joined by zero transitions; q1 has the self-loop e1
// and qi (i >= 2) has the self-loop -2e_{i-1} + e_i. From q1(0), covering
// qd(e_d) takes 2^d + d - 2 steps. Requires d >= 1.
Vass doubling_chain(std::size_t d);

// A linear path scheme: one state per loop effect, each carrying that
// self-loop, consecutive states joined by a zero-effect bridge.
Vass linear_path_scheme(const std::vector<IntVec>& loop_effects);

}  // namespace geodim
