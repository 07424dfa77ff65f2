// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "geodim/coverability.hpp"

namespace geodim::witness {

enum class NoPumpStatus { vacuous, confirmed, violated, inconclusive };
const char* to_string(NoPumpStatus s);

struct NoPumpCheck {
  StateId state = 0;
  CoverResult cover;  // uniform cover of (G, ..., G) at `state`, cap L_g
};

struct NoPumpReport {
  NoPumpStatus status = NoPumpStatus::inconclusive;
  BoundParams params;
  BoundValue H, L;
  // States q reached by some run on which every counter was >= H at some
  // point (not necessarily simultaneously).
  std::vector<StateId> premise_states;
  std::vector<NoPumpCheck> checks;
  std::size_t premise_nodes = 0;
};

// The premise is decided exactly with a flagged acceleration tree (flag i is
// set once counter i reached H); every premise state must then admit a
// uniform cover of length <= L. Resource limits give `inconclusive`.
NoPumpReport check_no_pump_property(const Vass& v, const Configuration& s, const BigInt& G,
                                    const DeciderOptions& opts = {});

}  // namespace geodim::witness
