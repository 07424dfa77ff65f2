// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/euler.hpp"

#include <algorithm>
#include <utility>

#include "geodim/errors.hpp"

namespace geodim {

std::vector<TransitionId> euler_walk(const Vass& v, const std::vector<std::uint64_t>& multiplicity,
                                     StateId start, StateId end) {
  const std::size_t n = v.num_states();
  if (multiplicity.size() != v.num_transitions()) throw InputError("multiplicity arity mismatch");
  if (start >= n || end >= n) throw InputError("euler_walk: state out of range");

  std::vector<std::vector<TransitionId>> out(n);
  std::uint64_t total = 0;
  for (TransitionId t = 0; t < v.num_transitions(); ++t) {
    if (multiplicity[t] == 0) continue;
    out[v.transition(t).source].push_back(t);
    total += multiplicity[t];
  }
  std::vector<std::uint64_t> left = multiplicity;
  std::vector<std::size_t> cursor(n, 0);

  // (state, transition that entered it); npos marks the start.
  constexpr auto npos = static_cast<TransitionId>(-1);
  std::vector<std::pair<StateId, TransitionId>> stack{{start, npos}};
  std::vector<TransitionId> walk;
  walk.reserve(total);
  while (!stack.empty()) {
    const StateId u = stack.back().first;
    auto& c = cursor[u];
    while (c < out[u].size() && left[out[u][c]] == 0) ++c;
    if (c < out[u].size()) {
      const TransitionId t = out[u][c];
      --left[t];
      stack.emplace_back(v.transition(t).target, t);
    } else {
      if (stack.back().second != npos) walk.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(walk.begin(), walk.end());

  if (walk.size() != total) throw InputError("multiplicities are not an Euler path");
  StateId at = start;
  for (TransitionId t : walk) {
    if (v.transition(t).source != at) throw InputError("multiplicities are not an Euler path");
    at = v.transition(t).target;
  }
  if (at != end) throw InputError("multiplicities are not an Euler path");
  return walk;
}

}  // namespace geodim
