// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <deque>

#include "geodim/errors.hpp"
#include "geodim/oracles.hpp"

namespace geodim::oracles {

bool UpwardBasis::contains(const Configuration& c) const {
  if (c.state() >= minimal.size()) return false;
  return std::any_of(minimal[c.state()].begin(), minimal[c.state()].end(),
                     [&](const IntVec& m) { return leq(m, c.values()); });
}

UpwardBasis backward_coverability(const Vass& v, const Configuration& t, std::size_t budget) {
  if (t.state() >= v.num_states() || t.values().size() != v.dim())
    throw InputError("target does not match the VASS");
  UpwardBasis basis;
  basis.minimal.resize(v.num_states());
  basis.minimal[t.state()].push_back(t.values());
  std::deque<std::pair<StateId, IntVec>> work{{t.state(), t.values()}};
  while (!work.empty()) {
    if (++basis.iterations > budget) throw ResourceLimit("backward coverability budget exceeded");
    auto [q, m] = std::move(work.front());
    work.pop_front();
    // Skip elements that were superseded meanwhile.
    auto& here = basis.minimal[q];
    if (std::find(here.begin(), here.end(), m) == here.end()) continue;
    for (TransitionId id = 0; id < v.num_transitions(); ++id) {
      const auto& tr = v.transition(id);
      if (tr.target != q) continue;
      IntVec pred = sub(m, tr.effect);
      for (auto& x : pred)
        if (x < 0) x = 0;
      auto& there = basis.minimal[tr.source];
      if (std::any_of(there.begin(), there.end(), [&](const IntVec& b) { return leq(b, pred); }))
        continue;
      std::erase_if(there, [&](const IntVec& b) { return leq(pred, b); });
      there.push_back(pred);
      work.emplace_back(tr.source, std::move(pred));
    }
  }
  return basis;
}

}  // namespace geodim::oracles
