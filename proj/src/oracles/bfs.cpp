// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <deque>
#include <map>

#include "geodim/errors.hpp"
#include "geodim/oracles.hpp"

namespace geodim::oracles {

std::optional<std::size_t> BfsReach::distance_to(const ZConfiguration& c) const {
  for (std::size_t i = 0; i < configs.size(); ++i)
    if (configs[i] == c) return distance[i];
  return std::nullopt;
}

std::optional<std::size_t> BfsReach::distance_to_cover(const ZConfiguration& t) const {
  for (std::size_t i = 0; i < configs.size(); ++i)
    if (covers(configs[i], t)) return distance[i];  // BFS order: first is nearest
  return std::nullopt;
}

BfsReach bfs_reach(const Vass& v, const Configuration& s, const IntVec& box, std::uint64_t depth) {
  if (box.size() != v.dim()) throw InputError("box arity mismatch");
  BfsReach out;
  std::map<std::pair<StateId, IntVec>, std::size_t> seen;
  auto inside = [&](const IntVec& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < 0 || x[i] > box[i]) return false;
    return true;
  };
  if (!inside(s.values())) return out;
  out.configs.push_back(s.to_z());
  out.distance.push_back(0);
  seen.emplace(std::make_pair(s.state(), s.values()), 0);
  for (std::size_t head = 0; head < out.configs.size(); ++head) {
    const ZConfiguration c = out.configs[head];
    const std::size_t dist = out.distance[head];
    for (TransitionId t = 0; t < v.num_transitions(); ++t) {
      const auto& tr = v.transition(t);
      if (tr.source != c.state) continue;
      IntVec next = add(c.values, tr.effect);
      if (!all_nonnegative(next)) continue;
      if (!inside(next) || dist >= depth) {
        out.truncated = true;
        continue;
      }
      if (seen.emplace(std::make_pair(tr.target, next), out.configs.size()).second) {
        out.configs.push_back({tr.target, std::move(next)});
        out.distance.push_back(dist + 1);
      }
    }
  }
  return out;
}

}  // namespace geodim::oracles
