// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "acceleration.hpp"

#include <algorithm>
#include <deque>

#include "geodim/errors.hpp"

namespace geodim::witness::detail {

bool AccelTree::has_omega() const {
  return std::find(values.begin(), values.end(), kOmega) != values.end();
}

namespace {

std::uint64_t high_bits(std::span<const Word> vals, std::optional<Word> threshold) {
  if (!threshold) return 0;
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i] >= *threshold) bits |= std::uint64_t{1} << i;
  return bits;
}

}  // namespace

AccelTree accelerate(const CompactVass& v, StateId s, std::span<const Word> x,
                     std::optional<Word> flag_threshold, std::size_t budget) {
  const std::size_t d = v.dim();
  if (flag_threshold && d > 64) throw ResourceLimit("flagged acceleration supports at most 64 counters");
  constexpr auto npos = static_cast<std::size_t>(-1);

  AccelTree tree;
  tree.dim = d;
  tree.values.assign(x.begin(), x.end());
  tree.nodes.push_back({npos, 0, s, high_bits(x, flag_threshold)});

  std::deque<std::size_t> queue{0};
  std::vector<Word> child(d);
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const StateId q = tree.nodes[id].state;
    for (TransitionId t : v.outgoing(q)) {
      auto eff = v.effect(t);
      auto cur = tree.at(id);
      bool ok = true;
      for (std::size_t i = 0; i < d && ok; ++i) {
        if (cur[i] == kOmega) {
          child[i] = kOmega;
        } else if (__builtin_add_overflow(cur[i], eff[i], &child[i]) || child[i] == kOmega) {
          throw ResourceLimit("counter value overflows 64 bits");
        } else if (child[i] < 0) {
          ok = false;
        }
      }
      if (!ok) continue;
      const StateId p = v.target(t);
      const std::uint64_t flags = tree.nodes[id].flags | high_bits(child, flag_threshold);

      // Accelerate against every ancestor with the same control.
      bool repeated = false;
      for (std::size_t a = id; a != npos; a = tree.nodes[a].parent) {
        if (tree.nodes[a].state != p || tree.nodes[a].flags != flags) continue;
        auto anc = tree.at(a);
        bool le = true, equal = true;
        for (std::size_t i = 0; i < d; ++i) {
          if (anc[i] > child[i]) le = false;
          if (anc[i] != child[i]) equal = false;
        }
        if (!le) continue;
        if (equal) {
          repeated = true;
          continue;
        }
        for (std::size_t i = 0; i < d; ++i)
          if (anc[i] < child[i]) child[i] = kOmega;
      }
      if (repeated) {
        // Still equal after acceleration?
        repeated = false;
        for (std::size_t a = id; a != npos && !repeated; a = tree.nodes[a].parent)
          repeated = tree.nodes[a].state == p && tree.nodes[a].flags == flags &&
                     std::equal(child.begin(), child.end(), tree.at(a).begin());
      }
      if (tree.nodes.size() >= budget) {
        tree.truncated = true;
        return tree;
      }
      tree.nodes.push_back({id, t, p, flags});
      tree.values.insert(tree.values.end(), child.begin(), child.end());
      if (!repeated) queue.push_back(tree.nodes.size() - 1);
    }
  }
  return tree;
}

bool tree_covers(const AccelTree& tree, StateId state, std::span<const Word> y) {
  for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
    if (tree.nodes[id].state != state) continue;
    auto vals = tree.at(id);
    bool ok = true;
    for (std::size_t i = 0; i < y.size() && ok; ++i) ok = vals[i] >= y[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace geodim::witness::detail
