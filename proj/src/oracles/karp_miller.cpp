// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <deque>
#include <sstream>

#include "geodim/errors.hpp"
#include "geodim/oracles.hpp"

namespace geodim::oracles {

namespace {

// a <= b with omega on top.
bool omega_leq(const OmegaVec& a, const OmegaVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i]) continue;
    if (!a[i] || *a[i] > *b[i]) return false;
  }
  return true;
}

void require_complete(const KarpMillerTree& t) {
  if (t.truncated) throw ResourceLimit("Karp-Miller tree truncated by its node budget");
}

}  // namespace

bool KarpMillerTree::bounded() const {
  require_complete(*this);
  for (const auto& n : nodes)
    for (const auto& x : n.values)
      if (!x) return false;
  return true;
}

bool KarpMillerTree::counter_bounded(std::size_t i) const {
  require_complete(*this);
  for (const auto& n : nodes)
    if (!n.values.at(i)) return false;
  return true;
}

bool KarpMillerTree::simultaneous_omega(StateId q) const {
  require_complete(*this);
  for (const auto& n : nodes) {
    if (n.state != q) continue;
    bool all = true;
    for (const auto& x : n.values) all = all && !x;
    if (all) return true;
  }
  return false;
}

std::string KarpMillerTree::dump(const Vass& v) const {
  std::ostringstream out;
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const auto& n = nodes[id];
    out << id << ' ' << (n.parent ? std::to_string(*n.parent) : "-1") << ' ' << v.state_name(n.state)
        << ' ';
    for (std::size_t i = 0; i < n.values.size(); ++i) {
      if (i) out << ',';
      if (n.values[i]) out << n.values[i]->get_str();
      else out << 'w';
    }
    out << '\n';
  }
  if (truncated) out << "# truncated\n";
  return out.str();
}

KarpMillerTree karp_miller(const Vass& v, const Configuration& s, std::size_t budget) {
  if (s.state() >= v.num_states() || s.values().size() != v.dim())
    throw InputError("source does not match the VASS");
  KarpMillerTree tree;
  OmegaVec root(s.values().begin(), s.values().end());
  tree.nodes.push_back({std::nullopt, std::nullopt, s.state(), root});
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    for (TransitionId t = 0; t < v.num_transitions(); ++t) {
      const auto& tr = v.transition(t);
      if (tr.source != tree.nodes[id].state) continue;
      OmegaVec next = tree.nodes[id].values;
      bool enabled = true;
      for (std::size_t i = 0; i < next.size(); ++i) {
        if (!next[i]) continue;
        *next[i] += tr.effect[i];
        if (*next[i] < 0) enabled = false;
      }
      if (!enabled) continue;

      bool leaf = false;
      for (std::optional<std::size_t> a = id; a; a = tree.nodes[*a].parent) {
        const auto& anc = tree.nodes[*a];
        if (anc.state != tr.target || !omega_leq(anc.values, next)) continue;
        if (anc.values == next) {
          leaf = true;
          break;
        }
        for (std::size_t i = 0; i < next.size(); ++i)
          if (next[i] && *anc.values[i] < *next[i]) next[i].reset();
      }
      if (tree.nodes.size() >= budget) {
        tree.truncated = true;
        return tree;
      }
      tree.nodes.push_back({id, t, tr.target, std::move(next)});
      if (!leaf) queue.push_back(tree.nodes.size() - 1);
    }
  }
  return tree;
}

}  // namespace geodim::oracles
