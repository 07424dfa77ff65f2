// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/scc.hpp"

#include <algorithm>
#include <limits>

namespace geodim {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

// Iterative Tarjan. Components come out sinks first.
std::vector<std::vector<StateId>> tarjan(const Vass& v) {
  const std::size_t n = v.num_states();
  std::vector<std::vector<StateId>> succ(n);
  for (const auto& t : v.transitions()) succ[t.source].push_back(t.target);

  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<StateId> stack;
  std::vector<std::vector<StateId>> out;
  std::size_t counter = 0;

  struct Frame {
    StateId node;
    std::size_t next_edge;
  };
  std::vector<Frame> call;

  for (StateId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next_edge < succ[f.node].size()) {
        StateId w = succ[f.node][f.next_edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      StateId u = f.node;
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[u]);
      if (low[u] == index[u]) {
        std::vector<StateId> comp;
        StateId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != u);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

}  // namespace

SccDecomposition scc_decompose(const Vass& v) {
  SccDecomposition r;
  r.components = tarjan(v);
  std::reverse(r.components.begin(), r.components.end());
  r.component_of.assign(v.num_states(), 0);
  for (std::size_t c = 0; c < r.components.size(); ++c)
    for (StateId q : r.components[c]) r.component_of[q] = c;
  r.internal.assign(r.components.size(), {});
  for (TransitionId t = 0; t < v.num_transitions(); ++t) {
    const auto& tr = v.transition(t);
    const auto cs = r.component_of[tr.source];
    if (cs == r.component_of[tr.target]) {
      r.internal[cs].push_back(t);
    } else {
      r.bridges.push_back(t);
    }
  }
  const std::size_t k = r.components.size();
  r.line = r.bridges.size() + 1 == k || k == 0;
  if (r.line && k > 1) {
    std::vector<int> links(k - 1, 0);
    for (TransitionId t : r.bridges) {
      const auto& tr = v.transition(t);
      const auto cs = r.component_of[tr.source];
      if (r.component_of[tr.target] != cs + 1) {
        r.line = false;
        break;
      }
      ++links[cs];
    }
    if (r.line) r.line = std::all_of(links.begin(), links.end(), [](int c) { return c == 1; });
  }
  return r;
}

}  // namespace geodim
