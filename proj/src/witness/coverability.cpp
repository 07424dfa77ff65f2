// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/coverability.hpp"

#include <algorithm>

#include "acceleration.hpp"
#include "geodim/compact.hpp"
#include "geodim/cycle_space.hpp"
#include "geodim/errors.hpp"

namespace geodim::witness {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::yes: return "yes";
    case Outcome::no: return "no";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

BoundParams params_of(const Vass& v, const BigInt& ynorm, const BigInt& G) {
  BoundParams p;
  p.d = v.dim();
  p.n = std::max<std::size_t>(v.num_states(), 1);
  p.M = v.max_norm();
  p.g = geometry::geometric_dimension(v);
  p.G = G;
  p.ynorm = ynorm;
  return p;
}

BoundValue min_bound(const BoundValue& a, const BoundValue& b) {
  if (a.exact()) return b.admits(a.value()) ? a : b;
  return b;
}

namespace {

bool dominates(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

std::vector<bool> can_reach(const CompactVass& cv, StateId goal) {
  std::vector<bool> seen(cv.num_states(), false);
  std::vector<StateId> stack{goal};
  seen[goal] = true;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (TransitionId t : cv.incoming(q)) {
      const StateId p = cv.source(t);
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

// Layered BFS with same-state domination pruning. A configuration is kept
// only if no configuration discovered earlier (hence at no greater depth and
// on a lexicographically smaller path) dominates it, so the first covering
// configuration found ends the lex-least shortest covering run.
CoverResult search(const Vass& v, const Configuration& s, const Configuration& t, BoundValue cap,
                   bool cap_is_default, const DeciderOptions& opts) {
  CoverResult res;
  res.cap = cap;
  res.cap_is_default = cap_is_default;
  const CompactVass cv(v);
  const std::size_t d = v.dim();
  const auto x = to_words(s.values(), "source value");
  const auto y = to_words(t.values(), "target value");
  const ZConfiguration target = t.to_z();

  auto finish = [&](std::vector<TransitionId> steps) {
    res.outcome = Outcome::yes;
    res.witness = CoverWitness{replay(v, s.to_z(), std::move(steps), Semantics::natural), target};
    return res;
  };
  if (covers(s.to_z(), target)) return finish({});

  const auto useful = can_reach(cv, t.state());
  const std::uint64_t max_depth = cap.clamp_u64();
  if (!useful[s.state()] || max_depth == 0) {
    res.outcome = Outcome::no;
    res.certified = !useful[s.state()] || cap_is_default;
    return res;
  }

  constexpr auto npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent{npos};
  std::vector<TransitionId> via{0};
  std::vector<StateId> state{s.state()};
  std::vector<Word> vals(x.begin(), x.end());
  std::vector<std::vector<std::size_t>> antichain(v.num_states());
  antichain[s.state()].push_back(0);
  auto at = [&](std::size_t id) { return std::span<const Word>(vals.data() + id * d, d); };

  std::vector<std::size_t> layer{0}, next;
  std::vector<Word> child(d);
  std::uint64_t depth = 0;
  bool overflow = false;
  try {
    while (!layer.empty() && depth < max_depth) {
      next.clear();
      for (std::size_t id : layer) {
        ++res.stats.nodes_expanded;
        for (TransitionId tr : cv.outgoing(state[id])) {
          const StateId p = cv.target(tr);
          if (!useful[p]) continue;
          if (!apply(cv, tr, at(id), child, true)) continue;
          auto& ac = antichain[p];
          bool pruned = false;
          for (std::size_t a : ac)
            if (dominates(at(a), child)) {
              pruned = true;
              break;
            }
          if (pruned) continue;
          if (state.size() >= opts.node_budget) throw ResourceLimit("node budget");
          const std::size_t nid = state.size();
          parent.push_back(id);
          via.push_back(tr);
          state.push_back(p);
          vals.insert(vals.end(), child.begin(), child.end());
          std::erase_if(ac, [&](std::size_t a) { return dominates(child, at(a)); });
          ac.push_back(nid);
          next.push_back(nid);
          if (p == t.state() && dominates(child, y)) {
            std::vector<TransitionId> steps;
            for (std::size_t c = nid; parent[c] != npos; c = parent[c]) steps.push_back(via[c]);
            std::reverse(steps.begin(), steps.end());
            res.stats.nodes_stored = state.size();
            res.stats.depth_reached = depth + 1;
            return finish(std::move(steps));
          }
        }
      }
      std::swap(layer, next);
      ++depth;
    }
  } catch (const ResourceLimit&) {
    overflow = true;
  }
  res.stats.nodes_stored = state.size();
  res.stats.depth_reached = depth;
  if (!overflow) {
    res.outcome = Outcome::no;
    res.certified = layer.empty() || cap_is_default;
    return res;
  }

  // Budget exhausted: an acceleration tree can still certify `no`.
  try {
    auto tree = detail::accelerate(cv, s.state(), x, std::nullopt, opts.node_budget);
    res.stats.accel_nodes = tree.nodes.size();
    if (!tree.truncated && !detail::tree_covers(tree, t.state(), y)) {
      res.outcome = Outcome::no;
      res.certified = true;
      res.accelerated = true;
      return res;
    }
  } catch (const ResourceLimit&) {
  }
  res.outcome = Outcome::inconclusive;
  return res;
}

BoundValue to_cap(const std::optional<BigInt>& cap) {
  if (*cap < 0) throw InputError("cap must be nonnegative");
  return BoundValue(*cap);
}

void check_config(const Vass& v, const Configuration& c, const char* what) {
  if (c.state() >= v.num_states() || c.values().size() != v.dim())
    throw InputError(std::string(what) + " does not match the VASS");
}

}  // namespace

CoverResult decide_coverability(const Vass& v, const Configuration& s, const Configuration& t,
                                const DeciderOptions& opts) {
  check_config(v, s, "source");
  check_config(v, t, "target");
  const auto params = params_of(v, inf_norm(t.values()));
  BoundValue cap;
  if (opts.cap) {
    cap = to_cap(opts.cap);
  } else {
    const auto table = bounds(params, opts.ceiling_bits);
    cap = min_bound(table.cover_L.back(), table.cover_K.back());
  }
  auto res = search(v, s, t, cap, !opts.cap.has_value(), opts);
  res.params = params;
  return res;
}

CoverResult decide_uniform_cover(const Vass& v, const Configuration& s, StateId q, const BigInt& G,
                                 const DeciderOptions& opts) {
  check_config(v, s, "source");
  if (q >= v.num_states()) throw InputError("target state out of range");
  if (G < 0) throw InputError("G must be nonnegative");
  const auto params = params_of(v, 0, G);
  const BoundValue cap = opts.cap ? to_cap(opts.cap) : bounds(params, opts.ceiling_bits).simub_L.back();
  const Configuration t(q, IntVec(v.dim(), G));
  auto res = search(v, s, t, cap, !opts.cap.has_value(), opts);
  res.params = params;
  return res;
}

}  // namespace geodim::witness
