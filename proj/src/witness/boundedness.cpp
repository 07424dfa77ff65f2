// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/boundedness.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "acceleration.hpp"
#include "geodim/compact.hpp"
#include "geodim/errors.hpp"
#include "geodim/euler.hpp"
#include "geodim/rational.hpp"
#include "geodim/scc.hpp"
#include "geodim/small_solutions.hpp"

namespace geodim::witness {

const char* to_string(BoundednessVerdict v) {
  switch (v) {
    case BoundednessVerdict::bounded: return "bounded";
    case BoundednessVerdict::unbounded: return "unbounded";
    case BoundednessVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

bool is_self_covering(const SelfCoveringWitness& w) {
  if (w.split >= w.run.length()) return false;
  const auto& a = w.run.trace[w.split];
  const auto& b = w.run.end();
  return a.state == b.state && leq(a.values, b.values) && a.values != b.values;
}

BoundednessResult decide_boundedness(const Vass& v, const Configuration& s, const DeciderOptions& opts) {
  if (s.state() >= v.num_states() || s.values().size() != v.dim())
    throw InputError("source does not match the VASS");
  BoundednessResult res;
  res.params = params_of(v);
  if (opts.cap) {
    if (*opts.cap < 0) throw InputError("cap must be nonnegative");
    res.cap = BoundValue(*opts.cap);
    res.cap_is_default = false;
  } else {
    res.cap = bounds(res.params, opts.ceiling_bits).bounded_L.back();
  }
  const std::uint64_t max_depth = res.cap.clamp_u64();

  const CompactVass cv(v);
  const std::size_t d = v.dim();
  const auto x = to_words(s.values(), "source value");
  constexpr auto npos = static_cast<std::size_t>(-1);

  ConfigTable table(d);
  table.intern(s.state(), x);
  std::vector<std::size_t> parent{npos};
  std::vector<TransitionId> via{0};
  std::vector<std::size_t> depth_of{0};
  std::vector<Word> cur(d), child(d);

  std::deque<std::size_t> queue{0};
  bool overflow = false;
  std::size_t frontier_left = 0;
  try {
    while (!queue.empty()) {
      const std::size_t id = queue.front();
      if (depth_of[id] >= max_depth) {
        frontier_left = queue.size();
        break;
      }
      queue.pop_front();
      ++res.stats.nodes_expanded;
      const StateId q = table.state(id);
      {
        auto vals = table.values(id);
        std::copy(vals.begin(), vals.end(), cur.begin());
      }
      for (TransitionId t : cv.outgoing(q)) {
        if (!apply(cv, t, cur, child, true)) continue;
        const StateId p = cv.target(t);
        if (table.size() >= opts.node_budget) throw ResourceLimit("node budget");
        auto [nid, fresh] = table.intern(p, child);
        if (!fresh) continue;
        parent.push_back(id);
        via.push_back(t);
        depth_of.push_back(depth_of[id] + 1);
        res.stats.depth_reached = std::max(res.stats.depth_reached, depth_of[nid]);
        for (std::size_t a = id; a != npos; a = parent[a]) {
          if (table.state(a) != p) continue;
          auto av = table.values(a);
          if (!std::equal(av.begin(), av.end(), child.begin(),
                          [](Word l, Word r) { return l <= r; }))
            continue;
          std::vector<TransitionId> steps;
          for (std::size_t c = nid; parent[c] != npos; c = parent[c]) steps.push_back(via[c]);
          std::reverse(steps.begin(), steps.end());
          res.verdict = BoundednessVerdict::unbounded;
          res.witness = SelfCoveringWitness{replay(v, s.to_z(), std::move(steps), Semantics::natural),
                                            depth_of[a]};
          res.stats.nodes_stored = table.size();
          return res;
        }
        queue.push_back(nid);
      }
    }
  } catch (const ResourceLimit&) {
    overflow = true;
  }
  res.stats.nodes_stored = table.size();
  if (!overflow) {
    res.verdict = BoundednessVerdict::bounded;
    res.certified = frontier_left == 0 || res.cap_is_default;
    return res;
  }
  try {
    auto tree = detail::accelerate(cv, s.state(), x, std::nullopt, opts.node_budget);
    res.stats.accel_nodes = tree.nodes.size();
    if (!tree.truncated && !tree.has_omega()) {
      res.verdict = BoundednessVerdict::bounded;
      res.certified = true;
      res.accelerated = true;
      return res;
    }
  } catch (const ResourceLimit&) {
  }
  res.verdict = BoundednessVerdict::inconclusive;
  return res;
}

namespace {

// BFS tree paths (declaration order) from `from` to every reachable state.
std::vector<std::optional<std::vector<TransitionId>>> simple_paths(const Vass& v, StateId from) {
  std::vector<std::optional<std::vector<TransitionId>>> path(v.num_states());
  path[from] = std::vector<TransitionId>{};
  std::deque<StateId> queue{from};
  std::vector<std::vector<TransitionId>> out(v.num_states());
  for (TransitionId t = 0; t < v.num_transitions(); ++t) out[v.transition(t).source].push_back(t);
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    for (TransitionId t : out[q]) {
      const StateId p = v.transition(t).target;
      if (path[p]) continue;
      auto next = *path[q];
      next.push_back(t);
      path[p] = std::move(next);
      queue.push_back(p);
    }
  }
  return path;
}

bool weakly_connected(const Vass& v, const std::vector<TransitionId>& support) {
  // Union-find over the touched states.
  std::vector<std::size_t> up(v.num_states());
  std::iota(up.begin(), up.end(), 0);
  auto find = [&](std::size_t a) {
    while (up[a] != a) a = up[a] = up[up[a]];
    return a;
  };
  for (TransitionId t : support) up[find(v.transition(t).source)] = find(v.transition(t).target);
  const std::size_t root = find(v.transition(support.front()).source);
  return std::all_of(support.begin(), support.end(),
                     [&](TransitionId t) { return find(v.transition(t).source) == root; });
}

}  // namespace

std::optional<SelfCoveringWitness> base_case_unbounded_ilp(const Vass& v, const ZConfiguration& s,
                                                           const BaseCaseOptions& opts) {
  if (s.state >= v.num_states() || s.values.size() != v.dim())
    throw InputError("source does not match the VASS");
  const std::size_t d = v.dim();
  if (d == 0) return std::nullopt;
  const auto paths = simple_paths(v, s.state);
  const auto sccs = scc_decompose(v);
  geometry::SmallSolutionOptions sopts;
  sopts.node_budget = opts.node_budget;

  for (std::size_t c = 0; c < sccs.components.size(); ++c) {
    if (!paths[sccs.components[c].front()]) continue;
    const auto& internal = sccs.internal[c];
    if (internal.empty()) continue;
    if (internal.size() > opts.max_support)
      throw ResourceLimit("too many transitions in one SCC for support enumeration");
    const std::size_t m = internal.size();

    // Supports by size, then lexicographically by mask bits.
    std::vector<std::uint64_t> masks(std::uint64_t{1} << m);
    std::iota(masks.begin(), masks.end(), 0);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
      return __builtin_popcountll(a) < __builtin_popcountll(b);
    });
    for (std::uint64_t mask : masks) {
      if (mask == 0) continue;
      std::vector<TransitionId> support;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) support.push_back(internal[i]);
      if (!weakly_connected(v, support)) continue;

      // Unknowns x_t >= 1 for t in the support; rows all read ">= rhs".
      geometry::IntMatrix A;
      A.cols = support.size();
      IntVec b;
      std::vector<StateId> touched;
      for (TransitionId t : support) {
        touched.push_back(v.transition(t).source);
        touched.push_back(v.transition(t).target);
      }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (StateId p : touched) {
        IntVec row(support.size(), 0);
        for (std::size_t k = 0; k < support.size(); ++k) {
          if (v.transition(support[k]).target == p) row[k] += 1;
          if (v.transition(support[k]).source == p) row[k] -= 1;
        }
        IntVec neg(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) neg[k] = -row[k];
        A.rows.push_back(std::move(row));
        b.push_back(0);
        A.rows.push_back(std::move(neg));
        b.push_back(0);
      }
      for (std::size_t k = 0; k < support.size(); ++k) {
        IntVec row(support.size(), 0);
        row[k] = 1;
        A.rows.push_back(std::move(row));
        b.push_back(1);
      }
      const std::size_t effect_row = A.rows.size();
      for (std::size_t i = 0; i < d; ++i) {
        IntVec row(support.size());
        for (std::size_t k = 0; k < support.size(); ++k) row[k] = v.transition(support[k]).effect[i];
        A.rows.push_back(std::move(row));
        b.push_back(0);
      }
      const std::size_t r = geometry::rank(geometry::RationalMatrix::from_integers(A.cols, A.rows));

      for (std::size_t i = 0; i < d; ++i) {
        IntVec bi = b;
        bi[effect_row + i] = 1;
        const BigInt cap = geometry::inequality_cap(r, geometry::max_entry(A, bi));
        auto x = geometry::small_solution_ineq(A, bi, cap, sopts);
        if (!x) continue;

        std::vector<std::uint64_t> mult(v.num_transitions(), 0);
        for (std::size_t k = 0; k < support.size(); ++k) {
          if (!(*x)[k].fits_ulong_p()) throw ResourceLimit("multiplicity too large");
          mult[support[k]] = (*x)[k].get_ui();
        }
        const StateId entry = v.transition(support.front()).source;
        auto steps = *paths[entry];
        const std::size_t split = steps.size();
        auto circuit = euler_walk(v, mult, entry, entry);
        steps.insert(steps.end(), circuit.begin(), circuit.end());
        return SelfCoveringWitness{replay(v, s, std::move(steps), Semantics::integer), split};
      }
    }
  }
  return std::nullopt;
}

}  // namespace geodim::witness
