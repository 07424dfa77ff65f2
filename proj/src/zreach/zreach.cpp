// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/zreach.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "geodim/compact.hpp"
#include "geodim/cycle_space.hpp"
#include "geodim/errors.hpp"
#include "geodim/euler.hpp"
#include "geodim/small_solutions.hpp"

namespace geodim::zreach {

BigInt FlowSolution::total() const {
  BigInt s = 0;
  for (const auto& m : multiplicities) s += m;
  return s;
}

namespace {

void check(const Vass& v, const ZConfiguration& c, const char* what) {
  if (c.state >= v.num_states() || c.values.size() != v.dim())
    throw InputError(std::string(what) + " does not match the VASS");
}

// support plus {source} connected as an undirected graph and touching target.
bool connected(const Vass& v, const std::vector<TransitionId>& support, StateId source,
               StateId target) {
  std::vector<std::size_t> up(v.num_states());
  std::iota(up.begin(), up.end(), 0);
  auto find = [&](std::size_t a) {
    while (up[a] != a) a = up[a] = up[up[a]];
    return a;
  };
  for (TransitionId t : support) up[find(v.transition(t).source)] = find(v.transition(t).target);
  const auto root = find(source);
  if (find(target) != root) return false;
  return std::all_of(support.begin(), support.end(),
                     [&](TransitionId t) { return find(v.transition(t).source) == root; });
}

}  // namespace

bool is_valid_flow(const Vass& v, const ZConfiguration& s, const ZConfiguration& t,
                   const FlowSolution& f) {
  if (f.support.size() != f.multiplicities.size() || f.source != s.state || f.target != t.state)
    return false;
  std::vector<BigInt> balance(v.num_states(), 0);
  IntVec eff = zero_vector(v.dim());
  for (std::size_t k = 0; k < f.support.size(); ++k) {
    if (f.support[k] >= v.num_transitions() || f.multiplicities[k] < 1) return false;
    const auto& tr = v.transition(f.support[k]);
    balance[tr.target] += f.multiplicities[k];
    balance[tr.source] -= f.multiplicities[k];
    for (std::size_t i = 0; i < v.dim(); ++i) eff[i] += f.multiplicities[k] * tr.effect[i];
  }
  for (StateId p = 0; p < v.num_states(); ++p) {
    const int want = (p == t.state ? 1 : 0) - (p == s.state ? 1 : 0);
    if (balance[p] != want) return false;
  }
  return eff == sub(t.values, s.values) && (f.support.empty() ? s.state == t.state
                                                               : connected(v, f.support, s.state, t.state));
}

ZReachResult decide_zreach(const Vass& v, const ZConfiguration& s, const ZConfiguration& t,
                           const ZReachOptions& opts) {
  check(v, s, "source");
  check(v, t, "target");
  ZReachResult res;
  const std::size_t m = v.num_transitions();
  const std::size_t d = v.dim();
  if (s == t) {
    res.flow = FlowSolution{{}, {}, s.state, t.state};
    res.run = replay(v, s, {}, Semantics::integer);
    return res;
  }
  if (m > opts.max_transitions) throw ResourceLimit("too many transitions for support enumeration");
  const IntVec delta = sub(t.values, s.values);

  std::vector<std::uint64_t> masks(std::uint64_t{1} << m);
  std::iota(masks.begin(), masks.end(), 0);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return __builtin_popcountll(a) < __builtin_popcountll(b);
  });
  geometry::SmallSolutionOptions sopts;
  sopts.node_budget = opts.node_budget;

  std::optional<FlowSolution> best;
  for (std::uint64_t mask : masks) {
    if (mask == 0) continue;
    const auto size = static_cast<unsigned long>(__builtin_popcountll(mask));
    if (best && best->total() <= size) break;  // every later support sums to >= its size
    std::vector<TransitionId> support;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) support.push_back(i);
    if (!connected(v, support, s.state, t.state)) continue;
    ++res.supports_tried;

    std::vector<StateId> touched{s.state, t.state};
    for (TransitionId tr : support) {
      touched.push_back(v.transition(tr).source);
      touched.push_back(v.transition(tr).target);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    geometry::IntMatrix A;
    A.cols = support.size();
    IntVec b;
    for (StateId p : touched) {
      IntVec row(support.size(), 0);
      for (std::size_t k = 0; k < support.size(); ++k) {
        if (v.transition(support[k]).target == p) row[k] += 1;
        if (v.transition(support[k]).source == p) row[k] -= 1;
      }
      A.rows.push_back(std::move(row));
      b.push_back((p == t.state ? 1 : 0) - (p == s.state ? 1 : 0));
    }
    for (std::size_t i = 0; i < d; ++i) {
      IntVec row(support.size());
      for (std::size_t k = 0; k < support.size(); ++k) row[k] = v.transition(support[k]).effect[i];
      A.rows.push_back(std::move(row));
      b.push_back(delta[i]);
    }
    BigInt cap;
    if (opts.cap) {
      cap = *opts.cap;
    } else {
      // Cap of the shifted system x = 1 + y.
      IntVec shifted = b;
      for (std::size_t r = 0; r < A.rows.size(); ++r)
        for (const auto& a : A.rows[r]) shifted[r] -= a;
      cap = 1 + geometry::equality_cap(A.cols, A.rows.size(), geometry::max_entry(A, shifted));
    }
    auto x = geometry::min_sum_solution_eq(A, b, IntVec(support.size(), 1), cap, sopts);
    if (!x) continue;
    FlowSolution f{support, *x, s.state, t.state};
    if (!best || f.total() < best->total()) best = std::move(f);
  }
  if (!best) return res;

  std::vector<std::uint64_t> mult(m, 0);
  for (std::size_t k = 0; k < best->support.size(); ++k) {
    if (!best->multiplicities[k].fits_ulong_p()) throw ResourceLimit("multiplicity too large");
    mult[best->support[k]] = best->multiplicities[k].get_ui();
  }
  res.run = replay(v, s, euler_walk(v, mult, s.state, t.state), Semantics::integer);
  res.flow = std::move(best);
  return res;
}

BigInt zrun_norm(const Vass& v, const ZConfiguration& s, const ZConfiguration& t) {
  return std::max({v.size(), inf_norm(s.values), inf_norm(t.values)});
}

ShortestZRunResult shortest_zrun(const Vass& v, const ZConfiguration& s, const ZConfiguration& t,
                                 const witness::DeciderOptions& opts) {
  check(v, s, "source");
  check(v, t, "target");
  ShortestZRunResult res;
  if (opts.cap) {
    if (*opts.cap < 0) throw InputError("cap must be nonnegative");
    res.cap = witness::BoundValue(*opts.cap);
  } else {
    witness::BoundParams p = witness::params_of(v);
    p.znorm = zrun_norm(v, s, t);
    res.cap = witness::bounds(p, opts.ceiling_bits).zrun;
  }
  if (s == t) {
    res.outcome = witness::Outcome::yes;
    res.run = replay(v, s, {}, Semantics::integer);
    return res;
  }
  const std::uint64_t max_depth = res.cap.clamp_u64();
  const CompactVass cv(v);
  const std::size_t d = v.dim();
  const auto x = to_words(s.values, "source value");
  const auto y = to_words(t.values, "target value");
  constexpr auto npos = static_cast<std::size_t>(-1);

  ConfigTable table(d);
  table.intern(s.state, x);
  std::vector<std::size_t> parent{npos}, depth_of{0};
  std::vector<TransitionId> via{0};
  std::deque<std::size_t> queue{0};
  std::vector<Word> cur(d), child(d);
  try {
    while (!queue.empty()) {
      const std::size_t id = queue.front();
      if (depth_of[id] >= max_depth) break;
      queue.pop_front();
      ++res.stats.nodes_expanded;
      {
        auto vals = table.values(id);
        std::copy(vals.begin(), vals.end(), cur.begin());
      }
      for (TransitionId tr : cv.outgoing(table.state(id))) {
        apply(cv, tr, cur, child, false);
        const StateId p = cv.target(tr);
        if (table.size() >= opts.node_budget) throw ResourceLimit("node budget");
        auto [nid, fresh] = table.intern(p, child);
        if (!fresh) continue;
        parent.push_back(id);
        via.push_back(tr);
        depth_of.push_back(depth_of[id] + 1);
        res.stats.depth_reached = depth_of[nid];
        if (p == t.state && std::equal(child.begin(), child.end(), y.begin())) {
          std::vector<TransitionId> steps;
          for (std::size_t c = nid; parent[c] != npos; c = parent[c]) steps.push_back(via[c]);
          std::reverse(steps.begin(), steps.end());
          res.outcome = witness::Outcome::yes;
          res.run = replay(v, s, std::move(steps), Semantics::integer);
          res.stats.nodes_stored = table.size();
          return res;
        }
        queue.push_back(nid);
      }
    }
    res.outcome = witness::Outcome::no;
  } catch (const ResourceLimit&) {
    res.outcome = witness::Outcome::inconclusive;
  }
  res.stats.nodes_stored = table.size();
  return res;
}

}  // namespace geodim::zreach
