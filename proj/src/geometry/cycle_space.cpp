// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/cycle_space.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "geodim/errors.hpp"

namespace geodim::geometry {

CleanBasis clean_basis(const RationalMatrix& generators) {
  auto red = rref(generators);
  CleanBasis b{std::move(red.matrix), std::move(red.pivots)};
  if (!is_clean(b)) throw std::logic_error("rref did not produce a clean basis");
  return b;
}

CleanBasis clean_basis(std::size_t dim, const std::vector<IntVec>& generators) {
  return clean_basis(RationalMatrix::from_integers(dim, generators));
}

bool is_clean(const CleanBasis& b) {
  if (b.distinguished.size() != b.basis.rows()) return false;
  for (std::size_t i = 0; i < b.basis.rows(); ++i)
    for (std::size_t k = 0; k < b.distinguished.size(); ++k)
      if (b.basis.at(i, b.distinguished[k]) != (i == k ? 1 : 0)) return false;
  return true;
}

std::optional<CleanBasis> rebase(const CleanBasis& b, std::span<const std::size_t> K) {
  if (K.size() != b.rank()) return std::nullopt;
  for (auto k : K)
    if (k >= b.dim()) throw InputError("distinguished coordinate out of range");
  auto inv = inverse(b.basis.columns(K));
  if (!inv) return std::nullopt;
  CleanBasis out{multiply(*inv, b.basis), std::vector<std::size_t>(K.begin(), K.end())};
  if (!is_clean(out)) throw std::logic_error("change of basis is not clean");
  return out;
}

namespace {

constexpr TransitionId kNone = std::numeric_limits<TransitionId>::max();

// Breadth-first tree from base over the given transitions, forward or
// backward. parent[p] is the transition used to reach p.
std::vector<TransitionId> bfs_tree(const Vass& v, StateId base,
                                   const std::vector<TransitionId>& internal, bool forward) {
  std::vector<TransitionId> parent(v.num_states(), kNone);
  std::vector<bool> seen(v.num_states(), false);
  seen[base] = true;
  std::deque<StateId> queue{base};
  while (!queue.empty()) {
    StateId p = queue.front();
    queue.pop_front();
    for (TransitionId t : internal) {
      const auto& tr = v.transition(t);
      StateId from = forward ? tr.source : tr.target;
      StateId to = forward ? tr.target : tr.source;
      if (from != p || seen[to]) continue;
      seen[to] = true;
      parent[to] = t;
      queue.push_back(to);
    }
  }
  return parent;
}

// Path base -> p along the forward tree.
std::vector<TransitionId> tree_path(const Vass& v, StateId base, StateId p,
                                    const std::vector<TransitionId>& parent) {
  std::vector<TransitionId> path;
  while (p != base) {
    path.push_back(parent[p]);
    p = v.transition(parent[p]).source;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Path p -> base along the backward tree.
std::vector<TransitionId> back_path(const Vass& v, StateId base, StateId p,
                                    const std::vector<TransitionId>& parent) {
  std::vector<TransitionId> path;
  while (p != base) {
    path.push_back(parent[p]);
    p = v.transition(parent[p]).target;
  }
  return path;
}

}  // namespace

CycleSpace cycle_space(const Vass& v) {
  CycleSpace cs;
  cs.dim = v.dim();
  cs.sccs = scc_decompose(v);
  for (std::size_t c = 0; c < cs.sccs.components.size(); ++c) {
    SccCycles scc;
    scc.component = c;
    scc.base = cs.sccs.components[c].front();
    const auto& internal = cs.sccs.internal[c];
    if (!internal.empty()) {
      auto fwd = bfs_tree(v, scc.base, internal, true);
      auto bwd = bfs_tree(v, scc.base, internal, false);
      std::vector<IntVec> reach(v.num_states());
      for (StateId p : cs.sccs.components[c]) {
        auto path = tree_path(v, scc.base, p, fwd);
        reach[p] = path_effect(v, path);
      }
      for (TransitionId t : internal) {
        const auto& tr = v.transition(t);
        IntVec gen = sub(add(reach[tr.source], tr.effect), reach[tr.target]);
        if (is_zero(gen)) continue;
        CycleCertificate cert;
        cert.transition = t;
        cert.with_transition = tree_path(v, scc.base, tr.source, fwd);
        cert.with_transition.push_back(t);
        auto home = back_path(v, scc.base, tr.target, bwd);
        cert.with_transition.insert(cert.with_transition.end(), home.begin(), home.end());
        cert.without_transition = tree_path(v, scc.base, tr.target, fwd);
        cert.without_transition.insert(cert.without_transition.end(), home.begin(), home.end());
        scc.generators.push_back(gen);
        scc.certificates.push_back(std::move(cert));
      }
      scc.rank = rank(RationalMatrix::from_integers(v.dim(), scc.generators));
    }
    cs.scc_rank = std::max(cs.scc_rank, scc.rank);
    cs.generators.insert(cs.generators.end(), scc.generators.begin(), scc.generators.end());
    cs.per_scc.push_back(std::move(scc));
  }
  cs.basis = clean_basis(v.dim(), cs.generators);
  cs.rank = cs.basis.rank();
  return cs;
}

std::size_t geometric_dimension(const Vass& v) { return cycle_space(v).rank; }
std::size_t scc_dimension(const Vass& v) { return cycle_space(v).scc_rank; }

bool verify_certificate(const Vass& v, StateId base, const IntVec& generator,
                        const CycleCertificate& cert) {
  auto closed = [&](const std::vector<TransitionId>& path) {
    if (path.empty()) return true;
    return v.transition(path.front()).source == base && v.transition(path.back()).target == base;
  };
  if (!closed(cert.with_transition) || !closed(cert.without_transition)) return false;
  if (std::find(cert.with_transition.begin(), cert.with_transition.end(), cert.transition) ==
      cert.with_transition.end())
    return false;
  try {
    return sub(path_effect(v, cert.with_transition), path_effect(v, cert.without_transition)) ==
           generator;
  } catch (const InputError&) {
    return false;
  }
}

}  // namespace geodim::geometry
