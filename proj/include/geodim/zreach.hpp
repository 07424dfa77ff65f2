// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "geodim/bounds.hpp"
#include "geodim/coverability.hpp"
#include "geodim/vass.hpp"

namespace geodim::zreach {

// Transition multiplicities of a Z-run: flow conservation with one unit
// leaving `source` and entering `target`, effect sum t - s.
struct FlowSolution {
  std::vector<TransitionId> support;  // ascending
  IntVec multiplicities;              // aligned with support, all >= 1
  StateId source = 0;
  StateId target = 0;
  BigInt total() const;
};

// Checks conservation, effect and connectivity against v, s, t.
bool is_valid_flow(const Vass& v, const ZConfiguration& s, const ZConfiguration& t,
                   const FlowSolution& f);

struct ZReachOptions {
  std::optional<BigInt> cap;  // per-multiplicity cap; default from equality_cap
  std::size_t max_transitions = 16;
  std::size_t node_budget = 200000;
};

struct ZReachResult {
  std::optional<Run> run;  // integer semantics
  std::optional<FlowSolution> flow;
  std::size_t supports_tried = 0;
};

// Exact: the flow of least total over all connected supports (ties: the
// support found first by size then index mask), walked deterministically.
// The run length therefore equals the shortest Z-run length whenever the
// per-support caps do not cut off the optimum.
ZReachResult decide_zreach(const Vass& v, const ZConfiguration& s, const ZConfiguration& t,
                           const ZReachOptions& opts = {});

struct ShortestZRunResult {
  witness::Outcome outcome = witness::Outcome::inconclusive;  // no = none within cap
  std::optional<Run> run;
  witness::BoundValue cap;
  witness::SearchStats stats;
};

// max(size(V), |s|, |t|) as used by the Z-run length bound.
BigInt zrun_norm(const Vass& v, const ZConfiguration& s, const ZConfiguration& t);

// Breadth-first search over Z-configurations; lexicographically least
// shortest run. Default cap zrun_norm^{6g+1}.
ShortestZRunResult shortest_zrun(const Vass& v, const ZConfiguration& s, const ZConfiguration& t,
                                 const witness::DeciderOptions& opts = {});

}  // namespace geodim::zreach
