// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "geodim/coverability.hpp"

namespace geodim::witness {

// trace[split] < trace[end]: same state, componentwise <=, not equal.
struct SelfCoveringWitness {
  Run run;
  std::size_t split = 0;
  std::size_t length() const { return run.length(); }
};

bool is_self_covering(const SelfCoveringWitness& w);

enum class BoundednessVerdict { bounded, unbounded, inconclusive };
const char* to_string(BoundednessVerdict v);

struct BoundednessResult {
  BoundednessVerdict verdict = BoundednessVerdict::inconclusive;
  std::optional<SelfCoveringWitness> witness;
  BoundParams params;
  BoundValue cap;
  bool cap_is_default = true;
  bool certified = false;  // `bounded` holds beyond the cap
  bool accelerated = false;
  SearchStats stats;
};

// Breadth-first search over distinct configurations; a node whose tree
// ancestor lies strictly below it yields the witness. The witness is the
// first one found in BFS order, not necessarily the shortest. Default cap is
// the boundedness L_g.
BoundednessResult decide_boundedness(const Vass& v, const Configuration& s,
                                     const DeciderOptions& opts = {});

struct BaseCaseOptions {
  std::size_t max_support = 16;  // internal transitions per SCC
  std::size_t node_budget = 200000;
};

// All counters read as integers. Looks for a closed walk with effect >= 0
// and != 0 at a state reachable from s, via transition multiplicities x >= 1
// on a connected support solving the inequality system. The witness is a
// simple path to the walk followed by an Euler circuit of the multiplicities.
std::optional<SelfCoveringWitness> base_case_unbounded_ilp(const Vass& v, const ZConfiguration& s,
                                                           const BaseCaseOptions& opts = {});

}  // namespace geodim::witness
