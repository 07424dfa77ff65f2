// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geodim/bigint.hpp"

namespace geodim {

using StateId = std::size_t;
using TransitionId = std::size_t;

struct Transition {
  StateId source = 0;
  IntVec effect;
  StateId target = 0;
  bool operator==(const Transition&) const = default;
};

// A VASS (Q, T) over d counters. Immutable after construction; transitions
// are identified by their index in declaration order.
class Vass {
 public:
  Vass() = default;
  // Throws InputError if a transition has a bad endpoint or arity, or if a
  // state name repeats.
  Vass(std::string name, std::size_t dim, std::vector<std::string> states,
       std::vector<Transition> transitions);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_states() const { return states_.size(); }
  std::size_t num_transitions() const { return transitions_.size(); }
  const std::vector<std::string>& state_names() const { return states_; }
  const std::string& state_name(StateId q) const { return states_.at(q); }
  std::optional<StateId> find_state(std::string_view name) const;
  const std::vector<Transition>& transitions() const { return transitions_; }
  const Transition& transition(TransitionId t) const { return transitions_.at(t); }

  // M = max absolute effect entry (0 with no transitions or d = 0).
  BigInt max_norm() const;
  // size(V) = |Q| + |T| * d * (M + 1), a unary-style encoding size.
  BigInt size() const;

  bool operator==(const Vass&) const = default;

 private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<std::string> states_;
  std::vector<Transition> transitions_;
};

Vass parse_vass(std::string_view text);
Vass parse_vass(std::istream& in);
std::string serialize(const Vass& v);

enum class Semantics { natural, integer };

struct ZConfiguration {
  StateId state = 0;
  IntVec values;
  bool operator==(const ZConfiguration&) const = default;
};

// A configuration over N^d. Construction rejects negative entries.
class Configuration {
 public:
  Configuration() = default;
  Configuration(StateId state, IntVec values);
  StateId state() const { return state_; }
  const IntVec& values() const { return values_; }
  ZConfiguration to_z() const { return {state_, values_}; }
  bool operator==(const Configuration&) const = default;

 private:
  StateId state_ = 0;
  IntVec values_;
};

std::string to_string(const Vass& v, const ZConfiguration& c);  // "q:1,2"

// Same state and componentwise >=.
bool covers(const ZConfiguration& c, const ZConfiguration& target);

Configuration step(const Vass& v, const Configuration& c, TransitionId t);
ZConfiguration step(const Vass& v, const ZConfiguration& c, TransitionId t);

// Throws InputError if consecutive steps do not chain.
IntVec path_effect(const Vass& v, std::span<const TransitionId> steps);

struct Run {
  Semantics semantics = Semantics::natural;
  std::vector<TransitionId> steps;
  std::vector<ZConfiguration> trace;  // steps.size() + 1 entries

  const ZConfiguration& start() const { return trace.front(); }
  const ZConfiguration& end() const { return trace.back(); }
  std::size_t length() const { return steps.size(); }
};

// Replays steps from start; throws StateMismatch / Underflow on violation.
Run replay(const Vass& v, const ZConfiguration& start, std::vector<TransitionId> steps,
           Semantics semantics);

// Keeps the given coordinates (0-based, any order, duplicates ignored) in
// ascending order. Transition indices are preserved.
Vass project_counters(const Vass& v, std::span<const std::size_t> keep);

}  // namespace geodim
