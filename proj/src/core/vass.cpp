// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/vass.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "geodim/errors.hpp"

namespace geodim {

Vass::Vass(std::string name, std::size_t dim, std::vector<std::string> states,
           std::vector<Transition> transitions)
    : name_(std::move(name)),
      dim_(dim),
      states_(std::move(states)),
      transitions_(std::move(transitions)) {
  std::set<std::string_view> seen;
  for (const auto& s : states_) {
    if (!seen.insert(s).second) throw InputError("duplicate state '" + s + "'");
  }
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const auto& t = transitions_[i];
    if (t.source >= states_.size() || t.target >= states_.size())
      throw InputError("transition " + std::to_string(i) + " has an undeclared endpoint");
    if (t.effect.size() != dim_)
      throw InputError("transition " + std::to_string(i) + ": effect arity " +
                       std::to_string(t.effect.size()) + " ≠ dim " + std::to_string(dim_));
  }
}

std::optional<StateId> Vass::find_state(std::string_view name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<StateId>(it - states_.begin());
}

BigInt Vass::max_norm() const {
  BigInt m = 0;
  for (const auto& t : transitions_) {
    BigInt n = inf_norm(t.effect);
    if (n > m) m = n;
  }
  return m;
}

BigInt Vass::size() const {
  return BigInt(static_cast<unsigned long>(states_.size())) +
         BigInt(static_cast<unsigned long>(transitions_.size())) *
             BigInt(static_cast<unsigned long>(dim_)) * (max_norm() + 1);
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Vass parse_vass(std::string_view text) {
  std::optional<std::string> name;
  std::optional<std::size_t> dim;
  std::vector<std::string> states;
  std::unordered_map<std::string, StateId> index;
  std::vector<Transition> transitions;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;

    const auto kw = tok[0];
    if (kw == "vass") {
      if (name) throw ParseError(lineno, "duplicate 'vass' header");
      if (tok.size() != 2) throw ParseError(lineno, "expected 'vass <name>'");
      name = std::string(tok[1]);
    } else if (kw == "dim") {
      if (dim) throw ParseError(lineno, "duplicate 'dim'");
      if (tok.size() != 2) throw ParseError(lineno, "expected 'dim <d>'");
      BigInt d;
      try {
        d = parse_bigint(tok[1]);
      } catch (const InputError& e) {
        throw ParseError(lineno, e.what());
      }
      if (d < 0 || !d.fits_ulong_p()) throw ParseError(lineno, "dimension must be a nonnegative integer");
      dim = d.get_ui();
    } else if (kw == "state") {
      if (tok.size() < 2) throw ParseError(lineno, "expected 'state <id>...'");
      for (std::size_t k = 1; k < tok.size(); ++k) {
        std::string id(tok[k]);
        if (index.count(id)) throw ParseError(lineno, "duplicate state '" + id + "'");
        index.emplace(id, states.size());
        states.push_back(id);
      }
    } else if (kw == "trans") {
      if (!dim) throw ParseError(lineno, "'trans' before 'dim'");
      if (tok.size() < 3) throw ParseError(lineno, "expected 'trans <src> <dst> <a1> ... <ad>'");
      auto lookup = [&](std::string_view id) {
        auto it = index.find(std::string(id));
        if (it == index.end()) throw ParseError(lineno, "undeclared state '" + std::string(id) + "'");
        return it->second;
      };
      Transition t;
      t.source = lookup(tok[1]);
      t.target = lookup(tok[2]);
      const std::size_t arity = tok.size() - 3;
      if (arity != *dim)
        throw ParseError(lineno, "effect arity " + std::to_string(arity) + " ≠ dim " + std::to_string(*dim));
      for (std::size_t k = 3; k < tok.size(); ++k) {
        try {
          t.effect.push_back(parse_bigint(tok[k]));
        } catch (const InputError& e) {
          throw ParseError(lineno, e.what());
        }
      }
      transitions.push_back(std::move(t));
    } else {
      throw ParseError(lineno, "unknown directive '" + std::string(kw) + "'");
    }
  }
  if (!name) throw ParseError(lineno, "missing 'vass <name>' header");
  if (!dim) throw ParseError(lineno, "missing 'dim <d>'");
  return Vass(*name, *dim, std::move(states), std::move(transitions));
}

Vass parse_vass(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_vass(buf.str());
}

std::string serialize(const Vass& v) {
  std::string out = "vass " + v.name() + "\ndim " + std::to_string(v.dim()) + "\n";
  for (const auto& s : v.state_names()) out += "state " + s + "\n";
  for (const auto& t : v.transitions()) {
    out += "trans " + v.state_name(t.source) + " " + v.state_name(t.target);
    for (const auto& a : t.effect) out += " " + a.get_str();
    out += "\n";
  }
  return out;
}

Configuration::Configuration(StateId state, IntVec values) : state_(state), values_(std::move(values)) {
  if (!all_nonnegative(values_)) throw InputError("configuration has a negative entry");
}

std::string to_string(const Vass& v, const ZConfiguration& c) {
  std::string out = v.state_name(c.state) + ":";
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (i) out += ',';
    out += c.values[i].get_str();
  }
  return out;
}

bool covers(const ZConfiguration& c, const ZConfiguration& target) {
  return c.state == target.state && leq(target.values, c.values);
}

namespace {

const Transition& checked(const Vass& v, StateId state, std::size_t dim, TransitionId t) {
  if (t >= v.num_transitions()) throw InputError("transition index " + std::to_string(t) + " out of range");
  const auto& tr = v.transition(t);
  if (dim != v.dim()) throw InputError("configuration dimension does not match the VASS");
  if (tr.source != state)
    throw StateMismatch("transition " + std::to_string(t) + " leaves " + v.state_name(tr.source) +
                        ", configuration is at " + v.state_name(state));
  return tr;
}

}  // namespace

ZConfiguration step(const Vass& v, const ZConfiguration& c, TransitionId t) {
  const auto& tr = checked(v, c.state, c.values.size(), t);
  return {tr.target, add(c.values, tr.effect)};
}

Configuration step(const Vass& v, const Configuration& c, TransitionId t) {
  const auto& tr = checked(v, c.state(), c.values().size(), t);
  IntVec next = add(c.values(), tr.effect);
  if (!all_nonnegative(next))
    throw Underflow("transition " + std::to_string(t) + " drives a counter below zero");
  return Configuration(tr.target, std::move(next));
}

IntVec path_effect(const Vass& v, std::span<const TransitionId> steps) {
  IntVec sum = zero_vector(v.dim());
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (steps[k] >= v.num_transitions()) throw InputError("transition index out of range");
    const auto& tr = v.transition(steps[k]);
    if (k > 0 && v.transition(steps[k - 1]).target != tr.source)
      throw InputError("disconnected step sequence at position " + std::to_string(k));
    add_into(sum, tr.effect);
  }
  return sum;
}

Run replay(const Vass& v, const ZConfiguration& start, std::vector<TransitionId> steps,
           Semantics semantics) {
  Run run;
  run.semantics = semantics;
  run.trace.reserve(steps.size() + 1);
  if (start.state >= v.num_states()) throw InputError("start state out of range");
  if (start.values.size() != v.dim()) throw InputError("start dimension does not match the VASS");
  if (semantics == Semantics::natural && !all_nonnegative(start.values))
    throw Underflow("start configuration has a negative entry");
  run.trace.push_back(start);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    ZConfiguration next = step(v, run.trace.back(), steps[k]);
    if (semantics == Semantics::natural && !all_nonnegative(next.values))
      throw Underflow("step " + std::to_string(k) + " drives a counter below zero");
    run.trace.push_back(std::move(next));
  }
  run.steps = std::move(steps);
  return run;
}

Vass project_counters(const Vass& v, std::span<const std::size_t> keep) {
  std::set<std::size_t> coords(keep.begin(), keep.end());
  for (auto i : coords)
    if (i >= v.dim()) throw InputError("coordinate " + std::to_string(i) + " out of range");
  std::vector<Transition> ts;
  ts.reserve(v.num_transitions());
  for (const auto& t : v.transitions()) {
    Transition p{t.source, {}, t.target};
    for (auto i : coords) p.effect.push_back(t.effect[i]);
    ts.push_back(std::move(p));
  }
  return Vass(v.name(), coords.size(), v.state_names(), std::move(ts));
}

}  // namespace geodim
