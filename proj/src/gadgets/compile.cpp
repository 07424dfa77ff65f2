// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <map>
#include <sstream>

#include "geodim/errors.hpp"
#include "geodim/gadgets.hpp"

namespace geodim::gadgets {

std::size_t CompiledGadget::counter(std::string_view name) const {
  for (std::size_t i = 0; i < counters.size(); ++i)
    if (counters[i] == name) return i;
  throw InputError("unknown counter '" + std::string(name) + "'");
}

std::string CompiledGadget::role_map() const {
  std::vector<std::string> roles(counters.size());
  auto tag = [&](std::size_t i, const std::string& r) {
    if (!roles[i].empty()) roles[i] += ',';
    roles[i] += r;
  };
  for (std::size_t k = 0; k < triples.size(); ++k) {
    const auto& t = triples[k];
    const std::string id = std::to_string(k);
    tag(t.bound, "bound" + id);
    tag(t.budget, "budget" + id);
    tag(t.sensor, "sensor" + id);
    for (auto g : t.guards) tag(g, "guard" + id);
  }
  for (const auto& m : mirrors) tag(m.mirror, "mirror:" + counters[m.primary]);
  std::ostringstream out;
  out << "# counter roles\n";
  for (std::size_t i = 0; i < counters.size(); ++i)
    out << "role " << counters[i] << ' ' << (roles[i].empty() ? "plain" : roles[i]) << '\n';
  out << "initial " << vass.state_name(initial) << "\nfinal " << vass.state_name(final) << '\n';
  if (expected_gscc) out << "expected_gscc " << *expected_gscc << '\n';
  return out.str();
}

namespace {

class Builder {
 public:
  explicit Builder(const std::vector<CounterProgram>& segments) {
    for (const auto& p : segments)
      for (const auto& c : p.counters)
        if (!index_.count(c)) {
          index_[c] = counters_.size();
          counters_.push_back(c);
        }
  }

  CompiledGadget build(const std::vector<CounterProgram>& segments, std::string name) {
    const StateId initial = fresh();
    cur_ = initial;
    clean_ = true;
    for (std::size_t s = 0; s < segments.size(); ++s) {
      segment_ = s;
      if (s > 0) clean_ = false;  // a bridge keeps segments apart
      begin_segment(segments[s]);
      for (const auto& in : segments[s].body) lower(in);
    }
    CompiledGadget g;
    std::vector<std::string> names;
    for (std::size_t q = 0; q < num_states_; ++q) names.push_back("p" + std::to_string(q));
    g.vass = Vass(std::move(name), counters_.size(), std::move(names), std::move(trans_));
    g.counters = counters_;
    g.triples = triples_;
    g.mirrors = mirrors_;
    g.info = std::move(info_);
    for (const auto& t : triples_)
      if (std::find(g.sensors.begin(), g.sensors.end(), t.sensor) == g.sensors.end())
        g.sensors.push_back(t.sensor);
    g.initial = initial;
    g.final = cur_;
    g.source = Configuration(initial, zero_vector(counters_.size()));
    g.target = Configuration(cur_, zero_vector(counters_.size()));
    return g;
  }

 private:
  std::size_t idx(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) throw InputError("unknown counter '" + n + "'");
    return it->second;
  }

  void begin_segment(const CounterProgram& p) {
    seg_triples_.clear();
    seg_mirrors_.clear();
    for (const auto& [a, b] : p.copies) {
      MirrorPair m{idx(a), idx(b), segment_};
      if (m.primary == m.mirror) throw InputError("counter '" + a + "' copied onto itself");
      mirrors_.push_back(m);
      seg_mirrors_.push_back(m);
    }
    for (const auto& t : p.triples) {
      TripleRoles r{idx(t.bound), idx(t.budget), idx(t.sensor), {}, segment_};
      for (const auto& gname : t.guards) r.guards.push_back(idx(gname));
      triple_of_[t.bound] = triples_.size();
      triples_.push_back(r);
      seg_triples_.push_back(triples_.size() - 1);
    }
  }

  StateId fresh() { return num_states_++; }

  void edge(StateId from, StateId to, IntVec eff, std::optional<std::size_t> ztest, bool loop) {
    trans_.push_back({from, std::move(eff), to});
    info_.push_back({segment_, ztest, loop});
  }

  void ensure_clean() {
    if (clean_) return;
    const StateId s = fresh();
    edge(cur_, s, zero_vector(counters_.size()), std::nullopt, false);
    cur_ = s;
    clean_ = true;
  }

  void mirror(IntVec& eff) const {
    const IntVec base = eff;
    for (const auto& m : seg_mirrors_) {
      if (base[m.mirror] != 0)
        throw InputError("mirror '" + counters_[m.mirror] + "' is updated directly");
      eff[m.mirror] += base[m.primary];
    }
  }

  IntVec add_effect(const Instr& in) const {
    IntVec eff = zero_vector(counters_.size());
    for (const auto& [n, k] : in.deltas) eff[idx(n)] += k;
    for (std::size_t k : seg_triples_) {
      const auto& t = triples_[k];
      BigInt delta = 0;
      for (auto gi : t.guards) delta += eff[gi];
      if (delta == 0) continue;
      if (eff[t.bound] == 0) {
        eff[t.bound] = -delta;
      } else if (eff[t.bound] != -delta) {
        throw InputError("line " + std::to_string(in.line) + ": cannot keep '" + counters_[t.bound] +
                         "' plus its guards constant");
      }
    }
    mirror(eff);
    return eff;
  }

  void lower(const Instr& in) {
    switch (in.kind) {
      case Instr::Kind::add: {
        const StateId s = fresh();
        edge(cur_, s, add_effect(in), std::nullopt, false);
        cur_ = s;
        clean_ = true;
        break;
      }
      case Instr::Kind::loop: {
        ensure_clean();
        if (in.body.size() == 1 && in.body[0].kind == Instr::Kind::add) {
          edge(cur_, cur_, add_effect(in.body[0]), std::nullopt, true);
        } else {
          const StateId head = cur_;
          const StateId start = fresh();
          edge(head, start, zero_vector(counters_.size()), std::nullopt, false);
          cur_ = start;
          clean_ = true;
          for (const auto& b : in.body) lower(b);
          edge(cur_, head, zero_vector(counters_.size()), std::nullopt, true);
          cur_ = head;
        }
        clean_ = false;
        break;
      }
      case Instr::Kind::ztest:
        lower_ztest(in);
        break;
    }
  }

  // Values flow x <- y1 <- ... <- ym <- b and back, one unit and one sensor
  // decrement per loop iteration; the budget then pays 2.
  void lower_ztest(const Instr& in) {
    auto it = triple_of_.find(in.triple);
    if (it == triple_of_.end() ||
        std::find(seg_triples_.begin(), seg_triples_.end(), it->second) == seg_triples_.end())
      throw InputError("line " + std::to_string(in.line) + ": unknown triple '" + in.triple + "'");
    const std::size_t k = it->second;
    const auto& t = triples_[k];
    const std::size_t x = idx(in.counter);
    std::vector<std::size_t> chain{x};
    for (auto gi : t.guards)
      if (gi != x) chain.push_back(gi);
    chain.push_back(t.bound);
    std::vector<std::pair<std::size_t, std::size_t>> moves;  // (from, to)
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) moves.emplace_back(chain[i + 1], chain[i]);
    for (std::size_t i = chain.size() - 1; i-- > 0;) moves.emplace_back(chain[i], chain[i + 1]);

    ensure_clean();
    for (std::size_t m = 0; m < moves.size(); ++m) {
      if (m > 0) {
        const StateId s = fresh();
        edge(cur_, s, zero_vector(counters_.size()), k, false);
        cur_ = s;
      }
      IntVec eff = zero_vector(counters_.size());
      eff[moves[m].first] -= 1;
      eff[moves[m].second] += 1;
      eff[t.sensor] -= 1;
      mirror(eff);
      edge(cur_, cur_, std::move(eff), k, true);
    }
    IntVec pay = zero_vector(counters_.size());
    pay[t.budget] = -2;
    mirror(pay);
    const StateId s = fresh();
    edge(cur_, s, std::move(pay), k, false);
    cur_ = s;
    clean_ = true;
  }

  std::vector<std::string> counters_;
  std::map<std::string, std::size_t> index_;
  std::size_t num_states_ = 0;
  std::vector<Transition> trans_;
  std::vector<TransitionInfo> info_;
  std::vector<TripleRoles> triples_;
  std::vector<MirrorPair> mirrors_;
  std::map<std::string, std::size_t> triple_of_;
  std::vector<std::size_t> seg_triples_;
  std::vector<MirrorPair> seg_mirrors_;
  std::size_t segment_ = 0;
  StateId cur_ = 0;
  bool clean_ = true;
};

}  // namespace

CompiledGadget compile_segments(const std::vector<CounterProgram>& segments, std::string name) {
  Builder b(segments);
  return b.build(segments, std::move(name));
}

CompiledGadget compile(const CounterProgram& p, std::string name) {
  return compile_segments({p}, std::move(name));
}

}  // namespace geodim::gadgets
