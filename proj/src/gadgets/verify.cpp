// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <deque>
#include <sstream>

#include "geodim/compact.hpp"
#include "geodim/errors.hpp"
#include "geodim/gadgets.hpp"
#include "geodim/scc.hpp"

namespace geodim::gadgets {

bool zero_test_invariant_holds(const CompiledGadget& g) {
  for (TransitionId t = 0; t < g.vass.num_transitions(); ++t) {
    if (!g.info[t].ztest_triple) continue;
    const auto& tr = g.triples[*g.info[t].ztest_triple];
    const auto& eff = g.vass.transition(t).effect;
    BigInt sum = eff[tr.bound];
    for (auto gi : tr.guards) sum += eff[gi];
    if (sum != 0) return false;
  }
  return true;
}

bool mirrors_consistent(const CompiledGadget& g) {
  for (TransitionId t = 0; t < g.vass.num_transitions(); ++t) {
    const auto& eff = g.vass.transition(t).effect;
    for (const auto& m : g.mirrors)
      if (m.segment == g.info[t].segment && eff[m.primary] != eff[m.mirror]) return false;
  }
  return true;
}

bool segments_in_disjoint_sccs(const CompiledGadget& g) {
  const auto sccs = scc_decompose(g.vass);
  for (const auto& internal : sccs.internal)
    for (TransitionId t : internal)
      if (g.info[t].segment != g.info[internal.front()].segment) return false;
  return true;
}

namespace {

// Every configuration reachable from `start`; calls visit(state, values).
template <typename Visit>
bool explore(const Vass& v, StateId s, const std::vector<Word>& start, std::size_t budget, Visit visit) {
  const CompactVass cv(v);
  ConfigTable table(v.dim());
  table.intern(s, start);
  std::vector<Word> cur(v.dim()), next(v.dim());
  for (std::size_t id = 0; id < table.size(); ++id) {
    auto vals = table.values(id);
    std::copy(vals.begin(), vals.end(), cur.begin());
    const StateId q = table.state(id);
    visit(q, std::span<const Word>(cur));
    for (TransitionId t : cv.outgoing(q)) {
      if (!apply(cv, t, cur, next, true)) continue;
      if (table.size() >= budget) return false;
      table.intern(cv.target(t), next);
    }
  }
  return true;
}

enum Op { kIncX, kDecX, kIncY, kDecY, kTestX, kTestY };

std::string schedule_text(const std::vector<Op>& ops) {
  std::ostringstream out;
  out << "counter x y b c d\ntriple b c d guards x y\n";
  for (Op op : ops) {
    switch (op) {
      case kIncX: out << "add x 1\n"; break;
      case kDecX: out << "add x -1\n"; break;
      case kIncY: out << "add y 1\n"; break;
      case kDecY: out << "add y -1\n"; break;
      case kTestX: out << "ztest x using b\n"; break;
      case kTestY: out << "ztest y using b\n"; break;
    }
  }
  return out.str();
}

// The claimed behaviour: straight-line simulation with exact tests.
bool predicted(const std::vector<Op>& ops, long B, long C, long x, long y) {
  long tests = 0;
  bool passed = true;
  for (Op op : ops) {
    switch (op) {
      case kIncX: ++x; break;
      case kDecX: --x; break;
      case kIncY: ++y; break;
      case kDecY: --y; break;
      case kTestX: passed = passed && x == 0; ++tests; break;
      case kTestY: passed = passed && y == 0; ++tests; break;
    }
    if (x < 0 || y < 0 || x + y > B || 2 * tests > C) return false;  // blocked
  }
  return passed && 2 * tests == C;
}

}  // namespace

ZeroTestCheck verify_zero_test(std::uint64_t max_b, std::uint64_t max_c, std::size_t max_len) {
  ZeroTestCheck out;
  std::vector<std::vector<Op>> schedules{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t from = schedules.size();
    for (std::size_t i = 0; i < from; ++i) {
      if (schedules[i].size() != len - 1) continue;
      for (int op = 0; op < 6; ++op) {
        auto s = schedules[i];
        s.push_back(static_cast<Op>(op));
        schedules.push_back(std::move(s));
      }
    }
  }
  for (const auto& ops : schedules) {
    ++out.schedules;
    const auto g = compile(parse_program(schedule_text(ops)), "ztest");
    const std::size_t d = g.counter("d");
    for (long B = 1; B <= static_cast<long>(max_b); ++B)
      for (long C = 0; C <= static_cast<long>(max_c); ++C)
        for (long x0 = 0; x0 <= B; ++x0)
          for (long y0 = 0; x0 + y0 <= B; ++y0) {
            ++out.instances;
            std::vector<Word> start(g.counters.size(), 0);
            start[g.counter("x")] = x0;
            start[g.counter("y")] = y0;
            start[g.counter("b")] = B - x0 - y0;
            start[g.counter("c")] = C;
            start[d] = B * C;
            bool zero = false;
            explore(g.vass, g.initial, start, 1000000, [&](StateId q, std::span<const Word> vals) {
              if (q == g.final && vals[d] == 0) zero = true;
            });
            if (zero != predicted(ops, B, C, x0, y0)) {
              if (out.mismatches++ == 0) {
                std::ostringstream m;
                m << "B=" << B << " C=" << C << " x=" << x0 << " y=" << y0 << " schedule:\n"
                  << schedule_text(ops);
                out.first_mismatch = m.str();
              }
            }
          }
  }
  return out;
}

AmplifierCheck verify_amplifier(std::uint64_t B, std::uint64_t C, std::size_t budget) {
  if (B > 20 || C > 1000000) throw ResourceLimit("amplifier verification parameters too large");
  AmplifierCheck out;
  out.B = B;
  out.C = C;
  const auto io = amplifier_io(1);
  const auto g = compile(make_amplifier(io), "amplifier");
  const std::size_t dim = g.counters.size();
  std::vector<Word> start(dim, 0);
  for (const auto* t : {&io.in1, &io.in2}) {
    start[g.counter(t->b)] = static_cast<Word>(B);
    start[g.counter(t->c)] = static_cast<Word>(C);
    start[g.counter(t->d)] = static_cast<Word>(B * C);
  }

  // Counters touched inside one SCC (or by one bridge) form one group. Each
  // group is explored on its own projection; an accepting run projects onto
  // an accepting run of every group, so the universal check stays sound.
  std::vector<std::size_t> group(dim);
  for (std::size_t i = 0; i < dim; ++i) group[i] = i;
  auto find = [&](std::size_t a) {
    while (group[a] != a) a = group[a] = group[group[a]];
    return a;
  };
  const auto sccs = scc_decompose(g.vass);
  auto merge = [&](const std::vector<TransitionId>& ts) {
    std::optional<std::size_t> first;
    for (TransitionId t : ts) {
      const auto& eff = g.vass.transition(t).effect;
      for (std::size_t i = 0; i < dim; ++i) {
        if (eff[i] == 0) continue;
        if (first) group[find(i)] = find(*first);
        else first = i;
      }
    }
  };
  for (const auto& internal : sccs.internal) merge(internal);
  for (TransitionId t : sccs.bridges) merge({t});
  const std::size_t d1 = g.counter(io.in1.d), d2 = g.counter(io.in2.d);
  const std::size_t bp = g.counter(io.out.b), bp2 = g.counter(io.out_mirror.b);
  const std::size_t cp = g.counter(io.out.c), dp = g.counter(io.out.d), dp2 = g.counter(io.out_mirror.d);
  const std::size_t t1 = g.counter(io.t1), t2 = g.counter(io.t2);
  const Word pow2 = Word{1} << B;

  struct Part {
    std::size_t sensor;
    std::vector<std::size_t> watched;
  };
  std::vector<Part> parts;
  if (find(d1) != find(d2)) {
    parts.push_back({d1, {bp, bp2, t1}});
    parts.push_back({d2, {cp, dp, dp2, t2}});
  } else {
    parts.push_back({d1, {d2, bp, bp2, t1, cp, dp, dp2, t2}});
  }

  // With a line condensation the per-SCC choices of a run are independent
  // and every SCC moves a single group, so per-group runs combine freely.
  out.factorized = parts.size() > 1;
  out.exact_existence = sccs.line || !out.factorized;

  std::size_t accepting = 1;
  for (const auto& part : parts) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < dim; ++i)
      if (parts.size() == 1 || find(i) == find(part.sensor)) keep.push_back(i);
    const Vass proj = project_counters(g.vass, keep);
    auto pos = [&](std::size_t c) {
      return static_cast<std::size_t>(std::find(keep.begin(), keep.end(), c) - keep.begin());
    };
    std::vector<Word> pstart;
    for (auto i : keep) pstart.push_back(start[i]);
    std::size_t acc = 0;
    const bool complete = explore(proj, g.initial, pstart, budget, [&](StateId q, std::span<const Word> v) {
      ++out.reachable;
      if (q != g.final || v[pos(part.sensor)] != 0) return;
      if (parts.size() == 1 && v[pos(d2)] != 0) return;
      ++acc;
      auto val = [&](std::size_t c) { return v[pos(c)]; };
      bool ok = true;
      if (part.sensor == d1) ok = val(bp) == pow2 && val(bp2) == pow2 && val(t1) == 0;
      if (part.sensor == d2 || parts.size() == 1)
        ok = ok && val(dp) == pow2 * val(cp) && val(dp2) == val(dp) && val(t2) == 0;
      if (!ok && out.wrong++ == 0) {
        std::ostringstream m;
        m << "group of " << g.counters[part.sensor] << ":";
        for (auto c : part.watched) m << ' ' << g.counters[c] << '=' << val(c);
        out.first_wrong = m.str();
      }
    });
    out.truncated = out.truncated || !complete;
    accepting *= acc;
  }
  out.accepting = accepting;
  return out;
}

}  // namespace geodim::gadgets
