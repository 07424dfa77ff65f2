// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <sstream>

#include "geodim/errors.hpp"
#include "geodim/gadgets.hpp"

namespace geodim::gadgets {

namespace {

TripleNames stage_triple(std::size_t stage, bool mirror) {
  const std::string k = std::to_string(stage);
  const std::string sfx = mirror ? "_2" : "";
  return {"b" + k + sfx, "c" + k + sfx, "d" + k + sfx};
}

// mult(x, t, factor) zero-testing with the triple named by `bound`.
std::string mult(const std::string& x, const std::string& t, int factor, const std::string& bound) {
  std::ostringstream out;
  out << "  loop add " << x << " -1 " << t << " 1 end\n"
      << "  ztest " << x << " using " << bound << "\n"
      << "  loop add " << x << ' ' << factor << ' ' << t << " -1 end\n"
      << "  ztest " << t << " using " << bound << "\n";
  return out.str();
}

void check_distinct(const std::vector<std::string>& names) {
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("amplifier counter names collide");
}

}  // namespace

AmplifierIo amplifier_io(std::size_t stage) {
  if (stage == 0) throw InputError("amplifier stages start at 1");
  const std::string k = std::to_string(stage);
  return {stage_triple(stage - 1, false), stage_triple(stage - 1, true), stage_triple(stage, false),
          stage_triple(stage, true), "t" + k + "_1", "t" + k + "_2"};
}

// The input triples are used with b and c swapped: c (value C) bounds the
// guards, b (value B) pays for the tests, so each loop runs B/4 times.
CounterProgram make_amplifier(const AmplifierIo& io) {
  const std::vector<std::string> names{io.in1.b, io.in1.c, io.in1.d, io.in2.b, io.in2.c,
                                       io.in2.d, io.out.b, io.out.c, io.out.d, io.out_mirror.b,
                                       io.out_mirror.c, io.out_mirror.d, io.t1, io.t2};
  check_distinct(names);
  std::ostringstream src;
  src << "counter";
  for (const auto& n : names) src << ' ' << n;
  src << "\ncopy " << io.out.b << ' ' << io.out_mirror.b << "\ncopy " << io.out.c << ' '
      << io.out_mirror.c << "\ncopy " << io.out.d << ' ' << io.out_mirror.d << '\n';
  src << "triple " << io.in1.c << ' ' << io.in1.b << ' ' << io.in1.d << " guards " << io.out.b << ' '
      << io.t1 << '\n';
  src << "triple " << io.in2.c << ' ' << io.in2.b << ' ' << io.in2.d << " guards " << io.out.d << ' '
      << io.t2 << '\n';
  src << "add " << io.out.b << " 1\n";
  src << "loop add " << io.out.c << " 1 " << io.out.d << " 1 end\n";
  src << "loop\n" << mult(io.out.b, io.t1, 16, io.in1.c) << "end\n";
  src << "loop add " << io.in1.c << " -1 end\n";
  src << "loop\n" << mult(io.out.d, io.t2, 16, io.in2.c) << "end\n";
  src << "loop add " << io.in2.c << " -1 end\n";
  return parse_program(src.str());
}

CounterProgram make_old_amplifier(const TripleNames& in, const TripleNames& out, const std::string& t) {
  const std::vector<std::string> names{in.b, in.c, in.d, out.b, out.c, out.d, t};
  check_distinct(names);
  std::ostringstream src;
  src << "counter";
  for (const auto& n : names) src << ' ' << n;
  src << "\ntriple " << in.c << ' ' << in.b << ' ' << in.d << " guards " << out.b << ' ' << out.d
      << ' ' << t << '\n';
  src << "add " << out.b << " 1\n";
  src << "loop add " << out.c << " 1 " << out.d << " 1 end\n";
  src << "loop\n" << mult(out.b, t, 256, in.c) << mult(out.d, t, 256, in.c) << "end\n";
  src << "loop add " << in.c << " -1 end\n";
  return parse_program(src.str());
}

CounterProgram trivial_machine() { return {}; }

CompiledGadget build_tower_instance(std::size_t n, const CounterProgram& machine, const TowerOptions& opts) {
  if (n == 0) throw InputError("tower needs at least one amplifier");
  if (n > 4) throw ResourceLimit("tower instances are limited to 4 stages");
  std::vector<CounterProgram> segs;

  // Seed triple (B0, C, B0*C), duplicated.
  const auto s0 = stage_triple(0, false), s0m = stage_triple(0, true);
  std::ostringstream seed;
  seed << "counter " << s0.b << ' ' << s0.c << ' ' << s0.d << ' ' << s0m.b << ' ' << s0m.c << ' ' << s0m.d
       << "\ncopy " << s0.b << ' ' << s0m.b << "\ncopy " << s0.c << ' ' << s0m.c << "\ncopy " << s0.d
       << ' ' << s0m.d << '\n';
  seed << "add " << s0.b << ' ' << opts.seed_b << '\n';
  if (opts.seed_c) {
    seed << "add " << s0.c << ' ' << *opts.seed_c << ' ' << s0.d << ' ' << opts.seed_b * *opts.seed_c << '\n';
  } else {
    seed << "loop add " << s0.c << " 1 " << s0.d << ' ' << opts.seed_b << " end\n";
  }
  segs.push_back(parse_program(seed.str()));
  for (std::size_t k = 1; k <= n; ++k) segs.push_back(make_amplifier(amplifier_io(k)));
  if (!machine.body.empty() || !machine.counters.empty()) segs.push_back(machine);

  // Sensors: every triple used for tests plus the last output triple.
  std::vector<std::string> sensors{stage_triple(n, false).d};
  for (const auto& p : segs)
    for (const auto& t : p.triples) sensors.push_back(t.sensor);
  std::vector<std::string> all;
  for (const auto& p : segs)
    for (const auto& c : p.counters)
      if (std::find(all.begin(), all.end(), c) == all.end()) all.push_back(c);
  std::ostringstream drain;
  for (const auto& c : all)
    if (std::find(sensors.begin(), sensors.end(), c) == sensors.end()) drain << "loop add " << c << " -1 end\n";
  CounterProgram drains = parse_program("counter " + [&] {
    std::string s;
    for (const auto& c : all) s += c + ' ';
    return s;
  }() + "\n" + drain.str());
  segs.push_back(std::move(drains));

  auto g = compile_segments(segs, "tower" + std::to_string(n));
  g.sensors.clear();
  for (const auto& s : sensors) {
    const auto i = g.counter(s);
    if (std::find(g.sensors.begin(), g.sensors.end(), i) == g.sensors.end()) g.sensors.push_back(i);
  }
  g.expected_gscc = 4;
  return g;
}

}  // namespace geodim::gadgets
