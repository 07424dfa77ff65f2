// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geodim/vass.hpp"

namespace geodim::gadgets {

// Text format, whitespace separated, `#` comments, line breaks optional:
//   counter <name>...
//   copy <primary> <mirror>...          mirrors get every update of primary
//   triple <b> <c> <d> guards <x>...     b + guards is kept constant
//   add <name> <k> [<name> <k>]...       one atomic transition
//   loop ... end                         zero or more iterations
//   ztest <x> using <b>                  triples are named by their b
struct Instr {
  enum class Kind { add, loop, ztest };
  Kind kind = Kind::add;
  std::vector<std::pair<std::string, BigInt>> deltas;  // add
  std::vector<Instr> body;                             // loop
  std::string counter, triple;                         // ztest
  std::size_t line = 0;
};

// Roles: `bound` holds the value B the guards are bounded by, `budget`
// holds C and pays 2 per zero test, `sensor` holds B*C.
struct TripleDecl {
  std::string bound, budget, sensor;
  std::vector<std::string> guards;
};

struct CounterProgram {
  std::vector<std::string> counters;
  std::vector<std::pair<std::string, std::string>> copies;
  std::vector<TripleDecl> triples;
  std::vector<Instr> body;
};

// Throws ParseError with the offending line.
CounterProgram parse_program(std::string_view text);
std::string to_text(const CounterProgram& p);

struct TripleRoles {
  std::size_t bound, budget, sensor;
  std::vector<std::size_t> guards;
  std::size_t segment = 0;
};

struct MirrorPair {
  std::size_t primary, mirror;
  std::size_t segment = 0;
};

struct TransitionInfo {
  std::size_t segment = 0;
  std::optional<std::size_t> ztest_triple;  // index into triples
  bool loop = false;                        // self-loop or loop back edge
};

struct CompiledGadget {
  Vass vass;
  std::vector<std::string> counters;  // coordinate -> name
  std::vector<TripleRoles> triples;
  std::vector<MirrorPair> mirrors;
  std::vector<TransitionInfo> info;  // per transition
  std::vector<std::size_t> sensors;
  std::optional<std::size_t> expected_gscc;
  StateId initial = 0, final = 0;
  Configuration source, target;  // all-zero at initial / final by default

  std::size_t counter(std::string_view name) const;  // throws InputError
  std::string role_map() const;                      // sidecar text
};

// Each segment is lowered on its own (so copies and triples are scoped to
// it) and the segments are chained by zero-effect bridges. Counters are the
// union of the declarations in first-seen order. Throws InputError on
// unknown names and on adds that cannot be compensated.
CompiledGadget compile_segments(const std::vector<CounterProgram>& segments, std::string name = "gadget");
CompiledGadget compile(const CounterProgram& p, std::string name = "gadget");

CounterProgram strip_copies(CounterProgram p);

// Counter names of one amplifier stage. Inputs are two identical triples.
struct TripleNames {
  std::string b, c, d;  // values B, C, B*C
};
struct AmplifierIo {
  TripleNames in1, in2, out, out_mirror;
  std::string t1, t2;
};
AmplifierIo amplifier_io(std::size_t stage);  // stage >= 1 reads stage - 1

// Stage with two multiplication loops (x16 each), each zero-testing with
// its own input triple; output counters are duplicated by `copy`.
CounterProgram make_amplifier(const AmplifierIo& io);

// Single-triple variant: both multiplications (x256) share one loop and one
// triple guarding b', d' and t.
CounterProgram make_old_amplifier(const TripleNames& in, const TripleNames& out, const std::string& t);

struct TowerOptions {
  std::uint64_t seed_b = 2;
  std::optional<std::uint64_t> seed_c;  // fixed C; default: pumped freely
};

CounterProgram trivial_machine();

// Seed generator, n amplifier stages, the machine, then drains of every
// non-sensor counter. Target: all counters zero at the final state.
CompiledGadget build_tower_instance(std::size_t n, const CounterProgram& machine,
                                    const TowerOptions& opts = {});

// ---- verification --------------------------------------------------------

// Every transition of a zero-test region keeps bound + guards constant.
bool zero_test_invariant_holds(const CompiledGadget& g);
// Every transition of a segment moves each mirror exactly like its primary.
bool mirrors_consistent(const CompiledGadget& g);
// No SCC has internal transitions from two different segments.
bool segments_in_disjoint_sccs(const CompiledGadget& g);

struct ZeroTestCheck {
  std::size_t schedules = 0;
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;
};

// Exhaustive check of the sensor claim over straight-line schedules of
// +-1 updates and zero tests on two guarded counters x, y: the sensor can
// reach 0 at the end iff exactly C/2 tests ran and each tested counter was 0.
ZeroTestCheck verify_zero_test(std::uint64_t max_b, std::uint64_t max_c, std::size_t max_len);

struct AmplifierCheck {
  std::uint64_t B = 0, C = 0;
  std::size_t reachable = 0;  // summed over the explored projections
  // Final state with both input sensors 0. With a factorized check this
  // is the product of the per-group counts.
  std::size_t accepting = 0;
  bool factorized = false;
  bool exact_existence = false;  // accepting > 0 implies a real accepting run
  std::size_t wrong = 0;      // accepting with b' != 2^B or d' != 2^B c'
  bool truncated = false;
  std::string first_wrong;
};

// Explores every run of one compiled amplifier stage from inputs (B, C, BC)
// twice and all else zero. Counter groups that no transition links are
// explored separately on their projections.
AmplifierCheck verify_amplifier(std::uint64_t B, std::uint64_t C, std::size_t budget = 5000000);

}  // namespace geodim::gadgets
