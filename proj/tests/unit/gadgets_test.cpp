// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "geodim/cycle_space.hpp"
#include "geodim/errors.hpp"
#include "geodim/gadgets.hpp"
#include "geodim/scc.hpp"

namespace geodim::gadgets {
namespace {

constexpr const char* kZeroTest = R"(counter x y b c d
triple b c d guards x y
ztest x using b
)";

TEST(Program, ParseAndPrintRoundTrip) {
  auto p = parse_program("counter x y # two counters\nloop add x 1 y -1 end\n");
  ASSERT_EQ(p.body.size(), 1u);
  EXPECT_EQ(p.body[0].kind, Instr::Kind::loop);
  EXPECT_EQ(p.body[0].body[0].deltas.size(), 2u);
  auto again = parse_program(to_text(p));
  EXPECT_EQ(to_text(again), to_text(p));
}

TEST(Program, ErrorsCarryLineNumbers) {
  try {
    parse_program("counter x\nadd x 1\nadd z 1\n");
    FAIL() << "unknown counter accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_program("counter x\nloop add x 1\n"), ParseError);
  EXPECT_THROW(parse_program("counter x\nztest x using nope\n"), ParseError);
}

TEST(Compile, SingleLoopIsOneStateWithSelfLoop) {
  auto g = compile(parse_program("counter x\nloop add x 1 end\n"));
  EXPECT_EQ(g.vass.num_states(), 1u);
  ASSERT_EQ(g.vass.num_transitions(), 1u);
  EXPECT_EQ(g.vass.transition(0).effect, (IntVec{1}));
  EXPECT_EQ(g.vass.transition(0).source, g.vass.transition(0).target);
}

TEST(Compile, ZeroTestBlockStructure) {
  auto g = compile(parse_program(kZeroTest));
  EXPECT_EQ(g.vass.num_states(), 5u);
  const auto x = g.counter("x"), y = g.counter("y"), b = g.counter("b"), c = g.counter("c"),
             d = g.counter("d");
  std::size_t loops = 0, terminals = 0;
  for (TransitionId t = 0; t < g.vass.num_transitions(); ++t) {
    const auto& tr = g.vass.transition(t);
    EXPECT_EQ(tr.effect[b] + tr.effect[x] + tr.effect[y], 0);
    if (tr.source == tr.target) {
      ++loops;
      EXPECT_EQ(tr.effect[d], -1);
      EXPECT_EQ(tr.effect[c], 0);
    } else if (tr.effect[c] != 0) {
      ++terminals;
      EXPECT_EQ(tr.effect[c], -2);
    }
  }
  // Forward and backward moves along the chain x -> y -> b.
  EXPECT_EQ(loops, 4u);
  EXPECT_EQ(terminals, 1u);
  EXPECT_TRUE(zero_test_invariant_holds(g));
}

TEST(Compile, UpdatesAreCompensatedOnTheBound) {
  auto g = compile(parse_program("counter x b c d\ntriple b c d guards x\nadd x 3\n"));
  const auto& tr = g.vass.transition(0);
  EXPECT_EQ(tr.effect[g.counter("x")], 3);
  EXPECT_EQ(tr.effect[g.counter("b")], -3);
}

TEST(Compile, MirrorsFollowPrimaries) {
  auto g = compile(parse_program("counter x x2\ncopy x x2\nloop add x 1 end\n"));
  EXPECT_TRUE(mirrors_consistent(g));
  EXPECT_EQ(g.vass.transition(0).effect, (IntVec{1, 1}));
  EXPECT_THROW(compile(parse_program("counter x x2\ncopy x x2\nadd x2 1\n")), InputError);
}

TEST(Compile, DuplicationKeepsSccDimension) {
  auto p = make_amplifier(amplifier_io(1));
  const auto with = geometry::cycle_space(compile(p).vass);
  const auto without = geometry::cycle_space(compile(strip_copies(p)).vass);
  EXPECT_EQ(with.scc_rank, 4u);
  EXPECT_EQ(without.scc_rank, with.scc_rank);
}

TEST(Tower, OneStageHasSccDimensionFour) {
  auto g = build_tower_instance(1, trivial_machine());
  ASSERT_TRUE(g.expected_gscc);
  EXPECT_EQ(geometry::scc_dimension(g.vass), *g.expected_gscc);
  EXPECT_EQ(*g.expected_gscc, 4u);
  EXPECT_TRUE(zero_test_invariant_holds(g));
  EXPECT_TRUE(mirrors_consistent(g));
  EXPECT_TRUE(segments_in_disjoint_sccs(g));
  EXPECT_THROW(build_tower_instance(0, trivial_machine()), InputError);
  EXPECT_THROW(build_tower_instance(5, trivial_machine()), ResourceLimit);
}

TEST(Tower, RoleMapNamesEveryCounter) {
  auto g = build_tower_instance(1, trivial_machine());
  const auto roles = g.role_map();
  for (const auto& c : g.counters) EXPECT_NE(roles.find(c), std::string::npos) << c;
}

TEST(OldAmplifier, HasARankFiveComponent) {
  auto p = make_old_amplifier({"b0", "c0", "d0"}, {"b1", "c1", "d1"}, "t1");
  const auto cs = geometry::cycle_space(compile(p).vass);
  std::size_t best = 0;
  for (const auto& s : cs.per_scc) best = std::max(best, s.rank);
  EXPECT_EQ(best, 5u);
}

TEST(Verify, ZeroTestSmall) {
  auto c = verify_zero_test(2, 2, 2);
  EXPECT_GT(c.instances, 0u);
  EXPECT_EQ(c.mismatches, 0u) << c.first_mismatch;
}

TEST(Verify, AmplifierSeedTwo) {
  auto c = verify_amplifier(2, 4);
  EXPECT_FALSE(c.truncated);
  EXPECT_EQ(c.wrong, 0u) << c.first_wrong;
}

}  // namespace
}  // namespace geodim::gadgets
