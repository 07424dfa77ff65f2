// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "geodim/boundedness.hpp"
#include "geodim/bounds.hpp"
#include "geodim/cli.hpp"
#include "geodim/coverability.hpp"
#include "geodim/errors.hpp"
#include "geodim/families.hpp"
#include "geodim/no_pump.hpp"
#include "geodim/oracles.hpp"

namespace geodim::witness {
namespace {

Vass one_state(std::size_t d, const std::vector<std::string>& loops) {
  std::string text = "vass t\ndim " + std::to_string(d) + "\nstate q\n";
  for (const auto& l : loops) text += "trans q q " + l + "\n";
  return parse_vass(text);
}

BoundParams P(std::uint64_t d, std::uint64_t n, long M, std::uint64_t g, long ynorm = 0, long G = 0) {
  BoundParams p;
  p.d = d;
  p.n = n;
  p.M = M;
  p.g = g;
  p.ynorm = ynorm;
  p.G = G;
  return p;
}

TEST(Bounds, BaseCasesAndFirstStep) {
  auto t = bounds(P(1, 2, 1, 1, 1));
  ASSERT_EQ(t.cover_L.size(), 2u);
  EXPECT_EQ(t.cover_L[0].value(), 1);  // n - 1
  EXPECT_EQ(t.cover_K[0].value(), 1);
  // 2 (d M (1 + L_0 ... )) + 1 evaluated by hand: 2 * (1 * (1 + 1 * 1))^1 + 1
  EXPECT_EQ(t.cover_L[1].value(), 5);
  EXPECT_EQ(t.cover_K[1].value(), 5);
}

TEST(Bounds, BoundednessConstant) {
  auto t = bounds(P(1, 1, 1, 1));
  EXPECT_EQ(t.D.value(), 25);
  // 25^{g+1} with g = 1
  EXPECT_EQ(t.bounded_L[0].value(), 625);
}

TEST(Bounds, ClosedForms) {
  auto t = bounds(P(2, 3, 2, 1, 1, 1));
  EXPECT_EQ(t.cover_A.value(), 4 * 3 * 2 * 2 * (1 + 1));
  EXPECT_EQ(t.simub_A.value(), 2 * 3 * (2 + 1) * 2 * (1 + 1));
  const BigInt A = t.cover_A.value();
  EXPECT_EQ(t.cover_A_f.value(), A * A * A * A);  // (g+1)^{g+1} = 4
  EXPECT_EQ(t.cover_A_h.value(), A * A * A);      // 2^{g+1} - 1 = 3
}

TEST(Bounds, RejectsBadParameters) {
  EXPECT_THROW(bounds(P(1, 0, 1, 0)), InputError);
  EXPECT_THROW(bounds(P(1, 1, 1, 2)), InputError);
  EXPECT_THROW(bounds(P(1, 1, -1, 0)), InputError);
}

TEST(Bounds, SaturationIsMonotone) {
  auto t = bounds(P(4, 4, 2, 4, 1, 2), 4096);
  for (const auto* row : {&t.cover_L, &t.cover_K, &t.simub_L, &t.bounded_L})
    for (std::size_t i = 1; i < row->size(); ++i) EXPECT_TRUE(!(*row)[i].exact() || (*row)[i - 1] <= (*row)[i]);
  EXPECT_FALSE(t.bounded_L.back().exact());
  EXPECT_EQ(t.bounded_L.back().to_string(), ">=2^4096");
  EXPECT_TRUE(t.bounded_L.back().admits(BigInt(1) << 100));
}

TEST(Cover, TrivialWhenSourceCoversTarget) {
  auto v = one_state(1, {"1"});
  auto r = decide_coverability(v, Configuration(0, {2}), Configuration(0, {1}));
  EXPECT_EQ(r.outcome, Outcome::yes);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->length(), 0u);
}

TEST(Cover, DoublingChain) {
  for (std::size_t d = 2; d <= 4; ++d) {
    auto v = doubling_chain(d);
    IntVec y = zero_vector(d);
    y[d - 1] = 1;
    auto r = decide_coverability(v, Configuration(0, zero_vector(d)), Configuration(d - 1, y));
    ASSERT_EQ(r.outcome, Outcome::yes);
    EXPECT_EQ(r.witness->length(), (std::size_t{1} << d) + d - 2);
    EXPECT_TRUE(r.cap.admits(BigInt(static_cast<unsigned long>(r.witness->length()))));
  }
}

TEST(Cover, DecreasingLoopNeverCovers) {
  auto v = one_state(1, {"-1"});
  auto r = decide_coverability(v, Configuration(0, {0}), Configuration(0, {1}));
  EXPECT_EQ(r.outcome, Outcome::no);
  EXPECT_TRUE(r.certified);
  EXPECT_TRUE(r.cap_is_default);
}

TEST(Cover, ExplicitCapIsNotACertificate) {
  auto v = doubling_chain(3);
  DeciderOptions o;
  o.cap = 5;
  auto r = decide_coverability(v, Configuration(0, {0, 0, 0}), Configuration(2, {0, 0, 1}), o);
  EXPECT_EQ(r.outcome, Outcome::no);
  EXPECT_FALSE(r.cap_is_default);
  EXPECT_EQ(r.cap.value(), 5);
}

TEST(Cover, AgreesWithBackwardOracle) {
  std::mt19937_64 rng(21);
  cli::RandomSpec spec;
  spec.max_t = 6;
  for (int i = 0; i < 60; ++i) {
    auto v = cli::random_vass(rng, spec, "r");
    Configuration s(0, testing::random_ints(rng, v.dim(), 0, 1));
    Configuration t(rng() % v.num_states(), testing::random_ints(rng, v.dim(), 0, 1));
    auto r = decide_coverability(v, s, t);
    auto basis = oracles::backward_coverability(v, t);
    ASSERT_NE(r.outcome, Outcome::inconclusive) << serialize(v);
    EXPECT_EQ(r.outcome == Outcome::yes, basis.contains(s)) << serialize(v);
    if (r.witness) {
      auto run = replay(v, s.to_z(), r.witness->run.steps, Semantics::natural);
      EXPECT_TRUE(covers(run.end(), t.to_z()));
    }
  }
}

TEST(Boundedness, HandCases) {
  auto up = decide_boundedness(one_state(1, {"1"}), Configuration(0, {0}));
  EXPECT_EQ(up.verdict, BoundednessVerdict::unbounded);
  ASSERT_TRUE(up.witness);
  EXPECT_EQ(up.witness->length(), 1u);
  EXPECT_EQ(up.witness->split, 0u);
  EXPECT_TRUE(is_self_covering(*up.witness));

  EXPECT_EQ(decide_boundedness(one_state(1, {"-1"}), Configuration(0, {5})).verdict,
            BoundednessVerdict::bounded);
  EXPECT_EQ(decide_boundedness(one_state(1, {"0"}), Configuration(0, {0})).verdict,
            BoundednessVerdict::bounded);
}

TEST(Boundedness, WitnessNeedsStrictIncrease) {
  geodim::Run r = replay(one_state(1, {"0"}), {0, {0}}, {0}, Semantics::natural);
  EXPECT_FALSE(is_self_covering({r, 0}));
}

TEST(UniformCover, HandCases) {
  auto both = decide_uniform_cover(one_state(2, {"1 1"}), Configuration(0, {0, 0}), 0, 2);
  ASSERT_EQ(both.outcome, Outcome::yes);
  EXPECT_EQ(both.witness->length(), 2u);
  auto split = decide_uniform_cover(one_state(2, {"1 0", "0 1"}), Configuration(0, {0, 0}), 0, 1);
  ASSERT_EQ(split.outcome, Outcome::yes);
  EXPECT_EQ(split.witness->length(), 2u);
  auto stuck = decide_uniform_cover(one_state(2, {"1 0"}), Configuration(0, {0, 0}), 0, 1);
  EXPECT_EQ(stuck.outcome, Outcome::no);
}

TEST(NoPump, HandCases) {
  auto all_up = check_no_pump_property(one_state(3, {"1 1 1"}), Configuration(0, {0, 0, 0}), 2);
  EXPECT_EQ(all_up.status, NoPumpStatus::confirmed);
  ASSERT_EQ(all_up.checks.size(), 1u);
  EXPECT_EQ(all_up.checks[0].cover.witness->length(), 2u);
  auto down = check_no_pump_property(one_state(1, {"-1"}), Configuration(0, {0}), 1);
  EXPECT_EQ(down.status, NoPumpStatus::vacuous);
  EXPECT_TRUE(down.premise_states.empty());
}

TEST(BaseCase, HandCases) {
  auto up = base_case_unbounded_ilp(one_state(1, {"1"}), {0, {0}});
  ASSERT_TRUE(up);
  EXPECT_EQ(up->length(), 1u);
  EXPECT_FALSE(base_case_unbounded_ilp(one_state(1, {"0"}), {0, {0}}).has_value());
}

TEST(BaseCase, TwoLoopCombination) {
  auto v = one_state(2, {"1 -1", "-1 2"});
  auto w = base_case_unbounded_ilp(v, {0, {0, 0}});
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_self_covering(*w));
  // One of each loop already gives (0, 1).
  auto brute = testing::brute_positive_closed_walk(v, 0, 6, 6);
  ASSERT_TRUE(brute.walk);
  EXPECT_EQ(brute.walk->size(), 2u);
}

TEST(BaseCase, IntegerSemanticsIgnoresUnderflow) {
  // Needs the counter to go negative first.
  auto v = parse_vass("vass t\ndim 1\nstate p q\ntrans p q -3\ntrans q q 1\n");
  auto w = base_case_unbounded_ilp(v, {0, {0}});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->run.semantics, Semantics::integer);
  EXPECT_TRUE(is_self_covering(*w));
}

}  // namespace
}  // namespace geodim::witness
