// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "geodim/cli.hpp"
#include "geodim/zreach.hpp"

namespace geodim::zreach {
namespace {

Vass loop(long delta) {
  return parse_vass("vass t\ndim 1\nstate q\ntrans q q " + std::to_string(delta) + "\n");
}

TEST(DecideZreach, HandCases) {
  auto three = decide_zreach(loop(1), {0, {0}}, {0, {3}});
  ASSERT_TRUE(three.run);
  EXPECT_EQ(three.run->length(), 3u);
  EXPECT_FALSE(decide_zreach(loop(2), {0, {0}}, {0, {3}}).run.has_value());
  auto neg = decide_zreach(loop(-1), {0, {0}}, {0, {-2}});
  ASSERT_TRUE(neg.run);
  EXPECT_EQ(neg.run->length(), 2u);
  EXPECT_EQ(neg.run->end(), (ZConfiguration{0, {-2}}));
}

TEST(DecideZreach, EmptyRunAndUnreachableState) {
  auto v = parse_vass("vass t\ndim 1\nstate p q\ntrans q p 1\n");
  auto same = decide_zreach(v, {0, {4}}, {0, {4}});
  ASSERT_TRUE(same.run);
  EXPECT_EQ(same.run->length(), 0u);
  EXPECT_FALSE(decide_zreach(v, {0, {0}}, {1, {0}}).run.has_value());
}

TEST(DecideZreach, FlowIsValidAndEulerWalkMatches) {
  auto v = parse_vass("vass t\ndim 2\nstate p q\ntrans p p 1 0\ntrans p q 0 0\ntrans q q -1 2\ntrans q p 0 -1\n");
  ZConfiguration s{0, {0, 0}}, t{1, {-1, 3}};
  auto r = decide_zreach(v, s, t);
  ASSERT_TRUE(r.run && r.flow);
  EXPECT_TRUE(is_valid_flow(v, s, t, *r.flow));
  EXPECT_EQ(BigInt(static_cast<unsigned long>(r.run->length())), r.flow->total());
  std::vector<std::size_t> uses(v.num_transitions(), 0);
  for (auto tr : r.run->steps) ++uses[tr];
  for (std::size_t i = 0; i < r.flow->support.size(); ++i)
    EXPECT_EQ(BigInt(static_cast<unsigned long>(uses[r.flow->support[i]])), r.flow->multiplicities[i]);
  EXPECT_EQ(r.run->end(), t);
}

TEST(ShortestZrun, HandCases) {
  auto same = shortest_zrun(loop(1), {0, {2}}, {0, {2}});
  ASSERT_TRUE(same.run);
  EXPECT_EQ(same.run->length(), 0u);
  auto five = shortest_zrun(loop(1), {0, {1}}, {0, {6}});
  ASSERT_TRUE(five.run);
  EXPECT_EQ(five.run->length(), 5u);
  witness::DeciderOptions o;
  o.cap = 4;
  auto capped = shortest_zrun(loop(1), {0, {1}}, {0, {6}}, o);
  EXPECT_EQ(capped.outcome, witness::Outcome::no);
}

TEST(ShortestZrun, LengthEqualsMinimalFlow) {
  std::mt19937_64 rng(3);
  cli::RandomSpec spec;
  spec.max_d = 3;
  spec.max_n = 3;
  spec.max_t = 5;
  int compared = 0;
  for (int i = 0; i < 150; ++i) {
    auto v = cli::random_vass(rng, spec, "z");
    ZConfiguration s{0, testing::random_ints(rng, v.dim(), -2, 2)};
    ZConfiguration t{rng() % v.num_states(), testing::random_ints(rng, v.dim(), -2, 2)};
    auto z = decide_zreach(v, s, t);
    witness::DeciderOptions o;
    o.cap = 10;
    auto b = shortest_zrun(v, s, t, o);
    if (z.run && z.run->length() > 10) continue;
    ++compared;
    EXPECT_EQ(z.run.has_value(), b.run.has_value()) << serialize(v);
    if (z.run && b.run) EXPECT_EQ(z.run->length(), b.run->length()) << serialize(v);
  }
  EXPECT_GT(compared, 100);
}

}  // namespace
}  // namespace geodim::zreach
