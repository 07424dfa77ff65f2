// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "geodim/errors.hpp"
#include "geodim/families.hpp"
#include "geodim/oracles.hpp"

namespace geodim::oracles {
namespace {

Vass one_state(std::size_t d, const std::vector<std::string>& loops) {
  std::string text = "vass t\ndim " + std::to_string(d) + "\nstate q\n";
  for (const auto& l : loops) text += "trans q q " + l + "\n";
  return parse_vass(text);
}

TEST(Bfs, BoxedLoop) {
  auto r = bfs_reach(one_state(1, {"1"}), Configuration(0, {0}), {3}, 100);
  ASSERT_EQ(r.configs.size(), 4u);
  for (long i = 0; i <= 3; ++i) EXPECT_EQ(r.distance_to({0, {i}}), static_cast<std::size_t>(i));
  EXPECT_TRUE(r.truncated);
}

TEST(Bfs, NoTransitions) {
  auto v = parse_vass("vass t\ndim 1\nstate q\n");
  auto r = bfs_reach(v, Configuration(0, {2}), {5}, 10);
  ASSERT_EQ(r.configs.size(), 1u);
  EXPECT_FALSE(r.truncated);
}

TEST(Bfs, DoublingCoverDistance) {
  auto r = bfs_reach(doubling_chain(3), Configuration(0, {0, 0, 0}), {8, 4, 2}, 100);
  EXPECT_EQ(r.distance_to_cover({2, {0, 0, 1}}), 9u);
}

TEST(Backward, TargetZeroMeansStateReachability) {
  auto v = parse_vass("vass t\ndim 1\nstate p q r\ntrans p q -1\ntrans r r 1\n");
  auto b = backward_coverability(v, Configuration(1, {0}));
  EXPECT_TRUE(b.contains(Configuration(1, {0})));
  EXPECT_TRUE(b.contains(Configuration(0, {1})));
  EXPECT_FALSE(b.contains(Configuration(0, {0})));
  EXPECT_FALSE(b.contains(Configuration(2, {9})));
}

TEST(Backward, DoublingBasis) {
  auto b = backward_coverability(doubling_chain(3), Configuration(2, {0, 0, 1}));
  EXPECT_TRUE(b.contains(Configuration(0, {0, 0, 0})));
  EXPECT_EQ(b.minimal[2].size(), 2u);  // (0,0,1) and (0,2,0)
}

TEST(KarpMiller, HandCases) {
  auto up = karp_miller(one_state(1, {"1"}), Configuration(0, {0}));
  EXPECT_FALSE(up.bounded());
  bool omega = false;
  for (const auto& n : up.nodes) omega = omega || !n.values[0].has_value();
  EXPECT_TRUE(omega);

  auto zero = karp_miller(one_state(1, {"0"}), Configuration(0, {0}));
  EXPECT_TRUE(zero.bounded());
  EXPECT_FALSE(zero.truncated);

  auto both = karp_miller(one_state(2, {"1 0", "0 1"}), Configuration(0, {0, 0}));
  EXPECT_TRUE(both.simultaneous_omega(0));
  EXPECT_FALSE(both.counter_bounded(0));
  auto one = karp_miller(one_state(2, {"1 0"}), Configuration(0, {0, 0}));
  EXPECT_FALSE(one.simultaneous_omega(0));
  EXPECT_TRUE(one.counter_bounded(1));
}

TEST(KarpMiller, TruncatedTreeRefusesQueries) {
  auto t = karp_miller(doubling_chain(3), Configuration(0, {0, 0, 0}), 2);
  EXPECT_TRUE(t.truncated);
  EXPECT_THROW(t.bounded(), ResourceLimit);
}

TEST(KarpMiller, DumpMarksOmega) {
  auto t = karp_miller(one_state(1, {"1"}), Configuration(0, {0}));
  const auto text = t.dump(one_state(1, {"1"}));
  EXPECT_NE(text.find("0 -1 q 0"), std::string::npos) << text;
  EXPECT_NE(text.find("w"), std::string::npos) << text;
}

}  // namespace
}  // namespace geodim::oracles
