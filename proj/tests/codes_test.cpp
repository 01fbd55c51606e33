// Copyright 2026 The simplegames Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "simplegames/codes.hpp"
#include "test_games.hpp"

namespace simplegames {
namespace {

int min_pairwise_distance(const Code& code) {
  int best = code.n() + 1;
  const auto cs = code.centers();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) best = std::min(best, hamming_distance(cs[i], cs[j]));
  }
  return best;
}

// How many centers lie within distance 1 of each coalition.
std::vector<int> cover_multiplicity(const Code& code) {
  std::vector<int> count(std::size_t{1} << code.n(), 0);
  for (Coalition c : code.centers()) {
    for_each_coalition(code.n(), [&](Coalition x) {
      if (hamming_distance(x, c) <= 1) ++count[x.bits()];
    });
  }
  return count;
}

TEST(HammingCodeTest, LengthThree) {
  const Code code = hamming_code(2);
  EXPECT_EQ(code.n(), 3);
  EXPECT_EQ(code.centers().size(), 2U);
  EXPECT_TRUE(code.contains(Coalition::empty()));
  EXPECT_TRUE(code.contains(Coalition::of({1, 2, 3})));
  EXPECT_TRUE(covering_radius_at_most(code, 1));
}

TEST(HammingCodeTest, SizesAndMinimumDistance) {
  for (int m = 2; m <= 4; ++m) {
    const Code code = hamming_code(m);
    const int n = (1 << m) - 1;
    EXPECT_EQ(code.size(), std::size_t{1} << (n - m)) << "m=" << m;
    if (m <= 3) {
      EXPECT_EQ(min_pairwise_distance(code), 3) << "m=" << m;
    }
  }
}

TEST(HammingCodeTest, PerfectForLengthSevenAndThree) {
  for (int m = 2; m <= 3; ++m) {
    for (int k : cover_multiplicity(hamming_code(m))) EXPECT_EQ(k, 1);
  }
}

TEST(HammingCodeTest, LengthFifteenCoversSpace) {
  EXPECT_TRUE(covering_radius_at_most(hamming_code(4), 1));
  EXPECT_FALSE(covering_radius_at_most(hamming_code(4), 0));
}

TEST(HammingCodeTest, RejectsOutOfRangeM) {
  for (int m : {0, 1, 5}) {
    try {
      hamming_code(m);
      FAIL() << m;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMOutOfRange);
    }
  }
}

TEST(CoveringRadiusTest, Examples) {
  const Code k4(4, {Coalition::empty(), Coalition::of({4}), Coalition::of({1, 2, 3}),
                    Coalition::full(4)});
  EXPECT_TRUE(covering_radius_at_most(k4, 1));
  EXPECT_FALSE(covering_radius_at_most(k4, 0));

  const std::vector<Coalition> targets{Coalition::of({1}), Coalition::of({2, 3})};
  EXPECT_TRUE(covering_radius_at_most(Code(3, targets), targets, 0));

  const Code origin(4, {Coalition::empty()});
  EXPECT_FALSE(covering_radius_at_most(origin, 1));
  EXPECT_FALSE(covering_radius_at_most(origin, 3));
  EXPECT_TRUE(covering_radius_at_most(origin, 4));
}

TEST(GreedyCoverTest, FourPlayerGameNeedsTwoCenters) {
  const auto game = testgames::four_player_game();
  const Code cover = greedy_cover(4, game.maximal_losing());
  EXPECT_EQ(cover.size(), 2U);
  EXPECT_TRUE(covering_radius_at_most(cover, game.maximal_losing(), 1));
  // Ties go to the smallest coalition: {1} (mask 1) then {2} (mask 2).
  EXPECT_EQ(cover.centers()[0], Coalition::of({1}));
  EXPECT_EQ(cover.centers()[1], Coalition::of({2}));
}

TEST(GreedyCoverTest, SingleTarget) {
  const std::vector<Coalition> targets{Coalition::of({1})};
  const Code cover = greedy_cover(3, targets);
  EXPECT_EQ(cover.size(), 1U);
  EXPECT_TRUE(covering_radius_at_most(cover, targets, 1));
}

TEST(GreedyCoverTest, WholeSpaceOfFour) {
  const auto all = all_coalitions(4);
  const Code cover = greedy_cover(4, all);
  EXPECT_TRUE(covering_radius_at_most(cover, all, 1));
  EXPECT_GE(cover.size(), 4U);
}

TEST(GreedyCoverTest, MatchesFullRescanOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<Coalition> targets;
    const int k = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < k; ++i) targets.emplace_back(rng() & Coalition::full(n).bits());
    const Code cover = greedy_cover(n, targets);
    std::vector<oracle::Mask> ts = testgames::masks(targets);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    EXPECT_EQ(testgames::masks(cover.centers()), oracle::naive_greedy_cover(n, ts))
        << "trial " << trial;
    EXPECT_LE(cover.size(), ts.size());
  }
}

TEST(FullCoverTest, Sizes) {
  EXPECT_EQ(full_cover(1).size(), 1U);
  EXPECT_EQ(full_cover(2).size(), 2U);
  EXPECT_EQ(full_cover(3).size(), 2U);
  EXPECT_EQ(full_cover(4).size(), 4U);  // 2 suffixes × 2 Hamming codewords
  EXPECT_EQ(full_cover(7).size(), 16U);
  EXPECT_EQ(full_cover(8).size(), 32U);
  EXPECT_EQ(full_cover(15).size(), 2048U);
  EXPECT_EQ(full_cover(16).size(), 4096U);
}

TEST(FullCoverTest, RadiusOneEverywhere) {
  for (int n = 1; n <= 16; ++n) EXPECT_TRUE(covering_radius_at_most(full_cover(n), 1)) << n;
}

TEST(FullCoverTest, PerfectLengthsHitSphereBound) {
  for (int n : {1, 3, 7, 15}) {
    EXPECT_EQ(full_cover(n).size(), (std::size_t{1} << n) / static_cast<std::size_t>(n + 1));
  }
}

TEST(CodeTest, ValidatesCenters) {
  EXPECT_THROW(Code(3, {}), Error);
  EXPECT_THROW(Code(3, {Coalition::of({4})}), Error);
  EXPECT_EQ(Code(3, {Coalition::of({1}), Coalition::of({1})}).size(), 1U);
}

}  // namespace
}  // namespace simplegames
