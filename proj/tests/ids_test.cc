// Copyright 2026 The sgossip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sgossip/ids.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace sgossip {
namespace {

RingConfig Ring(int m) { return RingConfig{m, 0}; }

TEST(ClockwiseDistanceTest, Examples) {
  const RingConfig cfg = Ring(4);
  EXPECT_EQ(clockwise_distance(NodeId{5}, NodeId{6}, cfg), 1u);
  EXPECT_EQ(clockwise_distance(NodeId{15}, NodeId{0}, cfg), 1u);
  EXPECT_EQ(clockwise_distance(NodeId{3}, NodeId{3}, cfg), 0u);
  EXPECT_EQ(clockwise_distance(NodeId{6}, NodeId{5}, cfg), 15u);
}

TEST(ClockwiseDistanceTest, OppositeDirectionsSumToRingOrZero) {
  for (int m : {1, 4, 7}) {
    const RingConfig cfg = Ring(m);
    for (std::uint64_t a = 0; a < cfg.ring_size(); ++a) {
      for (std::uint64_t b = 0; b < cfg.ring_size(); ++b) {
        const auto sum = clockwise_distance(NodeId{a}, NodeId{b}, cfg) +
                         clockwise_distance(NodeId{b}, NodeId{a}, cfg);
        EXPECT_TRUE(sum == 0 || sum == cfg.ring_size()) << a << " " << b;
        // Oracle: walk clockwise one step at a time.
        std::uint64_t steps = 0;
        for (std::uint64_t x = a; x != b; x = (x + 1) % cfg.ring_size()) ++steps;
        EXPECT_EQ(clockwise_distance(NodeId{a}, NodeId{b}, cfg), steps);
      }
    }
  }
}

TEST(InIntervalTest, Examples) {
  const RingConfig cfg = Ring(4);
  EXPECT_TRUE(in_interval(NodeId{2}, NodeId{15}, NodeId{4}, cfg));
  EXPECT_FALSE(in_interval(NodeId{15}, NodeId{15}, NodeId{4}, cfg));
  EXPECT_TRUE(in_interval(NodeId{4}, NodeId{15}, NodeId{4}, cfg));
  EXPECT_FALSE(in_interval(NodeId{5}, NodeId{15}, NodeId{4}, cfg));
}

TEST(InIntervalTest, EqualBoundsCoverWholeRing) {
  const RingConfig cfg = Ring(3);
  for (std::uint64_t x = 0; x < 8; ++x) {
    EXPECT_TRUE(in_interval(NodeId{x}, NodeId{5}, NodeId{5}, cfg));
  }
}

TEST(InIntervalTest, ComplementaryIntervalsPartitionTheRing) {
  const RingConfig cfg = Ring(5);
  for (std::uint64_t lo = 0; lo < 32; ++lo) {
    for (std::uint64_t hi = 0; hi < 32; ++hi) {
      if (lo == hi) continue;
      for (std::uint64_t x = 0; x < 32; ++x) {
        const bool first = in_interval(NodeId{x}, NodeId{lo}, NodeId{hi}, cfg);
        const bool second = in_interval(NodeId{x}, NodeId{hi}, NodeId{lo}, cfg);
        EXPECT_NE(first, second) << x << " " << lo << " " << hi;
        // Oracle: x is hit when stepping clockwise from lo + 1 to hi.
        bool walk = false;
        for (std::uint64_t y = (lo + 1) % 32;; y = (y + 1) % 32) {
          if (y == x) walk = true;
          if (y == hi) break;
        }
        EXPECT_EQ(first, walk);
      }
    }
  }
}

TEST(HashNameTest, DeterministicAndInRange) {
  for (int m : {4, 16, 20}) {
    const RingConfig cfg = Ring(m);
    for (const char* s : {"a", "alpha.example", "node:1:7", "x.y.z"}) {
      EXPECT_EQ(hash_name(s, cfg), hash_name(s, cfg));
      EXPECT_LT(hash_name(s, cfg).value, cfg.ring_size());
    }
  }
}

TEST(HashNameTest, EmptyNameRejected) {
  EXPECT_THROW(hash_name("", Ring(16)), std::invalid_argument);
}

TEST(HashNameTest, UniformOverSixteenArcs) {
  const RingConfig cfg = Ring(16);
  std::mt19937_64 rng(2026);
  std::vector<int> load(16, 0);
  std::set<std::string> names;
  while (names.size() < 10000) {
    std::string s;
    const int len = 3 + static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) s.push_back(static_cast<char>('a' + rng() % 26));
    names.insert(s + ".example");
  }
  for (const auto& s : names) ++load[hash_name(s, cfg).value / (cfg.ring_size() / 16)];
  const double mean = 10000.0 / 16;
  EXPECT_LE(*std::max_element(load.begin(), load.end()), 3 * mean);
}

TEST(RingConfigTest, Validate) {
  EXPECT_NO_THROW(Ring(1).Validate());
  EXPECT_NO_THROW(Ring(kMaxRingBits).Validate());
  EXPECT_THROW(Ring(0).Validate(), std::invalid_argument);
  EXPECT_THROW(Ring(kMaxRingBits + 1).Validate(), std::invalid_argument);
}

TEST(BitsForTest, SmallestCoveringWidth) {
  EXPECT_EQ(bits_for(1), 1);
  EXPECT_EQ(bits_for(2), 1);
  EXPECT_EQ(bits_for(3), 2);
  EXPECT_EQ(bits_for(16), 4);
  EXPECT_EQ(bits_for(17), 5);
  EXPECT_EQ(bits_for(4096), 12);
}

}  // namespace
}  // namespace sgossip
