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

#include "sgossip/fault_model.h"

#include <stdexcept>

#include "gtest/gtest.h"
#include "test_util.h"

namespace sgossip {
namespace {

using testing::Ids;
using testing::Range;

TEST(FaultModelTest, SplitAndStaggeredHeal) {
  FaultModel f(Range(0, 15));
  EXPECT_EQ(f.groups().size(), 1u);
  const auto ids = f.split({Range(0, 4), Range(5, 9), Range(10, 15)});
  EXPECT_EQ(ids, (std::vector<PartitionId>{PartitionId{0}, PartitionId{5}, PartitionId{10}}));
  EXPECT_EQ(f.group_of(NodeId{7}), 5u);
  EXPECT_EQ(f.heal({PartitionId{0}, PartitionId{5}}), 0u);
  EXPECT_EQ(f.group_of(NodeId{7}), 0u);
  EXPECT_EQ(f.group_of(NodeId{12}), 10u);
  EXPECT_EQ(f.heal({}), 0u);
  EXPECT_EQ(f.groups().size(), 1u);
}

TEST(FaultModelTest, SplitValidation) {
  FaultModel f(Range(0, 7));
  EXPECT_THROW(f.split({Range(0, 3), Range(3, 7)}), std::invalid_argument);
  EXPECT_THROW(f.split({Range(0, 3), Range(4, 6)}), std::invalid_argument);
  EXPECT_THROW(f.split({Range(0, 3), Range(4, 8)}), std::invalid_argument);
  EXPECT_THROW(f.split({}), std::invalid_argument);
  EXPECT_EQ(f.groups().size(), 1u);  // failed splits leave no trace
}

TEST(FaultModelTest, HealValidation) {
  FaultModel f(Range(0, 7));
  EXPECT_THROW(f.heal({}), std::invalid_argument);
  f.split({Range(0, 3), Range(4, 7)});
  EXPECT_THROW(f.heal({PartitionId{0}}), std::invalid_argument);
  EXPECT_THROW(f.heal({PartitionId{0}, PartitionId{2}}), std::invalid_argument);
  EXPECT_THROW(f.heal({PartitionId{4}, PartitionId{4}}), std::invalid_argument);
}

TEST(FaultModelTest, KillRevive) {
  FaultModel f(Ids({2, 5, 9}));
  f.kill(NodeId{5});
  EXPECT_FALSE(f.active(NodeId{5}));
  EXPECT_THROW(f.kill(NodeId{5}), std::invalid_argument);
  f.revive(NodeId{5});
  EXPECT_TRUE(f.active(NodeId{5}));
  EXPECT_THROW(f.revive(NodeId{5}), std::invalid_argument);
  EXPECT_THROW(f.kill(NodeId{3}), std::invalid_argument);
  EXPECT_FALSE(f.is_member(NodeId{3}));
}

}  // namespace
}  // namespace sgossip
