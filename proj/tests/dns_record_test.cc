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

#include "sgossip/dns_record.h"

#include "gtest/gtest.h"

namespace sgossip {
namespace {

DnsRecord Rec(std::string ip, std::uint64_t origin, std::uint64_t counter,
              std::uint64_t ttl = 10) {
  return DnsRecord{"www.example", std::move(ip), ttl, {NodeId{origin}, counter}};
}

TEST(LwwTest, HigherCounterWins) {
  const DnsRecord a = Rec("10.0.0.3", 9, 3);
  const DnsRecord b = Rec("10.0.0.5", 9, 5);
  EXPECT_EQ(lww(a, b), b);
  EXPECT_EQ(lww(b, a), b);
}

TEST(LwwTest, EqualCounterLowerOriginWins) {
  const DnsRecord a = Rec("10.0.0.1", 2, 4);
  const DnsRecord b = Rec("10.0.0.2", 7, 4);
  EXPECT_EQ(lww(a, b), a);
  EXPECT_EQ(lww(b, a), a);
}

TEST(LwwTest, ReplicasPreferLowerTtl) {
  const DnsRecord a = Rec("10.0.0.1", 2, 4, 8);
  const DnsRecord b = Rec("10.0.0.1", 2, 4, 6);
  EXPECT_EQ(lww(a, b), b);
  EXPECT_EQ(lww(b, a), b);
}

TEST(MergeRecordsTest, IdempotentAndPerName) {
  RecordTable t{{"www.example", Rec("10.0.0.1", 1, 1)}};
  const RecordTable before = t;
  merge_records(t, before);
  EXPECT_EQ(t, before);
  RecordTable other{{"mail.example", DnsRecord{"mail.example", "10.0.0.9", 4, {NodeId{3}, 2}}},
                    {"www.example", Rec("10.0.0.2", 1, 2)}};
  merge_records(t, other);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.at("www.example").ip, "10.0.0.2");
}

}  // namespace
}  // namespace sgossip
