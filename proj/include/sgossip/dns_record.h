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

#ifndef SGOSSIP_DNS_RECORD_H_
#define SGOSSIP_DNS_RECORD_H_

#include <cstdint>
#include <map>
#include <string>

#include "sgossip/ids.h"

namespace sgossip {

struct RecordVersion {
  NodeId origin;
  std::uint64_t counter = 1;

  bool operator==(const RecordVersion&) const = default;
};

// A name translation. `ttl` counts rounds remaining; zero means expired.
struct DnsRecord {
  std::string name;
  std::string ip;
  std::uint64_t ttl = 0;
  RecordVersion version;

  bool operator==(const DnsRecord&) const = default;
};

using RecordTable = std::map<std::string, DnsRecord>;

// Last-writer-wins order: higher counter, then lower origin. Replicas of one
// publish only differ in remaining ttl; the lower ttl wins so that merging is
// a join on a total order.
bool record_wins(const DnsRecord& a, const DnsRecord& b);

const DnsRecord& lww(const DnsRecord& a, const DnsRecord& b);

// Per-name lww of `from` into `into`.
void merge_records(RecordTable& into, const RecordTable& from);

}  // namespace sgossip

#endif  // SGOSSIP_DNS_RECORD_H_
