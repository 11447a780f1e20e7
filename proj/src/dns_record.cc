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

#include <tuple>

namespace sgossip {

bool record_wins(const DnsRecord& a, const DnsRecord& b) {
  if (a.version.counter != b.version.counter) {
    return a.version.counter > b.version.counter;
  }
  if (a.version.origin != b.version.origin) {
    return a.version.origin < b.version.origin;
  }
  return std::tie(a.ttl, a.ip) < std::tie(b.ttl, b.ip);
}

const DnsRecord& lww(const DnsRecord& a, const DnsRecord& b) {
  return record_wins(b, a) ? b : a;
}

void merge_records(RecordTable& into, const RecordTable& from) {
  for (const auto& [name, rec] : from) {
    auto [it, inserted] = into.try_emplace(name, rec);
    if (!inserted && record_wins(rec, it->second)) it->second = rec;
  }
}

}  // namespace sgossip
