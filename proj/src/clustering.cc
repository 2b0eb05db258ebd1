// Copyright 2026 The dyncc Authors
//
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

#include "dyncc/clustering.h"

#include <algorithm>

namespace dyncc {

std::vector<std::vector<VertexId>> CanonicalPartition(const Clustering& c) {
  std::vector<std::vector<VertexId>> out;
  out.reserve(c.clusters.size());
  for (const auto& [id, members] : c.clusters) {
    (void)id;
    out.push_back(members);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

bool SamePartition(const Clustering& a, const Clustering& b) {
  return CanonicalPartition(a) == CanonicalPartition(b);
}

void CheckPartitionOf(const Clustering& c,
                      const std::vector<VertexId>& vertices) {
  std::vector<VertexId> covered;
  for (const auto& [id, members] : c.clusters) {
    (void)id;
    if (members.empty())
      throw Error(ErrorCode::kNotAPartition, "empty cluster");
    if (!std::is_sorted(members.begin(), members.end()))
      throw Error(ErrorCode::kNotAPartition, "unsorted cluster members");
    covered.insert(covered.end(), members.begin(), members.end());
  }
  std::sort(covered.begin(), covered.end());
  if (covered != vertices)
    throw Error(ErrorCode::kNotAPartition,
                "clusters do not partition the vertex set");
  for (const auto& [id, members] : c.clusters)
    for (VertexId v : members)
      if (auto it = c.assignment.find(v);
          it == c.assignment.end() || it->second != id)
        throw Error(ErrorCode::kNotAPartition,
                    "assignment inconsistent at vertex " + std::to_string(v));
}

}  // namespace dyncc
