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

#ifndef DYNCC_CLUSTERING_H_
#define DYNCC_CLUSTERING_H_

#include <map>
#include <vector>

#include "dyncc/types.h"

namespace dyncc {

// A partition of the vertex set into non-empty clusters with stable ids.
// Cluster member vectors are sorted ascending; `assignment` is the inverse
// map; `next_id` is the smallest id never handed out (ids are never reused).
struct Clustering {
  std::map<ClusterId, std::vector<VertexId>> clusters;
  std::map<VertexId, ClusterId> assignment;
  ClusterId next_id = 0;

  friend bool operator==(const Clustering&, const Clustering&) = default;
};

// Cluster member sets sorted ascending, ordered by their minimum vertex.
// Ids do not participate, so two clusterings compare equal as partitions
// iff their canonical forms are equal.
std::vector<std::vector<VertexId>> CanonicalPartition(const Clustering& c);

bool SamePartition(const Clustering& a, const Clustering& b);

// Checks that c partitions exactly the given vertex set (sorted ascending).
// Throws kNotAPartition.
void CheckPartitionOf(const Clustering& c,
                      const std::vector<VertexId>& vertices);

}  // namespace dyncc

#endif  // DYNCC_CLUSTERING_H_
