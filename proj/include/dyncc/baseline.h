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

#ifndef DYNCC_BASELINE_H_
#define DYNCC_BASELINE_H_

#include <cstdint>
#include <functional>

#include "dyncc/agreement.h"
#include "dyncc/clustering.h"
#include "dyncc/signed_graph.h"

namespace dyncc {

// Disagreement cost split: positive edges cut across clusters plus negative
// edges buried inside clusters. The negative part is counted by complement
// (pairs inside minus internal positive edges) rather than pair enumeration.
struct CostBreakdown {
  std::uint64_t positive_cut = 0;
  std::uint64_t negative_internal = 0;
  std::uint64_t total = 0;

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

// Connected components of the subgraph keeping the positive edges the
// predicate accepts. The predicate is consulted only on positive edges.
// Component ids start at first_id, assigned in ascending order of each
// component's minimum vertex; next_id ends at first_id + #components.
Clustering ConnectedComponents(
    const SignedGraph& g,
    const std::function<bool(VertexId, VertexId)>& keep_edge,
    ClusterId first_id);

// The from-scratch clusterer: agreement state, sparsification, components.
Clustering CorrelationClustering(
    const SignedGraph& g, const Epsilon& eps,
    NeighborhoodMode mode = NeighborhoodMode::kOpen, ClusterId first_id = 0);

// Exact disagreement cost of c on g. Throws kNotAPartition if c does not
// partition g's vertices.
CostBreakdown ClusteringCost(const SignedGraph& g, const Clustering& c);

}  // namespace dyncc

#endif  // DYNCC_BASELINE_H_
