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

#include "dyncc/baseline.h"

#include <deque>
#include <set>

namespace dyncc {

Clustering ConnectedComponents(
    const SignedGraph& g,
    const std::function<bool(VertexId, VertexId)>& keep_edge,
    ClusterId first_id) {
  Clustering out;
  out.next_id = first_id;
  std::set<VertexId> seen;
  for (const auto& [start, nbrs] : g.Adjacency()) {
    (void)nbrs;
    if (seen.count(start)) continue;
    // Ascending iteration makes `start` the component minimum, so ids come
    // out in ascending-minimum order without a sort.
    std::vector<VertexId> members;
    std::deque<VertexId> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (VertexId w : g.PositiveNeighbors(v)) {
        if (seen.count(w) || !keep_edge(v, w)) continue;
        seen.insert(w);
        queue.push_back(w);
      }
    }
    std::sort(members.begin(), members.end());
    ClusterId id = out.next_id++;
    for (VertexId v : members) out.assignment[v] = id;
    out.clusters[id] = std::move(members);
  }
  return out;
}

Clustering CorrelationClustering(const SignedGraph& g, const Epsilon& eps,
                                 NeighborhoodMode mode, ClusterId first_id) {
  AgreementState state = ComputeAgreementState(g, eps, mode);
  return ConnectedComponents(
      g,
      [&](VertexId u, VertexId v) {
        return SparsifiedEdgePresent(g, state, u, v);
      },
      first_id);
}

CostBreakdown ClusteringCost(const SignedGraph& g, const Clustering& c) {
  CheckPartitionOf(c, g.Vertices());
  CostBreakdown cost;
  std::uint64_t internal_positive = 0;
  for (const auto& [v, nbrs] : g.Adjacency()) {
    for (VertexId w : nbrs) {
      if (v >= w) continue;
      if (c.assignment.at(v) == c.assignment.at(w))
        ++internal_positive;
      else
        ++cost.positive_cut;
    }
  }
  std::uint64_t internal_pairs = 0;
  for (const auto& [id, members] : c.clusters) {
    (void)id;
    std::uint64_t sz = members.size();
    internal_pairs += sz * (sz - 1) / 2;
  }
  cost.negative_internal = internal_pairs - internal_positive;
  cost.total = cost.positive_cut + cost.negative_internal;
  return cost;
}

}  // namespace dyncc
