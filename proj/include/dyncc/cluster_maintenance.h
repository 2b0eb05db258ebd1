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

#ifndef DYNCC_CLUSTER_MAINTENANCE_H_
#define DYNCC_CLUSTER_MAINTENANCE_H_

#include <map>
#include <utility>
#include <vector>

#include "dyncc/agreement.h"
#include "dyncc/clustering.h"
#include "dyncc/dynamic_state.h"
#include "dyncc/signed_graph.h"

namespace dyncc {

// How a flip affects one existing cluster. Ordered: during marking a
// strictly greater value overwrites, a smaller or equal one never does.
enum class ClusterMark {
  kUnprocessed = 0,
  kCopyCandidate = 1,   // carried over as-is, id preserved
  kMergeCandidate = 2,  // participates whole in re-gluing
  kSplitCandidate = 3,  // decomposed into fragments before re-gluing
};

// Marking result: one mark per previous cluster, the vertex pairs that
// triggered merges, and each cluster's merge-group representative (the
// union-find class over merge pairs; singleton group = itself).
struct MarkTable {
  std::map<ClusterId, ClusterMark> mark;
  std::vector<std::pair<VertexId, VertexId>> merge_pairs;
  std::map<ClusterId, ClusterId> group;

  ClusterMark MarkOf(ClusterId id) const { return mark.at(id); }
};

// The vertex set re-examined after a flip: the snapshot region, plus - in
// frontier mode - every outside endpoint of a changed-presence edge whose
// inside endpoint flipped lightness. Region-only (kPaperStrict) misses
// merges/splits that enter through such boundary edges.
std::vector<VertexId> ComputeFrontier(const ChangeSet& changes,
                                      MaintenanceMode mode);

// Connected components of the current sparsified graph restricted to the
// frontier set. Returns vertex -> dense component index, indices assigned
// in ascending order of each component's minimum vertex.
std::map<VertexId, int> ComponentsWithin(const SignedGraph& g,
                                         const AgreementState& state,
                                         const std::vector<VertexId>& frontier);

// Marks every previous cluster. Clusters missing the frontier entirely are
// copy candidates outright; each frontier pair (w, w') - self-pairs
// included - refines the rest: same component & same cluster -> copy,
// same component & different clusters -> merge both, different components &
// same cluster -> split.
MarkTable MarkClusters(const Clustering& prev,
                       const std::vector<VertexId>& frontier,
                       const std::map<VertexId, int>& component_of);

// Components of one cluster's vertex set under the current sparsified
// predicate with frontier-frontier edges removed; ascending-minimum order.
std::vector<std::vector<VertexId>> SplitFragments(
    const SignedGraph& g, const AgreementState& state,
    const std::vector<VertexId>& members,
    const std::vector<VertexId>& frontier);

// Reassembles the clustering: copy candidates keep their ids verbatim;
// merge clusters (whole) and split fragments are glued to the frontier
// components they touch via union-find; every glued set becomes a fresh
// cluster, ids assigned in ascending order of minimum contained vertex.
// Throws kUnprocessedCluster if marking left a cluster untouched.
Clustering RebuildClustering(
    const Clustering& prev, const MarkTable& marks,
    const std::map<VertexId, int>& component_of,
    const std::map<ClusterId, std::vector<std::vector<VertexId>>>& fragments,
    const std::vector<VertexId>& frontier);

// One-shot pipeline over the steps above.
Clustering MaintainAfterFlip(const SignedGraph& g, const AgreementState& state,
                             const Clustering& prev, const ChangeSet& changes,
                             MaintenanceMode mode = MaintenanceMode::kFrontier);

// Same, with a caller-computed frontier (lets callers report its size).
Clustering MaintainWithFrontier(const SignedGraph& g,
                                const AgreementState& state,
                                const Clustering& prev,
                                const std::vector<VertexId>& frontier);

// Singleton bookkeeping for vertex insertions/removals. The in-place forms
// touch a constant number of structures; the pure forms copy first.
ClusterId AddSingletonInPlace(Clustering& c, VertexId v);
void RemoveSingletonInPlace(Clustering& c, VertexId v);
Clustering AddSingleton(const Clustering& c, VertexId v);
Clustering RemoveSingleton(const Clustering& c, VertexId v);

}  // namespace dyncc

#endif  // DYNCC_CLUSTER_MAINTENANCE_H_
