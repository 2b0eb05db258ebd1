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

#ifndef DYNCC_DYNAMIC_STATE_H_
#define DYNCC_DYNAMIC_STATE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dyncc/agreement.h"
#include "dyncc/signed_graph.h"
#include "dyncc/types.h"

namespace dyncc {

enum class FlipDirection { kNegativeToPositive, kPositiveToNegative };

// Work accounting for one flip. na_evaluations counts exact symmetric-
// difference passes (the unit the per-flip work bound is stated in);
// verify_calls counts flag re-checks, whether or not they flipped a flag.
struct WorkCounters {
  std::uint64_t na_evaluations = 0;
  std::uint64_t verify_calls = 0;
};

// Everything about the pre-flip world that the update and the change report
// need after the structural flip has destroyed it. Taken BEFORE the flip.
//
// `region` is N(u) + N(v) + {u, v} over pre-flip neighborhoods; the flip
// preserves this union, and no vertex outside it changes its agreement count
// or lightness. `agree_before` holds the pre-flip flags of exactly the
// positive edges then incident to u or v (the only edges whose flags the
// update may touch).
struct FlipSnapshot {
  VertexId u = 0;
  VertexId v = 0;
  FlipDirection direction = FlipDirection::kNegativeToPositive;
  std::vector<VertexId> pre_neighbors_u;
  std::vector<VertexId> pre_neighbors_v;
  std::size_t pre_deg_u = 0;
  std::size_t pre_deg_v = 0;
  std::vector<VertexId> region;
  std::map<VertexId, bool> lightness_before;
  std::map<EdgeKey, bool> agree_before;
  WorkCounters work;
};

// Captures the snapshot for flipping {u, v}. Call before SignedGraph::
// FlipEdge; the recorded direction is what the upcoming flip will do.
// Throws kSelfLoop / kVertexNotFound.
FlipSnapshot TakeFlipSnapshot(const SignedGraph& g, const AgreementState& state,
                              VertexId u, VertexId v);

// Re-evaluates the agreement flag of positive edge {x, y} against the
// current graph and fixes both endpoint counts if the flag flips. When the
// caller already knows |N(x) symdiff N(y)| it can pass it to skip the pass
// (counted as zero evaluations). Throws kNotPositiveAdjacent.
void VerifyEdge(const SignedGraph& g, AgreementState& state,
                const Epsilon& eps, VertexId x, VertexId y, WorkCounters& work,
                std::optional<std::size_t> known_sym_diff = std::nullopt,
                NeighborhoodMode mode = NeighborhoodMode::kOpen);

// Pre-flip inputs to a skip rule for edge {x, w}, x an endpoint of the
// flipped pair, w adjacent to x but not to the other endpoint.
struct PredicateInputs {
  std::size_t deg_x = 0;       // pre-flip degree of the flip endpoint
  std::size_t deg_w = 0;       // degree of w (the flip does not change it)
  std::size_t threshold = 0;   // pre-flip |N(x) symdiff N(w)|
};

// Whether {x, w} needs re-checking after x gains / loses a positive edge.
// Everything is decided on pre-flip quantities; skipping is allowed only
// when the agreement status provably cannot change.
bool NeedsVerifyAfterGain(bool was_agreeing, const PredicateInputs& in);
bool NeedsVerifyAfterLoss(bool was_agreeing, const PredicateInputs& in,
                          bool corrected);

// Incremental agreement-state updates, called after the structural flip.
// Both restrict work to edges incident to u or v plus a lightness refresh
// over the snapshot region, and both leave the state exactly as a full
// recompute would. Open neighborhoods only. Throws kEdgeNotPositive /
// kEdgeNotNegative if the graph does not reflect the snapshot's direction.
void UpdateNegativeToPositive(const SignedGraph& g, AgreementState& state,
                              const Epsilon& eps, FlipSnapshot& snap,
                              PruningMode pruning = PruningMode::kCorrected);
void UpdatePositiveToNegative(const SignedGraph& g, AgreementState& state,
                              const Epsilon& eps, FlipSnapshot& snap,
                              PruningMode pruning = PruningMode::kCorrected);

// No-skip fallback: re-verifies every positive edge now incident to u or v
// and refreshes lightness over the region. Works for either neighborhood
// convention; the result is bit-identical to the pruned updates.
void SafeRecomputeAround(const SignedGraph& g, AgreementState& state,
                         const Epsilon& eps, FlipSnapshot& snap,
                         NeighborhoodMode mode = NeighborhoodMode::kOpen);

// Dispatches on snapshot direction and pruning mode.
void ApplyFlipUpdate(const SignedGraph& g, AgreementState& state,
                     const Epsilon& eps, FlipSnapshot& snap,
                     PruningMode pruning,
                     NeighborhoodMode mode = NeighborhoodMode::kOpen);

// What one flip did to the sparsified graph, derived from the snapshot's
// old flags and the updated state.
struct ChangeSet {
  VertexId u = 0;
  VertexId v = 0;
  FlipDirection direction = FlipDirection::kNegativeToPositive;
  std::vector<VertexId> region;             // sorted
  std::vector<VertexId> lightness_changed;  // sorted subset of region
  std::vector<EdgeKey> changed_presence;    // sorted; sparsified-presence flips
};

ChangeSet CollectChanges(const SignedGraph& g, const AgreementState& state,
                         const FlipSnapshot& snap);

}  // namespace dyncc

#endif  // DYNCC_DYNAMIC_STATE_H_
