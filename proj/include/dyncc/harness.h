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

#ifndef DYNCC_HARNESS_H_
#define DYNCC_HARNESS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "dyncc/baseline.h"
#include "dyncc/engine.h"
#include "dyncc/rng.h"

namespace dyncc {

// ---------------------------------------------------------------------------
// Workload generation

struct OpMix {
  unsigned flip = 8;
  unsigned add = 1;
  unsigned del = 1;
};

struct GeneratorParams {
  std::size_t n = 0;        // vertices 1..n
  std::size_t k = 1;        // planted groups (contiguous blocks)
  Probability p;            // positive-edge probability inside a group
  Probability q;            // positive-edge probability across groups
  std::size_t op_count = 0;
  OpMix mix;
  std::uint64_t seed = 0;
};

// Planted-partition instance: vertices 1..n in k contiguous blocks of size
// ceil(n/k); each same-block pair drawn positive with probability p, each
// cross-block pair with probability q, in ascending (u, v) order.
SignedGraph GenPlanted(const GeneratorParams& params);

// A valid-by-construction operation stream for g0: flips pick two distinct
// present vertices; adds introduce fresh ids above everything seen; each
// delete is preceded by flips turning the victim's positive edges negative.
// Deterministic in (params.seed, g0).
std::vector<Operation> GenOps(const GeneratorParams& params,
                              const SignedGraph& g0);

// ---------------------------------------------------------------------------
// Oracle checking

struct CheckOutcome {
  bool match = false;
  // First (lexicographic) vertex pair the two partitions classify
  // differently; only meaningful when !match.
  VertexId diff_u = 0;
  VertexId diff_v = 0;
  Clustering baseline;
};

// Recomputes the from-scratch clustering on g and compares it, as a
// partition, with the engine-maintained one.
CheckOutcome CheckStep(const SignedGraph& g, const Epsilon& eps,
                       const Clustering& online,
                       NeighborhoodMode mode = NeighborhoodMode::kOpen);

// ---------------------------------------------------------------------------
// Exhaustive optimum (tiny instances)

struct OptResult {
  CostBreakdown cost;
  std::vector<std::vector<VertexId>> partition;  // canonical form
};

// Enumerates every partition of the vertex set (restricted growth strings)
// and returns a minimum-cost one; cost ties break to the lexicographically
// smallest canonical partition. Throws kTooLarge above 11 vertices.
OptResult BruteForceOpt(const SignedGraph& g);

// ---------------------------------------------------------------------------
// Flip-effect predictions (the facts the skip rules rest on)

enum class NeighborCategory {
  kCommon,    // adjacent to both flip endpoints
  kOnlyU,     // adjacent to u only
  kOnlyV,     // adjacent to v only
  kEndpoint,  // w is u or v
  kOutside,   // adjacent to neither
};

// Category of w relative to flipping {u, v}, judged on pre-flip (open)
// neighborhoods; the flip preserves these classes.
NeighborCategory ClassifyNeighbor(const SignedGraph& pre, VertexId u,
                                  VertexId v, VertexId w);

// Exact change the flip causes in |N(x) symdiff N(w)| for the pair joining
// w to its adjacent flip endpoint (both endpoints for kCommon; the flipped
// pair itself for kEndpoint; every edge at w for kOutside).
int PredictedSymDiffDelta(NeighborCategory cat, FlipDirection dir);

enum class NaRelation {
  kStrictlyDecreases,
  kStays,
  kStrictlyIncreases,
  kDecreasesOrStays,
};

// How the non-agreement of positive edge {x, w} moves across the flip of
// {u, v}, where x is one of u, v. Decided from pre-flip degrees and the
// pre-flip symmetric difference alone. nullopt when w is not exclusively
// adjacent to x or commonly adjacent (no claim).
std::optional<NaRelation> PredictedNaRelation(const SignedGraph& pre,
                                              VertexId u, VertexId v,
                                              FlipDirection dir, VertexId x,
                                              VertexId w);

// The guaranteed post-flip agreement status of positive edge {x, y} of the
// pre graph (still positive after the flip), when the movement facts pin it
// down; nullopt when only a re-evaluation can tell. Skipping a re-check is
// sound exactly when this returns a value.
std::optional<bool> PredictedStableAgreement(const SignedGraph& pre,
                                             VertexId u, VertexId v,
                                             FlipDirection dir, VertexId x,
                                             VertexId y, bool agrees_pre);

// ---------------------------------------------------------------------------
// Criticality (does an element's removal reshape the clustering?)

// Edge removal = flipping positive {u, v} to negative. Throws
// kEdgeNotPositive on a non-positive pair.
bool IsEpsilonCriticalEdge(const SignedGraph& g, const Epsilon& eps,
                           VertexId u, VertexId v,
                           NeighborhoodMode mode = NeighborhoodMode::kOpen);

// Vertex removal = flipping all its positive edges, then deleting it. True
// iff the partition over the remaining vertices differs from the original
// partition with v dropped.
bool IsEpsilonCriticalVertex(const SignedGraph& g, const Epsilon& eps,
                             VertexId v,
                             NeighborhoodMode mode = NeighborhoodMode::kOpen);

// ---------------------------------------------------------------------------
// End-to-end experiments

struct DivergenceWitness {
  std::uint64_t t = 0;
  Operation op;
  std::vector<std::vector<VertexId>> online;    // canonical partitions
  std::vector<std::vector<VertexId>> baseline;
  VertexId diff_u = 0;
  VertexId diff_v = 0;
};

struct RunTotals {
  std::uint64_t applied = 0;
  std::uint64_t rejected = 0;
  std::uint64_t na_evaluations = 0;
  std::uint64_t verify_calls = 0;
  std::uint64_t mismatches = 0;
  std::int64_t wall_ns = 0;
};

struct ExperimentReport {
  std::size_t initial_vertices = 0;
  std::size_t initial_edges = 0;
  std::size_t initial_clusters = 0;
  std::uint64_t initial_cost = 0;
  std::vector<StepReport> steps;
  RunTotals totals;
  std::vector<DivergenceWitness> witnesses;  // capped
  bool diverged = false;
};

// Applies ops to an engine over g0; when check is set, every step is
// compared against the from-scratch oracle and mismatches produce
// replayable witnesses (up to witness_cap).
ExperimentReport DriveOps(const SignedGraph& g0,
                          const std::vector<Operation>& ops,
                          const EngineConfig& config, bool check,
                          std::size_t witness_cap = 8);

struct ExperimentConfig {
  GeneratorParams gen;
  EngineConfig engine;
  bool check = true;
};

// Generates the instance and stream from config.gen, then drives them.
// Everything is reproducible from (gen.seed, configuration).
ExperimentReport RunExperiment(const ExperimentConfig& config);

}  // namespace dyncc

#endif  // DYNCC_HARNESS_H_
