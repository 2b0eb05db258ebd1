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

#ifndef DYNCC_ENGINE_H_
#define DYNCC_ENGINE_H_

#include <cstdint>
#include <optional>
#include <string>

#include "dyncc/baseline.h"
#include "dyncc/cluster_maintenance.h"
#include "dyncc/dynamic_state.h"

namespace dyncc {

struct Operation {
  enum class Kind { kFlipSign, kAddVertex, kDeleteVertex };
  Kind kind = Kind::kFlipSign;
  VertexId u = 0;
  VertexId v = 0;  // only meaningful for kFlipSign

  static Operation FlipSign(VertexId u, VertexId v) {
    return {Kind::kFlipSign, u, v};
  }
  static Operation AddVertex(VertexId v) { return {Kind::kAddVertex, v, 0}; }
  static Operation DeleteVertex(VertexId v) {
    return {Kind::kDeleteVertex, v, 0};
  }
  friend bool operator==(const Operation&, const Operation&) = default;
};

struct EngineConfig {
  Epsilon eps;
  PruningMode pruning = PruningMode::kCorrected;
  MaintenanceMode maintenance = MaintenanceMode::kFrontier;
  NeighborhoodMode neighborhood = NeighborhoodMode::kOpen;
};

// Per-operation outcome. Rejected operations leave the engine untouched;
// the report then echoes the pre-existing clustering figures. s_size /
// f_size are the locality region and frontier sizes of a flip (zero for
// vertex operations, which touch only the one singleton). baseline_match
// is filled by external checking, never by the engine itself.
struct StepReport {
  std::uint64_t t = 0;
  Operation op;
  bool applied = false;
  std::string reject_reason;
  std::uint64_t na_evaluations = 0;
  std::uint64_t verify_calls = 0;
  std::size_t s_size = 0;
  std::size_t f_size = 0;
  std::size_t cluster_count = 0;
  std::uint64_t cost_total = 0;
  std::optional<bool> baseline_match;
  std::int64_t elapsed_ns = 0;
};

struct EngineTotals {
  std::uint64_t steps = 0;
  std::uint64_t applied = 0;
  std::uint64_t rejected = 0;
  std::uint64_t flips = 0;
  std::uint64_t adds = 0;
  std::uint64_t deletes = 0;
  std::uint64_t na_evaluations = 0;
  std::uint64_t verify_calls = 0;
  // Container mutations performed by vertex operations; constant per op by
  // construction, counted so tests can hold the line.
  std::uint64_t vertex_structure_touches = 0;
};

// Maintains graph, agreement state, and clustering under a stream of
// operations, keeping the clustering identical (as a partition) to what the
// from-scratch clusterer would output on the current graph. A closed
// neighborhood convention forces the safe update path, since the
// incremental shortcuts assume open neighborhoods.
class Engine {
 public:
  Engine(SignedGraph initial, const EngineConfig& config);

  // Applies one operation. Invalid operations are reported as rejected and
  // leave graph, state, and clustering bit-identical; processing continues.
  StepReport Apply(const Operation& op);

  // Read-only snapshots (copies, safe to keep across later operations).
  SignedGraph GraphSnapshot() const { return graph_; }
  AgreementState StateSnapshot() const { return state_; }
  Clustering ClusteringSnapshot() const { return clustering_; }

  const EngineConfig& config() const { return config_; }
  const EngineTotals& totals() const { return totals_; }
  std::uint64_t step() const { return t_; }

 private:
  StepReport Reject(StepReport r, const std::string& reason);
  void FinishReport(StepReport& r) const;

  EngineConfig config_;
  SignedGraph graph_;
  AgreementState state_;
  Clustering clustering_;
  EngineTotals totals_;
  std::uint64_t t_ = 0;
};

}  // namespace dyncc

#endif  // DYNCC_ENGINE_H_
