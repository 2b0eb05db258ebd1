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

#include "dyncc/engine.h"

#include <chrono>

namespace dyncc {

Engine::Engine(SignedGraph initial, const EngineConfig& config)
    : config_(config), graph_(std::move(initial)) {
  if (config_.neighborhood == NeighborhoodMode::kClosed)
    config_.pruning = PruningMode::kSafe;
  state_ = ComputeAgreementState(graph_, config_.eps, config_.neighborhood);
  clustering_ = ConnectedComponents(
      graph_,
      [this](VertexId a, VertexId b) {
        return SparsifiedEdgePresent(graph_, state_, a, b);
      },
      /*first_id=*/0);
}

StepReport Engine::Reject(StepReport r, const std::string& reason) {
  r.applied = false;
  r.reject_reason = reason;
  ++totals_.rejected;
  FinishReport(r);
  return r;
}

void Engine::FinishReport(StepReport& r) const {
  r.cluster_count = clustering_.clusters.size();
  r.cost_total = ClusteringCost(graph_, clustering_).total;
}

StepReport Engine::Apply(const Operation& op) {
  StepReport r;
  r.t = ++t_;
  r.op = op;
  ++totals_.steps;
  auto start = std::chrono::steady_clock::now();
  auto stamp = [&] {
    r.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  };

  switch (op.kind) {
    case Operation::Kind::kFlipSign: {
      if (op.u == op.v) {
        stamp();
        return Reject(std::move(r), "self loop");
      }
      if (!graph_.Contains(op.u) || !graph_.Contains(op.v)) {
        stamp();
        return Reject(std::move(r), "vertex not found");
      }
      FlipSnapshot snap = TakeFlipSnapshot(graph_, state_, op.u, op.v);
      graph_.FlipEdge(op.u, op.v);
      ApplyFlipUpdate(graph_, state_, config_.eps, snap, config_.pruning,
                      config_.neighborhood);
      ChangeSet changes = CollectChanges(graph_, state_, snap);
      std::vector<VertexId> frontier =
          ComputeFrontier(changes, config_.maintenance);
      clustering_ =
          MaintainWithFrontier(graph_, state_, clustering_, frontier);
      r.na_evaluations = snap.work.na_evaluations;
      r.verify_calls = snap.work.verify_calls;
      r.s_size = changes.region.size();
      r.f_size = frontier.size();
      totals_.na_evaluations += snap.work.na_evaluations;
      totals_.verify_calls += snap.work.verify_calls;
      ++totals_.flips;
      break;
    }
    case Operation::Kind::kAddVertex: {
      if (graph_.Contains(op.u)) {
        stamp();
        return Reject(std::move(r), "duplicate vertex");
      }
      graph_.AddVertex(op.u);
      state_.agree_cnt[op.u] = 0;
      state_.is_light[op.u] = true;  // degree zero
      AddSingletonInPlace(clustering_, op.u);
      totals_.vertex_structure_touches += 5;
      ++totals_.adds;
      break;
    }
    case Operation::Kind::kDeleteVertex: {
      if (!graph_.Contains(op.u)) {
        stamp();
        return Reject(std::move(r), "vertex not found");
      }
      if (graph_.PositiveDegree(op.u) != 0) {
        stamp();
        return Reject(std::move(r), "has positive edges");
      }
      graph_.DeleteVertex(op.u);
      state_.agree_cnt.erase(op.u);
      state_.is_light.erase(op.u);
      RemoveSingletonInPlace(clustering_, op.u);
      totals_.vertex_structure_touches += 5;
      ++totals_.deletes;
      break;
    }
  }
  ++totals_.applied;
  r.applied = true;
  FinishReport(r);
  stamp();
  return r;
}

}  // namespace dyncc
