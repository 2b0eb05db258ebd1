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

#include "dyncc/harness.h"

#include <algorithm>
#include <chrono>

namespace dyncc {

SignedGraph GenPlanted(const GeneratorParams& params) {
  SignedGraph g;
  for (VertexId v = 1; v <= params.n; ++v) g.AddVertex(v);
  if (params.n < 2) return g;
  SplitMix64 rng(params.seed);
  std::size_t k = std::max<std::size_t>(params.k, 1);
  std::size_t block = (params.n + k - 1) / k;
  auto group = [&](VertexId v) { return (v - 1) / block; };
  for (VertexId u = 1; u <= params.n; ++u) {
    for (VertexId v = u + 1; v <= params.n; ++v) {
      const Probability& prob = group(u) == group(v) ? params.p : params.q;
      if (rng.Bernoulli(prob)) g.FlipEdge(u, v);
    }
  }
  return g;
}

std::vector<Operation> GenOps(const GeneratorParams& params,
                              const SignedGraph& g0) {
  std::vector<Operation> ops;
  ops.reserve(params.op_count);
  SignedGraph sim = g0;
  SplitMix64 rng(params.seed ^ 0x6f70732d73747265ull);  // distinct stream
  VertexId fresh = 1;
  for (VertexId v : sim.Vertices()) fresh = std::max(fresh, v + 1);
  unsigned wf = params.mix.flip, wa = params.mix.add, wd = params.mix.del;
  if (wf + wa + wd == 0) wf = 1;

  auto pick_vertex = [&]() {
    std::vector<VertexId> vs = sim.Vertices();
    return vs[rng.NextBelow(vs.size())];
  };

  while (ops.size() < params.op_count) {
    std::uint64_t r = rng.NextBelow(wf + wa + wd);
    bool want_flip = r < wf;
    bool want_del = r >= wf + wa;
    if (want_flip && sim.NumVertices() >= 2) {
      std::vector<VertexId> vs = sim.Vertices();
      std::size_t a = rng.NextBelow(vs.size());
      std::size_t b = rng.NextBelow(vs.size() - 1);
      if (b >= a) ++b;
      ops.push_back(Operation::FlipSign(vs[a], vs[b]));
      sim.FlipEdge(vs[a], vs[b]);
    } else if (want_del && sim.NumVertices() >= 1) {
      VertexId victim = pick_vertex();
      std::vector<VertexId> nbrs = sim.PositiveNeighbors(victim);
      for (VertexId w : nbrs) {
        if (ops.size() == params.op_count) return ops;
        ops.push_back(Operation::FlipSign(victim, w));
        sim.FlipEdge(victim, w);
      }
      if (ops.size() == params.op_count) return ops;
      ops.push_back(Operation::DeleteVertex(victim));
      sim.DeleteVertex(victim);
    } else {
      ops.push_back(Operation::AddVertex(fresh));
      sim.AddVertex(fresh++);
    }
  }
  return ops;
}

CheckOutcome CheckStep(const SignedGraph& g, const Epsilon& eps,
                       const Clustering& online, NeighborhoodMode mode) {
  CheckOutcome out;
  out.baseline = CorrelationClustering(g, eps, mode);
  out.match = SamePartition(online, out.baseline);
  if (!out.match) {
    std::vector<VertexId> vs = g.Vertices();
    for (std::size_t i = 0; i < vs.size() && out.diff_u == out.diff_v; ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        bool same_online =
            online.assignment.at(vs[i]) == online.assignment.at(vs[j]);
        bool same_base = out.baseline.assignment.at(vs[i]) ==
                         out.baseline.assignment.at(vs[j]);
        if (same_online != same_base) {
          out.diff_u = vs[i];
          out.diff_v = vs[j];
          break;
        }
      }
    }
  }
  return out;
}

OptResult BruteForceOpt(const SignedGraph& g) {
  std::vector<VertexId> vs = g.Vertices();
  std::size_t n = vs.size();
  if (n > 11)
    throw Error(ErrorCode::kTooLarge,
                "exhaustive search capped at 11 vertices, got " +
                    std::to_string(n));
  OptResult best;
  if (n == 0) return best;

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      adj[i][j] = g.IsPositiveEdge(vs[i], vs[j]);

  auto canon = [&](const std::vector<std::size_t>& a) {
    // Restricted growth strings label groups by first occurrence, so group
    // order is already ascending-minimum; members come out ascending.
    std::size_t groups = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<std::vector<VertexId>> part(groups);
    for (std::size_t i = 0; i < n; ++i) part[a[i]].push_back(vs[i]);
    return part;
  };

  std::vector<std::size_t> a(n, 0);
  bool first = true;
  while (true) {
    CostBreakdown cost;
    std::uint64_t internal_pos = 0, internal_pairs = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        bool same = a[i] == a[j];
        if (same) ++internal_pairs;
        if (adj[i][j] && same) ++internal_pos;
        if (adj[i][j] && !same) ++cost.positive_cut;
      }
    }
    cost.negative_internal = internal_pairs - internal_pos;
    cost.total = cost.positive_cut + cost.negative_internal;

    if (first || cost.total < best.cost.total) {
      best.cost = cost;
      best.partition = canon(a);
      first = false;
    } else if (cost.total == best.cost.total) {
      auto cand = canon(a);
      if (cand < best.partition) {
        best.cost = cost;
        best.partition = std::move(cand);
      }
    }

    // Next restricted growth string: a[i] may rise to 1 + max(a[0..i)).
    std::size_t i = n;
    while (i-- > 1) {
      std::size_t cap = *std::max_element(a.begin(), a.begin() + i) + 1;
      if (a[i] < cap) {
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
        break;
      }
      if (i == 1) return best;
    }
    if (n == 1) return best;
  }
}

NeighborCategory ClassifyNeighbor(const SignedGraph& pre, VertexId u,
                                  VertexId v, VertexId w) {
  if (w == u || w == v) return NeighborCategory::kEndpoint;
  bool at_u = pre.IsPositiveEdge(u, w);
  bool at_v = pre.IsPositiveEdge(v, w);
  if (at_u && at_v) return NeighborCategory::kCommon;
  if (at_u) return NeighborCategory::kOnlyU;
  if (at_v) return NeighborCategory::kOnlyV;
  return NeighborCategory::kOutside;
}

int PredictedSymDiffDelta(NeighborCategory cat, FlipDirection dir) {
  int sign = dir == FlipDirection::kNegativeToPositive ? 1 : -1;
  switch (cat) {
    case NeighborCategory::kCommon:
      return -sign;
    case NeighborCategory::kOnlyU:
    case NeighborCategory::kOnlyV:
      return sign;
    case NeighborCategory::kEndpoint:
      return 2 * sign;
    case NeighborCategory::kOutside:
      return 0;
  }
  return 0;
}

std::optional<NaRelation> PredictedNaRelation(const SignedGraph& pre,
                                              VertexId u, VertexId v,
                                              FlipDirection dir, VertexId x,
                                              VertexId w) {
  if (x != u && x != v) return std::nullopt;
  NeighborCategory cat = ClassifyNeighbor(pre, u, v, w);
  bool gain = dir == FlipDirection::kNegativeToPositive;
  if (cat == NeighborCategory::kCommon)
    return gain ? NaRelation::kDecreasesOrStays : NaRelation::kStrictlyIncreases;
  bool exclusive_at_x = (x == u && cat == NeighborCategory::kOnlyU) ||
                        (x == v && cat == NeighborCategory::kOnlyV);
  if (!exclusive_at_x) return std::nullopt;

  std::size_t deg_x = pre.PositiveDegree(x);
  std::size_t deg_w = pre.PositiveDegree(w);
  std::size_t threshold = SymDiffSize(pre, x, w);
  if (gain) {
    if (deg_x < deg_w) return NaRelation::kStrictlyIncreases;
    if (threshold < deg_x) return NaRelation::kStrictlyIncreases;
    if (threshold == deg_x) return NaRelation::kStays;
    return NaRelation::kStrictlyDecreases;
  }
  if (deg_x <= deg_w) return NaRelation::kStrictlyDecreases;
  if (threshold < deg_x) return NaRelation::kStrictlyDecreases;
  if (threshold == deg_x) return NaRelation::kStays;
  return NaRelation::kStrictlyIncreases;
}

std::optional<bool> PredictedStableAgreement(const SignedGraph& pre,
                                             VertexId u, VertexId v,
                                             FlipDirection dir, VertexId x,
                                             VertexId y, bool agrees_pre) {
  bool x_is_endpoint = x == u || x == v;
  bool y_is_endpoint = y == u || y == v;
  if (!x_is_endpoint && !y_is_endpoint)
    return agrees_pre;  // nothing about either neighborhood changes
  if (x_is_endpoint && y_is_endpoint) return std::nullopt;  // the pair itself
  if (!x_is_endpoint) std::swap(x, y);

  auto rel = PredictedNaRelation(pre, u, v, dir, x, y);
  if (!rel) return std::nullopt;
  if (agrees_pre &&
      (*rel == NaRelation::kStrictlyDecreases || *rel == NaRelation::kStays ||
       *rel == NaRelation::kDecreasesOrStays))
    return true;
  if (!agrees_pre && (*rel == NaRelation::kStrictlyIncreases ||
                      *rel == NaRelation::kStays))
    return false;
  return std::nullopt;
}

bool IsEpsilonCriticalEdge(const SignedGraph& g, const Epsilon& eps,
                           VertexId u, VertexId v, NeighborhoodMode mode) {
  if (!g.IsPositiveEdge(u, v))
    throw Error(ErrorCode::kEdgeNotPositive,
                "edge {" + std::to_string(u) + "," + std::to_string(v) +
                    "} is not a positive edge");
  SignedGraph removed = g;
  removed.FlipEdge(u, v);
  return !(CanonicalPartition(CorrelationClustering(g, eps, mode)) ==
           CanonicalPartition(CorrelationClustering(removed, eps, mode)));
}

bool IsEpsilonCriticalVertex(const SignedGraph& g, const Epsilon& eps,
                             VertexId v, NeighborhoodMode mode) {
  auto before = CanonicalPartition(CorrelationClustering(g, eps, mode));
  // Drop v from the original partition.
  for (auto it = before.begin(); it != before.end(); ++it) {
    auto pos = std::find(it->begin(), it->end(), v);
    if (pos == it->end()) continue;
    it->erase(pos);
    if (it->empty()) before.erase(it);
    break;
  }
  std::sort(before.begin(), before.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  SignedGraph removed = g;
  for (VertexId w : std::vector<VertexId>(removed.PositiveNeighbors(v)))
    removed.FlipEdge(v, w);
  removed.DeleteVertex(v);
  auto after = CanonicalPartition(CorrelationClustering(removed, eps, mode));
  return before != after;
}

ExperimentReport DriveOps(const SignedGraph& g0,
                          const std::vector<Operation>& ops,
                          const EngineConfig& config, bool check,
                          std::size_t witness_cap) {
  ExperimentReport report;
  auto start = std::chrono::steady_clock::now();
  Engine engine(g0, config);
  report.initial_vertices = g0.NumVertices();
  report.initial_edges = g0.NumPositiveEdges();
  {
    Clustering c0 = engine.ClusteringSnapshot();
    report.initial_clusters = c0.clusters.size();
    report.initial_cost = ClusteringCost(g0, c0).total;
  }
  report.steps.reserve(ops.size());
  for (const Operation& op : ops) {
    StepReport r = engine.Apply(op);
    if (check) {
      SignedGraph g = engine.GraphSnapshot();
      Clustering online = engine.ClusteringSnapshot();
      CheckOutcome outcome =
          CheckStep(g, config.eps, online, config.neighborhood);
      r.baseline_match = outcome.match;
      if (!outcome.match) {
        ++report.totals.mismatches;
        report.diverged = true;
        if (report.witnesses.size() < witness_cap) {
          DivergenceWitness w;
          w.t = r.t;
          w.op = op;
          w.online = CanonicalPartition(online);
          w.baseline = CanonicalPartition(outcome.baseline);
          w.diff_u = outcome.diff_u;
          w.diff_v = outcome.diff_v;
          report.witnesses.push_back(std::move(w));
        }
      }
    }
    report.totals.na_evaluations += r.na_evaluations;
    report.totals.verify_calls += r.verify_calls;
    if (r.applied)
      ++report.totals.applied;
    else
      ++report.totals.rejected;
    report.steps.push_back(std::move(r));
  }
  report.totals.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  return report;
}

ExperimentReport RunExperiment(const ExperimentConfig& config) {
  SignedGraph g0 = GenPlanted(config.gen);
  std::vector<Operation> ops = GenOps(config.gen, g0);
  return DriveOps(g0, ops, config.engine, config.check);
}

}  // namespace dyncc
