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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "dyncc/harness.h"
#include "test_support.h"

using namespace dyncc;
using namespace dyncc_test;

namespace {

Clustering MakeClustering(const std::vector<std::vector<VertexId>>& groups) {
  Clustering c;
  ClusterId id = 0;
  for (const auto& members : groups) {
    c.clusters[id] = members;
    for (VertexId v : members) c.assignment[v] = id;
    ++id;
  }
  c.next_id = id;
  return c;
}

GeneratorParams Params(std::size_t n, std::size_t k, std::uint64_t seed,
                       std::size_t op_count = 0) {
  GeneratorParams params;
  params.n = n;
  params.k = k;
  params.p = Probability(1, 2);
  params.q = Probability(1, 10);
  params.op_count = op_count;
  params.seed = seed;
  return params;
}

}  // namespace

TEST_CASE("planted instances are reproducible and block-structured") {
  GeneratorParams params = Params(6, 2, 42);
  CHECK(GenPlanted(params) == GenPlanted(params));

  params.p = Probability(1, 1);
  params.q = Probability(0, 1);
  SignedGraph g = GenPlanted(params);
  // Blocks {1,2,3} and {4,5,6}: complete inside, empty across.
  CHECK(g.NumPositiveEdges() == 6);
  for (VertexId u : {1, 2, 3})
    for (VertexId v : {4, 5, 6}) CHECK_FALSE(g.IsPositiveEdge(u, v));
  CHECK(g.IsPositiveEdge(1, 2));
  CHECK(g.IsPositiveEdge(4, 6));

  // Uneven split: ceil(5/2) = 3 puts {1,2,3} and {4,5} together.
  params.n = 5;
  SignedGraph h = GenPlanted(params);
  CHECK(h.IsPositiveEdge(4, 5));
  CHECK_FALSE(h.IsPositiveEdge(3, 4));

  params.p = Probability(0, 1);
  CHECK(GenPlanted(params).NumPositiveEdges() == 0);
  params.n = 0;
  CHECK(GenPlanted(params).NumVertices() == 0);
}

TEST_CASE("generated operation streams are deterministic and valid") {
  for (std::uint64_t seed : {7ull, 8ull, 9ull}) {
    GeneratorParams params = Params(12, 3, seed, 80);
    SignedGraph g0 = GenPlanted(params);
    std::vector<Operation> ops = GenOps(params, g0);
    CHECK(ops.size() == 80);
    CHECK(ops == GenOps(params, g0));

    EngineConfig config;
    config.eps = Epsilon(7, 10);
    ExperimentReport report = DriveOps(g0, ops, config, /*check=*/false);
    CHECK(report.totals.rejected == 0);  // valid by construction
    CHECK(report.totals.applied == 80);
  }
}

TEST_CASE("delete-heavy streams clear edges before removing vertices") {
  GeneratorParams params = Params(8, 2, 5, 40);
  params.mix = {0, 0, 1};  // deletions only (falls back to adds when empty)
  SignedGraph g0 = GenPlanted(params);
  std::vector<Operation> ops = GenOps(params, g0);
  EngineConfig config;
  config.eps = Epsilon(7, 10);
  CHECK(DriveOps(g0, ops, config, false).totals.rejected == 0);
  bool saw_delete = false;
  for (const Operation& op : ops)
    saw_delete |= op.kind == Operation::Kind::kDeleteVertex;
  CHECK(saw_delete);
}

TEST_CASE("add-only streams mint fresh ascending ids") {
  GeneratorParams params = Params(4, 1, 11, 6);
  params.mix = {0, 1, 0};
  SignedGraph g0 = GenPlanted(params);
  std::vector<Operation> ops = GenOps(params, g0);
  VertexId expect = 5;
  for (const Operation& op : ops) {
    CHECK(op.kind == Operation::Kind::kAddVertex);
    CHECK(op.u == expect++);
  }
}

TEST_CASE("step checking matches itself and pinpoints the first difference") {
  SignedGraph g = MakeP3();
  Epsilon eps(7, 10);
  Clustering base = CorrelationClustering(g, eps);
  CheckOutcome ok = CheckStep(g, eps, base);
  CHECK(ok.match);

  Clustering doctored = MakeClustering({{1, 2}, {3}});
  CheckOutcome bad = CheckStep(g, eps, doctored);
  CHECK_FALSE(bad.match);
  CHECK(bad.diff_u == 1);
  CHECK(bad.diff_v == 2);  // online says together, the oracle says apart
  CHECK(SamePartition(bad.baseline, base));
}

TEST_CASE("exhaustive optimum on the fixtures") {
  OptResult p3 = BruteForceOpt(MakeP3());
  CHECK(p3.cost.total == 1);
  // Three partitions tie at cost 1; the lexicographically smallest canonical
  // form wins.
  CHECK(p3.partition == std::vector<std::vector<VertexId>>{{1}, {2, 3}});

  OptResult k4 = BruteForceOpt(MakeK4());
  CHECK(k4.cost == CostBreakdown{0, 0, 0});
  CHECK(k4.partition == std::vector<std::vector<VertexId>>{{1, 2, 3, 4}});

  OptResult k4m = BruteForceOpt(MakeK4m());
  CHECK(k4m.cost.total == 1);
  CHECK(k4m.partition == std::vector<std::vector<VertexId>>{{1, 2, 3, 4}});

  CHECK(BruteForceOpt(MakeEmpty()).cost.total == 0);
  CHECK(BruteForceOpt(MakeEmpty()).partition.empty());

  SignedGraph one;
  one.AddVertex(3);
  CHECK(BruteForceOpt(one).partition ==
        std::vector<std::vector<VertexId>>{{3}});

  SignedGraph big;
  for (VertexId v = 1; v <= 12; ++v) big.AddVertex(v);
  CHECK_THROWS_AS(BruteForceOpt(big), Error);
  try {
    BruteForceOpt(big);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooLarge);
  }
}

TEST_CASE("the optimum never loses to any partition we can build") {
  for (std::uint64_t seed = 1200; seed < 1220; ++seed) {
    SignedGraph g = RandomGraph(7, seed);
    OptResult opt = BruteForceOpt(g);
    // Reported cost is self-consistent.
    Clustering as_clustering = MakeClustering(opt.partition);
    CHECK(ClusteringCost(g, as_clustering) == opt.cost);
    // The from-scratch clusterer can only do worse or equal.
    for (auto num : {std::uint64_t{2}, std::uint64_t{7}}) {
      Clustering base = CorrelationClustering(g, Epsilon(num, 10));
      CHECK(ClusteringCost(g, base).total >= opt.cost.total);
    }
    // Singletons and the whole set are candidate partitions too.
    std::vector<std::vector<VertexId>> singles, whole{std::vector<VertexId>{}};
    for (VertexId v = 1; v <= 7; ++v) {
      singles.push_back({v});
      whole[0].push_back(v);
    }
    CHECK(NaivePairCost(g, MakeClustering(singles)) >= opt.cost.total);
    CHECK(NaivePairCost(g, MakeClustering(whole)) >= opt.cost.total);
  }
}

TEST_CASE("neighbor classification around a flip") {
  SignedGraph g;
  for (VertexId v = 1; v <= 5; ++v) g.AddVertex(v);
  g.FlipEdge(1, 3);
  g.FlipEdge(2, 4);
  CHECK(ClassifyNeighbor(g, 1, 2, 1) == NeighborCategory::kEndpoint);
  CHECK(ClassifyNeighbor(g, 1, 2, 2) == NeighborCategory::kEndpoint);
  CHECK(ClassifyNeighbor(g, 1, 2, 3) == NeighborCategory::kOnlyU);
  CHECK(ClassifyNeighbor(g, 1, 2, 4) == NeighborCategory::kOnlyV);
  CHECK(ClassifyNeighbor(g, 1, 2, 5) == NeighborCategory::kOutside);
  CHECK(ClassifyNeighbor(MakeK4m(), 1, 2, 3) == NeighborCategory::kCommon);
}

TEST_CASE("predicted symmetric-difference shifts, frozen values") {
  // Gaining {1,2} on the near-clique: common neighbor 3 moves 3 -> 2.
  SignedGraph pre = MakeK4m();
  CHECK(SymDiffSize(pre, 1, 3) == 3);
  CHECK(PredictedSymDiffDelta(NeighborCategory::kCommon,
                              FlipDirection::kNegativeToPositive) == -1);
  SignedGraph post = MakeK4();
  CHECK(SymDiffSize(post, 1, 3) == 2);
  // The endpoints themselves move two apart (each enters the other's list).
  CHECK(SymDiffSize(pre, 1, 2) == 0);
  CHECK(SymDiffSize(post, 1, 2) == 2);
  CHECK(PredictedSymDiffDelta(NeighborCategory::kEndpoint,
                              FlipDirection::kNegativeToPositive) == 2);
  CHECK(PredictedSymDiffDelta(NeighborCategory::kEndpoint,
                              FlipDirection::kPositiveToNegative) == -2);
  CHECK(PredictedSymDiffDelta(NeighborCategory::kOnlyU,
                              FlipDirection::kPositiveToNegative) == -1);
  CHECK(PredictedSymDiffDelta(NeighborCategory::kOutside,
                              FlipDirection::kNegativeToPositive) == 0);
}

TEST_CASE("predicted shifts match ground truth on random flips") {
  for (std::uint64_t seed = 1300; seed < 1320; ++seed) {
    SignedGraph pre = RandomGraph(8, seed);
    SplitMix64 rng(seed ^ 0x77);
    VertexId u = 1 + rng.NextBelow(8);
    VertexId v = 1 + rng.NextBelow(7);
    if (v >= u) ++v;
    FlipDirection dir = pre.IsPositiveEdge(u, v)
                            ? FlipDirection::kPositiveToNegative
                            : FlipDirection::kNegativeToPositive;
    SignedGraph post = pre;
    post.FlipEdge(u, v);

    auto delta = [&](VertexId a, VertexId b) {
      return static_cast<int>(NaiveSymDiffSize(post, a, b)) -
             static_cast<int>(NaiveSymDiffSize(pre, a, b));
    };
    CHECK(delta(u, v) ==
          PredictedSymDiffDelta(NeighborCategory::kEndpoint, dir));
    for (VertexId w = 1; w <= 8; ++w) {
      if (w == u || w == v) continue;
      NeighborCategory cat = ClassifyNeighbor(pre, u, v, w);
      switch (cat) {
        case NeighborCategory::kCommon:
          CHECK(delta(u, w) == PredictedSymDiffDelta(cat, dir));
          CHECK(delta(v, w) == PredictedSymDiffDelta(cat, dir));
          break;
        case NeighborCategory::kOnlyU:
          CHECK(delta(u, w) == PredictedSymDiffDelta(cat, dir));
          break;
        case NeighborCategory::kOnlyV:
          CHECK(delta(v, w) == PredictedSymDiffDelta(cat, dir));
          break;
        case NeighborCategory::kOutside:
          // Pairs away from both endpoints never move.
          for (VertexId y = 1; y <= 8; ++y)
            if (y != w && y != u && y != v) CHECK(delta(w, y) == 0);
          break;
        case NeighborCategory::kEndpoint:
          break;
      }
    }
  }
}

TEST_CASE("predicted measure movement matches ground truth") {
  for (std::uint64_t seed = 1400; seed < 1430; ++seed) {
    SignedGraph pre = RandomGraph(8, seed);
    SplitMix64 rng(seed ^ 0x88);
    VertexId u = 1 + rng.NextBelow(8);
    VertexId v = 1 + rng.NextBelow(7);
    if (v >= u) ++v;
    FlipDirection dir = pre.IsPositiveEdge(u, v)
                            ? FlipDirection::kPositiveToNegative
                            : FlipDirection::kNegativeToPositive;
    SignedGraph post = pre;
    post.FlipEdge(u, v);

    CHECK_FALSE(
        PredictedNaRelation(pre, u, v, dir, /*x=*/9, /*w=*/1).has_value());
    for (VertexId x : {u, v}) {
      for (VertexId w : pre.PositiveNeighbors(x)) {
        if (w == u || w == v) continue;
        auto rel = PredictedNaRelation(pre, u, v, dir, x, w);
        NeighborCategory cat = ClassifyNeighbor(pre, u, v, w);
        bool exclusive_at_x =
            (x == u && cat == NeighborCategory::kOnlyU) ||
            (x == v && cat == NeighborCategory::kOnlyV);
        if (cat != NeighborCategory::kCommon && !exclusive_at_x) {
          CHECK_FALSE(rel.has_value());
          continue;
        }
        REQUIRE(rel.has_value());
        Ratio before = NonAgreement(pre, x, w);
        Ratio after = NonAgreement(post, x, w);
        switch (*rel) {
          case NaRelation::kStrictlyDecreases:
            CHECK(after < before);
            break;
          case NaRelation::kStays:
            CHECK(after == before);
            break;
          case NaRelation::kStrictlyIncreases:
            CHECK(after > before);
            break;
          case NaRelation::kDecreasesOrStays:
            CHECK(after <= before);
            break;
        }
      }
    }
  }
}

TEST_CASE("guaranteed post-flip statuses are never wrong") {
  Epsilon eps(3, 5);
  int pinned = 0;
  for (std::uint64_t seed = 1500; seed < 1530; ++seed) {
    SignedGraph pre = RandomGraph(8, seed);
    SplitMix64 rng(seed ^ 0x99);
    VertexId u = 1 + rng.NextBelow(8);
    VertexId v = 1 + rng.NextBelow(7);
    if (v >= u) ++v;
    FlipDirection dir = pre.IsPositiveEdge(u, v)
                            ? FlipDirection::kPositiveToNegative
                            : FlipDirection::kNegativeToPositive;
    SignedGraph post = pre;
    post.FlipEdge(u, v);

    for (const EdgeKey& e : pre.PositiveEdges()) {
      if (!post.IsPositiveEdge(e.a, e.b)) continue;  // the removed pair
      bool agrees_pre = InEpsilonAgreement(pre, e.a, e.b, eps);
      auto predicted =
          PredictedStableAgreement(pre, u, v, dir, e.a, e.b, agrees_pre);
      if (!predicted.has_value()) continue;
      ++pinned;
      CHECK(*predicted == InEpsilonAgreement(post, e.a, e.b, eps));
    }
  }
  CHECK(pinned > 0);  // the suite actually exercised the guarantees
}

TEST_CASE("edge criticality on fixtures") {
  Epsilon eps(7, 10);
  CHECK(IsEpsilonCriticalEdge(MakeK4(), eps, 1, 2));  // clique shatters
  CHECK_FALSE(IsEpsilonCriticalEdge(MakeP3(), eps, 1, 2));  // singletons stay
  CHECK_THROWS_AS(IsEpsilonCriticalEdge(MakeK4m(), eps, 1, 2), Error);
}

TEST_CASE("vertex criticality on fixtures") {
  Epsilon eps(7, 10);
  // Dropping a clique vertex shatters the rest into singletons.
  CHECK(IsEpsilonCriticalVertex(MakeK4(), eps, 1));
  // The near-clique is singletons before and after removing vertex 3.
  CHECK_FALSE(IsEpsilonCriticalVertex(MakeK4m(), eps, 3));
  SignedGraph one;
  one.AddVertex(1);
  CHECK_FALSE(IsEpsilonCriticalVertex(one, eps, 1));
}

TEST_CASE("criticality agrees with what the engine actually does") {
  Epsilon eps(7, 10);
  for (std::uint64_t seed = 1600; seed < 1620; ++seed) {
    SignedGraph g = RandomGraph(8, seed);
    EngineConfig config;
    config.eps = eps;
    Engine engine(g, config);
    SplitMix64 rng(seed ^ 0xcc);
    for (int step = 0; step < 20; ++step) {
      VertexId u = 1 + rng.NextBelow(8);
      VertexId v = 1 + rng.NextBelow(7);
      if (v >= u) ++v;
      bool was_positive = g.IsPositiveEdge(u, v);
      Clustering before = engine.ClusteringSnapshot();
      engine.Apply(Operation::FlipSign(u, v));
      SignedGraph post = engine.GraphSnapshot();
      bool changed = !SamePartition(before, engine.ClusteringSnapshot());
      // Criticality is judged on whichever side of the flip holds the
      // positive edge; either way it asks "does removing it matter".
      if (was_positive)
        CHECK(IsEpsilonCriticalEdge(g, eps, u, v) == changed);
      else
        CHECK(IsEpsilonCriticalEdge(post, eps, u, v) == changed);
      g = post;
    }
  }
}

TEST_CASE("experiment runs are reproducible and clean by default") {
  ExperimentConfig config;
  config.gen = Params(14, 3, 77, 60);
  config.engine.eps = Epsilon(7, 10);
  config.check = true;
  ExperimentReport a = RunExperiment(config);
  ExperimentReport b = RunExperiment(config);
  CHECK(a.steps.size() == 60);
  CHECK_FALSE(a.diverged);
  CHECK(a.totals.mismatches == 0);
  CHECK(a.witnesses.empty());
  CHECK(a.totals.applied + a.totals.rejected == 60);
  CHECK(a.initial_vertices == 14);
  // Bit-for-bit reproducibility of everything but wall-clock time.
  CHECK(a.totals.na_evaluations == b.totals.na_evaluations);
  CHECK(a.totals.verify_calls == b.totals.verify_calls);
  REQUIRE(b.steps.size() == a.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    CHECK(a.steps[i].op == b.steps[i].op);
    CHECK(a.steps[i].applied == b.steps[i].applied);
    CHECK(a.steps[i].cluster_count == b.steps[i].cluster_count);
    CHECK(a.steps[i].cost_total == b.steps[i].cost_total);
    CHECK(a.steps[i].na_evaluations == b.steps[i].na_evaluations);
  }
  for (const StepReport& r : a.steps) {
    REQUIRE(r.baseline_match.has_value());
    CHECK(*r.baseline_match);
  }
}
