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

#include <vector>

#include "dyncc/dynamic_state.h"
#include "test_support.h"

using namespace dyncc;
using namespace dyncc_test;

namespace {

// One maintained flip: snapshot, structural flip, incremental update.
FlipSnapshot StepFlip(SignedGraph& g, AgreementState& state, const Epsilon& eps,
                      VertexId u, VertexId v,
                      PruningMode pruning = PruningMode::kCorrected) {
  FlipSnapshot snap = TakeFlipSnapshot(g, state, u, v);
  g.FlipEdge(u, v);
  ApplyFlipUpdate(g, state, eps, snap, pruning);
  return snap;
}

}  // namespace

TEST_CASE("snapshot captures the pre-flip world") {
  SignedGraph g = MakeK4m();
  AgreementState state = ComputeAgreementState(g, Epsilon(7, 10));
  FlipSnapshot snap = TakeFlipSnapshot(g, state, 2, 1);
  CHECK(snap.u == 2);
  CHECK(snap.v == 1);
  CHECK(snap.direction == FlipDirection::kNegativeToPositive);
  CHECK(snap.pre_neighbors_u == std::vector<VertexId>{3, 4});
  CHECK(snap.pre_neighbors_v == std::vector<VertexId>{3, 4});
  CHECK(snap.pre_deg_u == 2);
  CHECK(snap.pre_deg_v == 2);
  CHECK(snap.region == std::vector<VertexId>{1, 2, 3, 4});
  CHECK(snap.agree_before ==
        std::map<EdgeKey, bool>{{EdgeKey(1, 3), false},
                                {EdgeKey(1, 4), false},
                                {EdgeKey(2, 3), false},
                                {EdgeKey(2, 4), false}});
  CHECK(snap.lightness_before.size() == 4);
  CHECK(snap.lightness_before.at(3));

  SignedGraph k4 = MakeK4();
  AgreementState s4 = ComputeAgreementState(k4, Epsilon(7, 10));
  FlipSnapshot snap4 = TakeFlipSnapshot(k4, s4, 1, 2);
  CHECK(snap4.direction == FlipDirection::kPositiveToNegative);
  CHECK(snap4.agree_before.size() == 5);  // all K4 edges but {3,4}
  CHECK(snap4.agree_before.at(EdgeKey(1, 2)));

  CHECK_THROWS_AS(TakeFlipSnapshot(g, state, 3, 3), Error);
  CHECK_THROWS_AS(TakeFlipSnapshot(g, state, 3, 9), Error);
}

TEST_CASE("verifying one edge fixes its flag and both counts") {
  SignedGraph g = MakeK4m();
  AgreementState state = ComputeAgreementState(g, Epsilon(7, 10));
  g.FlipEdge(1, 2);  // structural change only; state is now stale
  state.agree[EdgeKey(1, 2)] = false;  // placeholder entry for the new edge

  WorkCounters work;
  VerifyEdge(g, state, Epsilon(7, 10), 1, 3, work);
  CHECK(state.agree.at(EdgeKey(1, 3)));  // 2/3 < 7/10 on the complete graph
  CHECK(state.agree_cnt.at(1) == 1);
  CHECK(state.agree_cnt.at(3) == 2);
  CHECK(work.na_evaluations == 1);
  CHECK(work.verify_calls == 1);

  // Re-verifying is idempotent: the flag already matches.
  VerifyEdge(g, state, Epsilon(7, 10), 1, 3, work);
  CHECK(state.agree_cnt.at(1) == 1);
  CHECK(state.agree_cnt.at(3) == 2);
  CHECK(work.verify_calls == 2);

  // A caller-supplied symmetric difference skips the evaluation pass.
  VerifyEdge(g, state, Epsilon(7, 10), 1, 4, work, /*known_sym_diff=*/2);
  CHECK(state.agree.at(EdgeKey(1, 4)));
  CHECK(work.na_evaluations == 2);  // unchanged by the known-diff call
  CHECK(work.verify_calls == 3);

  CHECK_THROWS_AS(VerifyEdge(g, state, Epsilon(7, 10), 1, 1, work), Error);
  SignedGraph h = MakeK4m();
  AgreementState hs = ComputeAgreementState(h, Epsilon(7, 10));
  WorkCounters hw;
  CHECK_THROWS_AS(VerifyEdge(h, hs, Epsilon(7, 10), 1, 2, hw), Error);
}

TEST_CASE("skip rule after gaining a positive edge") {
  auto in = [](std::size_t dx, std::size_t dw, std::size_t thr) {
    return PredicateInputs{dx, dw, thr};
  };
  // Agreeing edges re-check when the measure can rise.
  CHECK(NeedsVerifyAfterGain(true, in(3, 4, 3)));   // smaller endpoint degree
  CHECK(NeedsVerifyAfterGain(true, in(4, 3, 3)));   // pivot below degree
  CHECK_FALSE(NeedsVerifyAfterGain(true, in(4, 3, 4)));  // measure stays
  CHECK_FALSE(NeedsVerifyAfterGain(true, in(4, 3, 5)));  // measure falls
  CHECK_FALSE(NeedsVerifyAfterGain(true, in(4, 4, 4)));
  // Non-agreeing edges re-check when the measure can fall.
  CHECK(NeedsVerifyAfterGain(false, in(4, 3, 5)));
  CHECK(NeedsVerifyAfterGain(false, in(4, 4, 5)));
  CHECK_FALSE(NeedsVerifyAfterGain(false, in(3, 4, 5)));  // rises
  CHECK_FALSE(NeedsVerifyAfterGain(false, in(4, 3, 4)));  // stays
  CHECK_FALSE(NeedsVerifyAfterGain(false, in(4, 3, 3)));  // rises
}

TEST_CASE("skip rule after losing a positive edge") {
  auto in = [](std::size_t dx, std::size_t dw, std::size_t thr) {
    return PredicateInputs{dx, dw, thr};
  };
  for (bool corrected : {false, true}) {
    CHECK(NeedsVerifyAfterLoss(true, in(3, 4, 2), corrected));
    CHECK(NeedsVerifyAfterLoss(true, in(4, 3, 5), corrected));
    CHECK_FALSE(NeedsVerifyAfterLoss(true, in(4, 3, 4), corrected));
    CHECK_FALSE(NeedsVerifyAfterLoss(true, in(4, 3, 3), corrected));
    CHECK(NeedsVerifyAfterLoss(false, in(4, 3, 3), corrected));
    CHECK_FALSE(NeedsVerifyAfterLoss(false, in(4, 3, 5), corrected));
    CHECK_FALSE(NeedsVerifyAfterLoss(false, in(4, 3, 4), corrected));
  }
  // The published rule skips a non-agreeing edge whose endpoint degree does
  // not dominate, but with deg_x <= deg_w the measure strictly falls and can
  // cross into agreement; only the corrected rule re-checks it.
  CHECK(NeedsVerifyAfterLoss(false, in(3, 4, 2), true));
  CHECK_FALSE(NeedsVerifyAfterLoss(false, in(3, 4, 2), false));
  CHECK(NeedsVerifyAfterLoss(false, in(3, 3, 2), true));
  CHECK_FALSE(NeedsVerifyAfterLoss(false, in(3, 3, 2), false));
}

TEST_CASE("gaining the missing edge completes the clique state") {
  SignedGraph g = MakeK4m();
  AgreementState state = ComputeAgreementState(g, Epsilon(7, 10));
  FlipSnapshot snap = StepFlip(g, state, Epsilon(7, 10), 1, 2);
  CHECK(g == MakeK4());
  CHECK(state == ComputeAgreementState(MakeK4(), Epsilon(7, 10)));
  // Both endpoints see {3,4} as common neighbors and nothing exclusive:
  // four flag re-checks plus the new edge's own evaluation.
  CHECK(snap.work.na_evaluations == 5);
  CHECK(snap.work.verify_calls == 4);
}

TEST_CASE("losing an edge restores the sparse state") {
  SignedGraph g = MakeK4();
  AgreementState state = ComputeAgreementState(g, Epsilon(7, 10));
  FlipSnapshot snap = StepFlip(g, state, Epsilon(7, 10), 1, 2);
  CHECK(g == MakeK4m());
  CHECK(state == ComputeAgreementState(MakeK4m(), Epsilon(7, 10)));
  CHECK(snap.work.na_evaluations == 4);  // the four common-neighbor edges
  CHECK(snap.work.verify_calls == 4);
}

TEST_CASE("a first edge between isolated vertices never agrees") {
  SignedGraph g;
  g.AddVertex(1);
  g.AddVertex(2);
  AgreementState state = ComputeAgreementState(g, Epsilon(7, 10));
  FlipSnapshot snap = StepFlip(g, state, Epsilon(7, 10), 1, 2);
  // The two endpoints are each other's whole symmetric difference: 2/1.
  CHECK_FALSE(state.agree.at(EdgeKey(1, 2)));
  CHECK(state.agree_cnt.at(1) == 0);
  CHECK(state.is_light.at(1));
  CHECK(state.is_light.at(2));
  CHECK(snap.work.na_evaluations == 1);  // exactly the +1 of the work bound
  CHECK(snap.work.verify_calls == 0);
}

TEST_CASE("closing the path into a triangle leaves everyone non-agreeing") {
  SignedGraph g = MakeP3();
  AgreementState state = ComputeAgreementState(g, Epsilon(7, 10));
  StepFlip(g, state, Epsilon(7, 10), 1, 3);
  CHECK(state == ComputeAgreementState(g, Epsilon(7, 10)));
  for (const auto& [e, ok] : state.agree) CHECK_FALSE(ok);
  for (VertexId v : {1, 2, 3}) CHECK(state.is_light.at(v));
}

TEST_CASE("loose thresholds drain all counts when the hub edge flips") {
  // Triangle at eps = 11/10: every edge agrees (measure 1 < 11/10). Cutting
  // {1,2} leaves a path whose edges both fail, so all counts fall to zero.
  SignedGraph g;
  for (VertexId v : {1, 2, 3}) g.AddVertex(v);
  g.FlipEdge(1, 2);
  g.FlipEdge(1, 3);
  g.FlipEdge(2, 3);
  Epsilon eps(11, 10);
  AgreementState state = ComputeAgreementState(g, eps);
  CHECK(state.agree_cnt.at(1) == 2);
  CHECK(state.is_light.at(1));  // above-one thresholds keep everyone light

  StepFlip(g, state, eps, 1, 2);
  CHECK(state == ComputeAgreementState(g, eps));
  for (VertexId v : {1, 2, 3}) CHECK(state.agree_cnt.at(v) == 0);
}

TEST_CASE("update direction must match the graph") {
  SignedGraph g = MakeK4m();
  AgreementState state = ComputeAgreementState(g, Epsilon(7, 10));
  FlipSnapshot snap = TakeFlipSnapshot(g, state, 1, 2);
  // Graph not flipped yet: the edge is still negative.
  CHECK_THROWS_AS(
      UpdateNegativeToPositive(g, state, Epsilon(7, 10), snap), Error);
  try {
    UpdateNegativeToPositive(g, state, Epsilon(7, 10), snap);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEdgeNotPositive);
  }
  // Wrong-direction update for this snapshot.
  CHECK_THROWS_AS(
      UpdatePositiveToNegative(g, state, Epsilon(7, 10), snap), Error);
  try {
    UpdatePositiveToNegative(g, state, Epsilon(7, 10), snap);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEdgeNotNegative);
  }
}

TEST_CASE("incremental updates match a full recompute over random runs") {
  std::vector<Epsilon> epsilons = {Epsilon(2, 5), Epsilon(7, 10),
                                   Epsilon(1, 1), Epsilon(6, 5)};
  for (const Epsilon& eps : epsilons) {
    for (std::uint64_t seed = 700; seed < 712; ++seed) {
      SignedGraph g = RandomGraph(9, seed);
      AgreementState corrected = ComputeAgreementState(g, eps);
      SignedGraph gs = g;
      AgreementState safe = corrected;
      SplitMix64 rng(seed * 31 + eps.num);
      for (int step = 0; step < 60; ++step) {
        VertexId u = 1 + rng.NextBelow(9);
        VertexId v = 1 + rng.NextBelow(8);
        if (v >= u) ++v;
        FlipSnapshot sc = StepFlip(g, corrected, eps, u, v);
        FlipSnapshot ss =
            StepFlip(gs, safe, eps, u, v, PruningMode::kSafe);
        CHECK(g == gs);
        // Pruned and unpruned agree bit for bit, and both equal scratch.
        CHECK(corrected == safe);
        CHECK(corrected == ComputeAgreementState(g, eps));
        // Per-flip work bound, stated over current degrees, holds for both.
        std::size_t du = g.PositiveDegree(u), dv = g.PositiveDegree(v);
        CHECK(sc.work.na_evaluations <= 3 * (du + dv) + 1);
        CHECK(ss.work.na_evaluations <= 3 * (du + dv) + 1);
        CHECK(sc.work.na_evaluations <= ss.work.na_evaluations);
      }
    }
  }
}

TEST_CASE("closed-convention updates run through the safe path") {
  Epsilon eps(7, 10);
  for (std::uint64_t seed = 730; seed < 736; ++seed) {
    SignedGraph g = RandomGraph(8, seed);
    AgreementState state =
        ComputeAgreementState(g, eps, NeighborhoodMode::kClosed);
    SplitMix64 rng(seed);
    for (int step = 0; step < 25; ++step) {
      VertexId u = 1 + rng.NextBelow(8);
      VertexId v = 1 + rng.NextBelow(7);
      if (v >= u) ++v;
      FlipSnapshot snap = TakeFlipSnapshot(g, state, u, v);
      g.FlipEdge(u, v);
      ApplyFlipUpdate(g, state, eps, snap, PruningMode::kCorrected,
                      NeighborhoodMode::kClosed);
      CHECK(state ==
            ComputeAgreementState(g, eps, NeighborhoodMode::kClosed));
    }
  }
}

TEST_CASE("nothing outside the region is touched") {
  Epsilon eps(3, 5);
  for (std::uint64_t seed = 760; seed < 775; ++seed) {
    SignedGraph g = RandomGraph(10, seed);
    AgreementState state = ComputeAgreementState(g, eps);
    AgreementState before = state;
    SplitMix64 rng(seed ^ 0x5eed);
    VertexId u = 1 + rng.NextBelow(10);
    VertexId v = 1 + rng.NextBelow(9);
    if (v >= u) ++v;
    FlipSnapshot snap = StepFlip(g, state, eps, u, v);
    for (VertexId w = 1; w <= 10; ++w) {
      if (std::binary_search(snap.region.begin(), snap.region.end(), w))
        continue;
      CHECK(state.agree_cnt.at(w) == before.agree_cnt.at(w));
      CHECK(state.is_light.at(w) == before.is_light.at(w));
    }
    for (const auto& [e, flag] : before.agree) {
      if (e.a == u || e.b == u || e.a == v || e.b == v) continue;
      CHECK(state.agree.at(e) == flag);
    }
  }
}

TEST_CASE("flipping an edge twice restores graph and state exactly") {
  Epsilon eps(7, 10);
  for (std::uint64_t seed = 800; seed < 815; ++seed) {
    SignedGraph g = RandomGraph(9, seed);
    AgreementState state = ComputeAgreementState(g, eps);
    SignedGraph g0 = g;
    AgreementState s0 = state;
    SplitMix64 rng(seed);
    VertexId u = 1 + rng.NextBelow(9);
    VertexId v = 1 + rng.NextBelow(8);
    if (v >= u) ++v;
    StepFlip(g, state, eps, u, v);
    StepFlip(g, state, eps, u, v);
    CHECK(g == g0);
    CHECK(state == s0);
  }
}

TEST_CASE("the published skip rule drifts where the corrected one holds") {
  // Search a seeded corpus of single flips: the corrected rule must always
  // land on the scratch state; the published rule must miss at least once
  // (the deg_x <= deg_w crossing it never re-checks).
  bool strict_missed = false;
  Epsilon eps(7, 10);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    SignedGraph g = RandomGraph(8, seed, 2, 3);
    AgreementState base = ComputeAgreementState(g, eps);
    SplitMix64 rng(seed ^ 0xf11b);
    VertexId u = 1 + rng.NextBelow(8);
    VertexId v = 1 + rng.NextBelow(7);
    if (v >= u) ++v;

    SignedGraph gc = g;
    AgreementState corrected = base;
    StepFlip(gc, corrected, eps, u, v, PruningMode::kCorrected);
    CHECK(corrected == ComputeAgreementState(gc, eps));

    SignedGraph gp = g;
    AgreementState strict = base;
    StepFlip(gp, strict, eps, u, v, PruningMode::kPaperStrict);
    if (!(strict == ComputeAgreementState(gp, eps))) strict_missed = true;
  }
  CHECK(strict_missed);
}

TEST_CASE("change report on the clique gaining its missing edge") {
  SignedGraph g = MakeK4m();
  AgreementState state = ComputeAgreementState(g, Epsilon(7, 10));
  FlipSnapshot snap = StepFlip(g, state, Epsilon(7, 10), 1, 2);
  ChangeSet changes = CollectChanges(g, state, snap);
  CHECK(changes.u == 1);
  CHECK(changes.v == 2);
  CHECK(changes.direction == FlipDirection::kNegativeToPositive);
  CHECK(changes.region == std::vector<VertexId>{1, 2, 3, 4});
  // Everyone went light -> heavy and every edge appeared.
  CHECK(changes.lightness_changed == std::vector<VertexId>{1, 2, 3, 4});
  CHECK(changes.changed_presence ==
        std::vector<EdgeKey>{EdgeKey(1, 2), EdgeKey(1, 3), EdgeKey(1, 4),
                             EdgeKey(2, 3), EdgeKey(2, 4), EdgeKey(3, 4)});
}

TEST_CASE("change report on the clique losing an edge") {
  SignedGraph g = MakeK4();
  AgreementState state = ComputeAgreementState(g, Epsilon(7, 10));
  FlipSnapshot snap = StepFlip(g, state, Epsilon(7, 10), 1, 2);
  ChangeSet changes = CollectChanges(g, state, snap);
  CHECK(changes.direction == FlipDirection::kPositiveToNegative);
  CHECK(changes.lightness_changed == std::vector<VertexId>{1, 2, 3, 4});
  // All five remaining edges vanished from the sparsified graph, and the
  // removed edge itself was present before.
  CHECK(changes.changed_presence ==
        std::vector<EdgeKey>{EdgeKey(1, 2), EdgeKey(1, 3), EdgeKey(1, 4),
                             EdgeKey(2, 3), EdgeKey(2, 4), EdgeKey(3, 4)});
}

TEST_CASE("a cross-clique flip changes lightness but no presence") {
  // Two complete blocks {1..4} and {5..8}; at eps = 1 every vertex is heavy
  // only while all its edges agree. Adding {1,5} dilutes both endpoints to
  // lightness without killing any sparsified edge (the partner stays heavy).
  SignedGraph g;
  for (VertexId v = 1; v <= 8; ++v) g.AddVertex(v);
  for (VertexId u = 1; u <= 4; ++u)
    for (VertexId v = u + 1; v <= 4; ++v) g.FlipEdge(u, v);
  for (VertexId u = 5; u <= 8; ++u)
    for (VertexId v = u + 1; v <= 8; ++v) g.FlipEdge(u, v);
  Epsilon eps(1, 1);
  AgreementState state = ComputeAgreementState(g, eps);
  for (VertexId v = 1; v <= 8; ++v) CHECK_FALSE(state.is_light.at(v));

  FlipSnapshot snap = StepFlip(g, state, eps, 1, 5);
  CHECK(state == ComputeAgreementState(g, eps));
  CHECK(state.is_light.at(1));
  CHECK_FALSE(state.is_light.at(2));
  ChangeSet changes = CollectChanges(g, state, snap);
  CHECK(changes.lightness_changed == std::vector<VertexId>{1, 5});
  CHECK(changes.changed_presence.empty());
}
