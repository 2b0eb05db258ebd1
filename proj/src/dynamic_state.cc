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

#include "dyncc/dynamic_state.h"

#include <algorithm>
#include <set>

namespace dyncc {
namespace {

// a \ b, optionally dropping one extra id.
std::vector<VertexId> SortedDifference(const std::vector<VertexId>& a,
                                       const std::vector<VertexId>& b,
                                       VertexId drop) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  auto it = std::lower_bound(out.begin(), out.end(), drop);
  if (it != out.end() && *it == drop) out.erase(it);
  return out;
}

std::vector<VertexId> SortedIntersection(const std::vector<VertexId>& a,
                                         const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

void RefreshLightness(const SignedGraph& g, AgreementState& state,
                      const Epsilon& eps, const std::vector<VertexId>& region,
                      NeighborhoodMode mode) {
  for (VertexId w : region)
    state.is_light[w] =
        ComputeIsLight(g, state.agree_cnt.at(w), w, eps, mode);
}

bool IncidentToFlip(const EdgeKey& e, VertexId u, VertexId v) {
  return e.a == u || e.a == v || e.b == u || e.b == v;
}

}  // namespace

FlipSnapshot TakeFlipSnapshot(const SignedGraph& g, const AgreementState& state,
                              VertexId u, VertexId v) {
  if (u == v)
    throw Error(ErrorCode::kSelfLoop,
                "self loop at vertex " + std::to_string(u));
  FlipSnapshot snap;
  snap.u = u;
  snap.v = v;
  snap.direction = g.IsPositiveEdge(u, v) ? FlipDirection::kPositiveToNegative
                                          : FlipDirection::kNegativeToPositive;
  snap.pre_neighbors_u = g.PositiveNeighbors(u);  // throws kVertexNotFound
  snap.pre_neighbors_v = g.PositiveNeighbors(v);
  snap.pre_deg_u = snap.pre_neighbors_u.size();
  snap.pre_deg_v = snap.pre_neighbors_v.size();

  std::set_union(snap.pre_neighbors_u.begin(), snap.pre_neighbors_u.end(),
                 snap.pre_neighbors_v.begin(), snap.pre_neighbors_v.end(),
                 std::back_inserter(snap.region));
  for (VertexId x : {std::min(u, v), std::max(u, v)}) {
    auto it = std::lower_bound(snap.region.begin(), snap.region.end(), x);
    if (it == snap.region.end() || *it != x) snap.region.insert(it, x);
  }

  for (VertexId w : snap.region)
    snap.lightness_before[w] = state.is_light.at(w);
  for (VertexId w : snap.pre_neighbors_u)
    snap.agree_before[EdgeKey(u, w)] = state.agree.at(EdgeKey(u, w));
  for (VertexId w : snap.pre_neighbors_v)
    snap.agree_before[EdgeKey(v, w)] = state.agree.at(EdgeKey(v, w));
  return snap;
}

void VerifyEdge(const SignedGraph& g, AgreementState& state,
                const Epsilon& eps, VertexId x, VertexId y, WorkCounters& work,
                std::optional<std::size_t> known_sym_diff,
                NeighborhoodMode mode) {
  if (!g.IsPositiveEdge(x, y))
    throw Error(ErrorCode::kNotPositiveAdjacent,
                "edge {" + std::to_string(x) + "," + std::to_string(y) +
                    "} is not a positive edge");
  ++work.verify_calls;
  Ratio na;
  if (known_sym_diff.has_value()) {
    na = Ratio{*known_sym_diff,
               std::max(g.PositiveDegree(x), g.PositiveDegree(y))};
  } else {
    na = NonAgreement(g, x, y, mode);
    ++work.na_evaluations;
  }
  bool now = RatioLess(na, eps);
  auto it = state.agree.find(EdgeKey(x, y));
  if (it->second == now) return;
  it->second = now;
  std::int64_t d = now ? 1 : -1;
  state.agree_cnt[x] += d;
  state.agree_cnt[y] += d;
}

bool NeedsVerifyAfterGain(bool was_agreeing, const PredicateInputs& in) {
  if (was_agreeing)
    // The measure can rise only if x's degree was below w's, or if the
    // trichotomy pivot (threshold vs deg x) points up.
    return in.deg_x < in.deg_w || in.threshold < in.deg_x;
  // A non-agreeing edge can only cross down when the measure falls:
  // threshold strictly above x's degree with x's degree dominant.
  return in.deg_x >= in.deg_w && in.threshold > in.deg_x;
}

bool NeedsVerifyAfterLoss(bool was_agreeing, const PredicateInputs& in,
                          bool corrected) {
  if (was_agreeing)
    // deg_x <= deg_w means the measure strictly falls (re-check is
    // redundant but harmless and kept); otherwise the pivot decides.
    return in.deg_x <= in.deg_w || in.threshold > in.deg_x;
  if (in.deg_x > in.deg_w && in.threshold < in.deg_x) return true;
  // With deg_x <= deg_w the measure strictly falls, so a non-agreeing edge
  // can cross into agreement; the uncorrected rule misses this case.
  return corrected && in.deg_x <= in.deg_w;
}

namespace {

// Shared frame of both pruned updates: the flip-invariant neighbor classes
// and a one-pass threshold evaluation per exclusive neighbor.
struct NeighborClasses {
  std::vector<VertexId> common;  // adjacent to both endpoints
  std::vector<VertexId> only_u;  // adjacent to u only (v excluded)
  std::vector<VertexId> only_v;  // adjacent to v only (u excluded)
};

NeighborClasses Classify(const FlipSnapshot& snap) {
  NeighborClasses c;
  c.common = SortedIntersection(snap.pre_neighbors_u, snap.pre_neighbors_v);
  c.only_u = SortedDifference(snap.pre_neighbors_u, snap.pre_neighbors_v,
                              snap.v);
  c.only_v = SortedDifference(snap.pre_neighbors_v, snap.pre_neighbors_u,
                              snap.u);
  return c;
}

// Runs the skip rule for every exclusive neighbor w of endpoint x. One
// symmetric-difference pass per w doubles as the rule's threshold and, via
// the +-1 shift, as the re-check's post-flip difference.
template <typename Rule>
void SweepExclusive(const SignedGraph& g, AgreementState& state,
                    const Epsilon& eps, FlipSnapshot& snap, VertexId x,
                    const std::vector<VertexId>& pre_nx, std::size_t pre_deg_x,
                    const std::vector<VertexId>& myside, int diff_shift,
                    const Rule& needs_verify) {
  for (VertexId w : myside) {
    std::size_t threshold = SortedSymDiffSize(pre_nx, g.PositiveNeighbors(w));
    ++snap.work.na_evaluations;
    bool was = state.agree.at(EdgeKey(x, w));
    PredicateInputs in{pre_deg_x, g.PositiveDegree(w), threshold};
    if (needs_verify(was, in))
      VerifyEdge(g, state, eps, x, w, snap.work,
                 threshold + diff_shift);
  }
}

}  // namespace

void UpdateNegativeToPositive(const SignedGraph& g, AgreementState& state,
                              const Epsilon& eps, FlipSnapshot& snap,
                              PruningMode pruning) {
  (void)pruning;  // both published and corrected rules coincide here
  VertexId u = snap.u, v = snap.v;
  if (snap.direction != FlipDirection::kNegativeToPositive ||
      !g.IsPositiveEdge(u, v))
    throw Error(ErrorCode::kEdgeNotPositive,
                "flip to positive not reflected by the graph");

  NeighborClasses cls = Classify(snap);

  // Common neighbors: the measure cannot rise, so only currently
  // non-agreeing edges can change.
  for (VertexId w : cls.common)
    for (VertexId x : {u, v})
      if (!state.agree.at(EdgeKey(x, w)))
        VerifyEdge(g, state, eps, x, w, snap.work);

  auto rule = [](bool was, const PredicateInputs& in) {
    return NeedsVerifyAfterGain(was, in);
  };
  SweepExclusive(g, state, eps, snap, u, snap.pre_neighbors_u, snap.pre_deg_u,
                 cls.only_u, +1, rule);
  SweepExclusive(g, state, eps, snap, v, snap.pre_neighbors_v, snap.pre_deg_v,
                 cls.only_v, +1, rule);

  // The new edge itself enters the flag domain.
  std::size_t diff = SymDiffSize(g, u, v);
  ++snap.work.na_evaluations;
  bool ok = RatioLess(
      Ratio{diff, std::max(g.PositiveDegree(u), g.PositiveDegree(v))}, eps);
  state.agree[EdgeKey(u, v)] = ok;
  if (ok) {
    ++state.agree_cnt[u];
    ++state.agree_cnt[v];
  }

  RefreshLightness(g, state, eps, snap.region, NeighborhoodMode::kOpen);
}

void UpdatePositiveToNegative(const SignedGraph& g, AgreementState& state,
                              const Epsilon& eps, FlipSnapshot& snap,
                              PruningMode pruning) {
  VertexId u = snap.u, v = snap.v;
  if (snap.direction != FlipDirection::kPositiveToNegative ||
      g.IsPositiveEdge(u, v))
    throw Error(ErrorCode::kEdgeNotNegative,
                "flip to negative not reflected by the graph");

  // The removed edge leaves the flag domain; settle its count contribution
  // first so later verifications see consistent counts.
  if (snap.agree_before.at(EdgeKey(u, v))) {
    --state.agree_cnt[u];
    --state.agree_cnt[v];
  }
  state.agree.erase(EdgeKey(u, v));

  NeighborClasses cls = Classify(snap);

  // Common neighbors: the measure strictly rises, so only currently
  // agreeing edges can change.
  for (VertexId w : cls.common)
    for (VertexId x : {u, v})
      if (state.agree.at(EdgeKey(x, w)))
        VerifyEdge(g, state, eps, x, w, snap.work);

  bool corrected = pruning == PruningMode::kCorrected;
  auto rule = [corrected](bool was, const PredicateInputs& in) {
    return NeedsVerifyAfterLoss(was, in, corrected);
  };
  SweepExclusive(g, state, eps, snap, u, snap.pre_neighbors_u, snap.pre_deg_u,
                 cls.only_u, -1, rule);
  SweepExclusive(g, state, eps, snap, v, snap.pre_neighbors_v, snap.pre_deg_v,
                 cls.only_v, -1, rule);

  RefreshLightness(g, state, eps, snap.region, NeighborhoodMode::kOpen);
}

void SafeRecomputeAround(const SignedGraph& g, AgreementState& state,
                         const Epsilon& eps, FlipSnapshot& snap,
                         NeighborhoodMode mode) {
  VertexId u = snap.u, v = snap.v;
  if (snap.direction == FlipDirection::kPositiveToNegative) {
    if (g.IsPositiveEdge(u, v))
      throw Error(ErrorCode::kEdgeNotNegative,
                  "flip to negative not reflected by the graph");
    if (snap.agree_before.at(EdgeKey(u, v))) {
      --state.agree_cnt[u];
      --state.agree_cnt[v];
    }
    state.agree.erase(EdgeKey(u, v));
  } else {
    if (!g.IsPositiveEdge(u, v))
      throw Error(ErrorCode::kEdgeNotPositive,
                  "flip to positive not reflected by the graph");
    state.agree[EdgeKey(u, v)] = false;  // provisional; verified below
  }
  for (VertexId w : g.PositiveNeighbors(u))
    VerifyEdge(g, state, eps, u, w, snap.work, std::nullopt, mode);
  for (VertexId w : g.PositiveNeighbors(v)) {
    if (w == u) continue;  // {u, v} already handled in u's sweep
    VerifyEdge(g, state, eps, v, w, snap.work, std::nullopt, mode);
  }
  RefreshLightness(g, state, eps, snap.region, mode);
}

void ApplyFlipUpdate(const SignedGraph& g, AgreementState& state,
                     const Epsilon& eps, FlipSnapshot& snap,
                     PruningMode pruning, NeighborhoodMode mode) {
  if (pruning == PruningMode::kSafe || mode == NeighborhoodMode::kClosed) {
    SafeRecomputeAround(g, state, eps, snap, mode);
    return;
  }
  if (snap.direction == FlipDirection::kNegativeToPositive)
    UpdateNegativeToPositive(g, state, eps, snap, pruning);
  else
    UpdatePositiveToNegative(g, state, eps, snap, pruning);
}

ChangeSet CollectChanges(const SignedGraph& g, const AgreementState& state,
                         const FlipSnapshot& snap) {
  ChangeSet out;
  out.u = snap.u;
  out.v = snap.v;
  out.direction = snap.direction;
  out.region = snap.region;

  auto light_before = [&](VertexId w) {
    auto it = snap.lightness_before.find(w);
    return it != snap.lightness_before.end() ? it->second
                                             : state.is_light.at(w);
  };

  for (VertexId w : out.region)
    if (light_before(w) != state.is_light.at(w))
      out.lightness_changed.push_back(w);

  // Candidates: every positive edge incident to the region now, plus the
  // flipped edge if it just left the positive set. Edges with both ends
  // outside the region cannot change presence.
  std::set<EdgeKey> candidates;
  for (VertexId w : out.region)
    for (VertexId x : g.PositiveNeighbors(w)) candidates.insert(EdgeKey(w, x));
  if (snap.direction == FlipDirection::kPositiveToNegative)
    candidates.insert(EdgeKey(snap.u, snap.v));

  for (const EdgeKey& e : candidates) {
    bool positive_before, agree_pre;
    if (IncidentToFlip(e, snap.u, snap.v)) {
      auto it = snap.agree_before.find(e);
      positive_before = it != snap.agree_before.end();
      agree_pre = positive_before && it->second;
    } else {
      positive_before = true;  // signs away from u, v did not change
      agree_pre = state.agree.at(e);
    }
    bool present_before = positive_before && agree_pre &&
                          !(light_before(e.a) && light_before(e.b));
    bool positive_now = g.IsPositiveEdge(e.a, e.b);
    bool present_now = positive_now && state.agree.at(e) &&
                       !(state.is_light.at(e.a) && state.is_light.at(e.b));
    if (present_before != present_now) out.changed_presence.push_back(e);
  }
  return out;
}

}  // namespace dyncc
