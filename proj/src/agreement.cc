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

#include "dyncc/agreement.h"

namespace dyncc {

bool ComputeIsLight(const SignedGraph& g, std::uint64_t agree_cnt, VertexId v,
                    const Epsilon& eps, NeighborhoodMode mode) {
  std::uint64_t deg = g.PositiveDegree(v);
  if (deg == 0) return true;
  if (mode == NeighborhoodMode::kClosed) ++deg;
  return RatioLess(Ratio{agree_cnt, deg}, eps);
}

AgreementState ComputeAgreementState(const SignedGraph& g, const Epsilon& eps,
                                     NeighborhoodMode mode) {
  AgreementState state;
  for (const auto& [v, nbrs] : g.Adjacency()) {
    (void)nbrs;
    state.agree_cnt[v] = 0;
  }
  for (const auto& [v, nbrs] : g.Adjacency()) {
    for (VertexId w : nbrs) {
      if (v >= w) continue;
      bool ok = RatioLess(NonAgreement(g, v, w, mode), eps);
      state.agree[EdgeKey(v, w)] = ok;
      if (ok) {
        ++state.agree_cnt[v];
        ++state.agree_cnt[w];
      }
    }
  }
  for (const auto& [v, cnt] : state.agree_cnt)
    state.is_light[v] = ComputeIsLight(g, cnt, v, eps, mode);
  return state;
}

bool SparsifiedEdgePresent(const SignedGraph& g, const AgreementState& state,
                           VertexId u, VertexId v) {
  auto it = state.agree.find(EdgeKey(u, v));
  if (it == state.agree.end() || !g.IsPositiveEdge(u, v))
    throw Error(ErrorCode::kNotPositiveAdjacent,
                "edge {" + std::to_string(u) + "," + std::to_string(v) +
                    "} is not a positive edge");
  if (!it->second) return false;
  return !(state.is_light.at(u) && state.is_light.at(v));
}

}  // namespace dyncc
