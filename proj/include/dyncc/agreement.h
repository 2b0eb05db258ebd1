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

#ifndef DYNCC_AGREEMENT_H_
#define DYNCC_AGREEMENT_H_

#include <cstdint>
#include <map>

#include "dyncc/signed_graph.h"
#include "dyncc/types.h"

namespace dyncc {

// Per-graph agreement bookkeeping.
//  agree     - one flag per positive edge (the key set is exactly the
//              positive edge set): non-agreement strictly below eps.
//  agree_cnt - per vertex, how many incident positive edges agree.
//  is_light  - per vertex: degree zero, or agree_cnt/degree strictly below
//              eps. (Closed convention divides by degree + 1 instead.)
struct AgreementState {
  std::map<EdgeKey, bool> agree;
  std::map<VertexId, std::uint64_t> agree_cnt;
  std::map<VertexId, bool> is_light;

  friend bool operator==(const AgreementState&, const AgreementState&) =
      default;
};

// Lightness of v given its current agree_cnt; reads the graph for the degree.
bool ComputeIsLight(const SignedGraph& g, std::uint64_t agree_cnt, VertexId v,
                    const Epsilon& eps,
                    NeighborhoodMode mode = NeighborhoodMode::kOpen);

// Full recompute of the agreement state from scratch.
AgreementState ComputeAgreementState(
    const SignedGraph& g, const Epsilon& eps,
    NeighborhoodMode mode = NeighborhoodMode::kOpen);

// Whether positive edge {u, v} survives sparsification: it agrees and its
// endpoints are not both light. Throws kNotPositiveAdjacent on a non-edge.
bool SparsifiedEdgePresent(const SignedGraph& g, const AgreementState& state,
                           VertexId u, VertexId v);

}  // namespace dyncc

#endif  // DYNCC_AGREEMENT_H_
