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

#ifndef DYNCC_SIGNED_GRAPH_H_
#define DYNCC_SIGNED_GRAPH_H_

#include <cstddef>
#include <map>
#include <vector>

#include "dyncc/types.h"

namespace dyncc {

// A complete signed graph on an explicit vertex set, stored as its positive
// part: every unordered pair of distinct vertices is an edge, and only the
// positive ones are materialized (sorted adjacency vectors). Absent pair ==
// negative edge. Vertex iteration is always in ascending id order.
class SignedGraph {
 public:
  SignedGraph() = default;

  // Throws kDuplicateVertex. The new vertex starts with all incident edges
  // negative, i.e. no adjacency entries.
  void AddVertex(VertexId v);

  // Throws kVertexNotFound; throws kHasPositiveEdges unless every incident
  // edge is negative.
  void DeleteVertex(VertexId v);

  // Toggles the sign of edge {u, v} and returns the sign it had before.
  // Throws kSelfLoop if u == v, kVertexNotFound if either endpoint is absent.
  EdgeSign FlipEdge(VertexId u, VertexId v);

  bool Contains(VertexId v) const { return adj_.count(v) != 0; }

  // True iff both endpoints exist, u != v, and the edge is positive.
  bool IsPositiveEdge(VertexId u, VertexId v) const;

  // Ascending neighbor ids. Throws kVertexNotFound.
  const std::vector<VertexId>& PositiveNeighbors(VertexId v) const;

  std::size_t PositiveDegree(VertexId v) const {
    return PositiveNeighbors(v).size();
  }

  std::vector<VertexId> Vertices() const;
  std::size_t NumVertices() const { return adj_.size(); }
  std::size_t NumPositiveEdges() const { return num_positive_edges_; }

  // All positive edges, ascending by (a, b) with a < b.
  std::vector<EdgeKey> PositiveEdges() const;

  const std::map<VertexId, std::vector<VertexId>>& Adjacency() const {
    return adj_;
  }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  std::map<VertexId, std::vector<VertexId>> adj_;
  std::size_t num_positive_edges_ = 0;
};

// |N(u) symdiff N(v)| over open positive neighborhoods. Throws
// kVertexNotFound. Works for any vertex pair, adjacent or not.
std::size_t SymDiffSize(const SignedGraph& g, VertexId u, VertexId v);

// Merge-count of the symmetric difference of two sorted id vectors.
std::size_t SortedSymDiffSize(const std::vector<VertexId>& a,
                              const std::vector<VertexId>& b);

// The non-agreement measure of a positive edge {u, v}: the symmetric
// difference of the endpoints' positive neighborhoods over the larger
// degree, as an exact rational. Throws kNotPositiveAdjacent unless the edge
// is positive. Under the closed convention both neighborhoods gain their own
// vertex, which shrinks the difference by 2 and grows each degree by 1.
Ratio NonAgreement(const SignedGraph& g, VertexId u, VertexId v,
                   NeighborhoodMode mode = NeighborhoodMode::kOpen);

// True iff {u, v} is a positive edge whose non-agreement is strictly below
// eps.
bool InEpsilonAgreement(const SignedGraph& g, VertexId u, VertexId v,
                        const Epsilon& eps,
                        NeighborhoodMode mode = NeighborhoodMode::kOpen);

}  // namespace dyncc

#endif  // DYNCC_SIGNED_GRAPH_H_
