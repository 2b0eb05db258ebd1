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

#include "dyncc/signed_graph.h"

#include <algorithm>

namespace dyncc {
namespace {

bool SortedContains(const std::vector<VertexId>& v, VertexId x) {
  return std::binary_search(v.begin(), v.end(), x);
}

void SortedInsert(std::vector<VertexId>& v, VertexId x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

void SortedErase(std::vector<VertexId>& v, VertexId x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  v.erase(it);
}

}  // namespace

void SignedGraph::AddVertex(VertexId v) {
  auto [it, inserted] = adj_.try_emplace(v);
  (void)it;
  if (!inserted)
    throw Error(ErrorCode::kDuplicateVertex,
                "vertex " + std::to_string(v) + " already exists");
}

void SignedGraph::DeleteVertex(VertexId v) {
  auto it = adj_.find(v);
  if (it == adj_.end())
    throw Error(ErrorCode::kVertexNotFound,
                "vertex " + std::to_string(v) + " not found");
  if (!it->second.empty())
    throw Error(ErrorCode::kHasPositiveEdges,
                "vertex " + std::to_string(v) + " still has positive edges");
  adj_.erase(it);
}

EdgeSign SignedGraph::FlipEdge(VertexId u, VertexId v) {
  if (u == v)
    throw Error(ErrorCode::kSelfLoop,
                "self loop at vertex " + std::to_string(u));
  auto iu = adj_.find(u);
  auto iv = adj_.find(v);
  if (iu == adj_.end() || iv == adj_.end())
    throw Error(ErrorCode::kVertexNotFound,
                "vertex " + std::to_string(iu == adj_.end() ? u : v) +
                    " not found");
  if (SortedContains(iu->second, v)) {
    SortedErase(iu->second, v);
    SortedErase(iv->second, u);
    --num_positive_edges_;
    return EdgeSign::kPositive;
  }
  SortedInsert(iu->second, v);
  SortedInsert(iv->second, u);
  ++num_positive_edges_;
  return EdgeSign::kNegative;
}

bool SignedGraph::IsPositiveEdge(VertexId u, VertexId v) const {
  if (u == v) return false;
  auto it = adj_.find(u);
  if (it == adj_.end() || !adj_.count(v)) return false;
  return SortedContains(it->second, v);
}

const std::vector<VertexId>& SignedGraph::PositiveNeighbors(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end())
    throw Error(ErrorCode::kVertexNotFound,
                "vertex " + std::to_string(v) + " not found");
  return it->second;
}

std::vector<VertexId> SignedGraph::Vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, nbrs] : adj_) out.push_back(v);
  return out;
}

std::vector<EdgeKey> SignedGraph::PositiveEdges() const {
  std::vector<EdgeKey> out;
  out.reserve(num_positive_edges_);
  for (const auto& [v, nbrs] : adj_)
    for (VertexId w : nbrs)
      if (v < w) out.emplace_back(v, w);
  return out;
}

std::size_t SortedSymDiffSize(const std::vector<VertexId>& a,
                              const std::vector<VertexId>& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++count;
      ++ia;
    } else if (*ib < *ia) {
      ++count;
      ++ib;
    } else {
      ++ia;
      ++ib;
    }
  }
  return count + (a.end() - ia) + (b.end() - ib);
}

std::size_t SymDiffSize(const SignedGraph& g, VertexId u, VertexId v) {
  return SortedSymDiffSize(g.PositiveNeighbors(u), g.PositiveNeighbors(v));
}

Ratio NonAgreement(const SignedGraph& g, VertexId u, VertexId v,
                   NeighborhoodMode mode) {
  if (!g.IsPositiveEdge(u, v))
    throw Error(ErrorCode::kNotPositiveAdjacent,
                "edge {" + std::to_string(u) + "," + std::to_string(v) +
                    "} is not a positive edge");
  std::size_t diff = SymDiffSize(g, u, v);
  std::size_t du = g.PositiveDegree(u);
  std::size_t dv = g.PositiveDegree(v);
  if (mode == NeighborhoodMode::kClosed) {
    // u and v are adjacent, so each belongs to both closed neighborhoods.
    diff -= 2;
    ++du;
    ++dv;
  }
  return Ratio{diff, std::max(du, dv)};
}

bool InEpsilonAgreement(const SignedGraph& g, VertexId u, VertexId v,
                        const Epsilon& eps, NeighborhoodMode mode) {
  return g.IsPositiveEdge(u, v) && RatioLess(NonAgreement(g, u, v, mode), eps);
}

}  // namespace dyncc
