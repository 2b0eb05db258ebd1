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

#include "dyncc/cluster_maintenance.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace dyncc {
namespace {

bool SortedContains(const std::vector<VertexId>& v, VertexId x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// Minimal union-find over dense node ids.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Unite(std::size_t a, std::size_t b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<VertexId> ComputeFrontier(const ChangeSet& changes,
                                      MaintenanceMode mode) {
  std::vector<VertexId> frontier = changes.region;
  if (mode == MaintenanceMode::kPaperStrict) return frontier;
  std::set<VertexId> extra;
  for (const EdgeKey& e : changes.changed_presence) {
    bool a_in = SortedContains(changes.region, e.a);
    bool b_in = SortedContains(changes.region, e.b);
    if (a_in && !b_in && SortedContains(changes.lightness_changed, e.a))
      extra.insert(e.b);
    if (b_in && !a_in && SortedContains(changes.lightness_changed, e.b))
      extra.insert(e.a);
  }
  if (!extra.empty()) {
    frontier.insert(frontier.end(), extra.begin(), extra.end());
    std::sort(frontier.begin(), frontier.end());
  }
  return frontier;
}

std::map<VertexId, int> ComponentsWithin(
    const SignedGraph& g, const AgreementState& state,
    const std::vector<VertexId>& frontier) {
  std::map<VertexId, int> component_of;
  int next = 0;
  for (VertexId start : frontier) {
    if (component_of.count(start)) continue;
    int id = next++;
    std::deque<VertexId> queue{start};
    component_of[start] = id;
    while (!queue.empty()) {
      VertexId w = queue.front();
      queue.pop_front();
      for (VertexId x : g.PositiveNeighbors(w)) {
        if (!SortedContains(frontier, x) || component_of.count(x)) continue;
        if (!SparsifiedEdgePresent(g, state, w, x)) continue;
        component_of[x] = id;
        queue.push_back(x);
      }
    }
  }
  return component_of;
}

MarkTable MarkClusters(const Clustering& prev,
                       const std::vector<VertexId>& frontier,
                       const std::map<VertexId, int>& component_of) {
  MarkTable table;
  std::set<ClusterId> touched;
  for (VertexId w : frontier) touched.insert(prev.assignment.at(w));
  for (const auto& [id, members] : prev.clusters) {
    (void)members;
    table.mark[id] =
        touched.count(id) ? ClusterMark::kUnprocessed : ClusterMark::kCopyCandidate;
    table.group[id] = id;
  }

  // Union-find over cluster ids, path-halved lookups through the map.
  auto find_group = [&](ClusterId c) {
    while (table.group.at(c) != c) {
      ClusterId p = table.group.at(c);
      table.group[c] = table.group.at(p);
      c = table.group.at(c);
    }
    return c;
  };
  auto apply = [&](ClusterId c, ClusterMark m) {
    auto& cur = table.mark.at(c);
    if (m > cur) cur = m;
  };

  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (std::size_t j = i; j < frontier.size(); ++j) {
      VertexId w = frontier[i], wp = frontier[j];
      ClusterId cw = prev.assignment.at(w), cwp = prev.assignment.at(wp);
      bool same_component = component_of.at(w) == component_of.at(wp);
      if (same_component && cw == cwp) {
        apply(cw, ClusterMark::kCopyCandidate);
      } else if (same_component) {
        apply(cw, ClusterMark::kMergeCandidate);
        apply(cwp, ClusterMark::kMergeCandidate);
        table.merge_pairs.emplace_back(w, wp);
        ClusterId ra = find_group(cw), rb = find_group(cwp);
        if (ra != rb) table.group[std::max(ra, rb)] = std::min(ra, rb);
      } else if (cw == cwp) {
        apply(cw, ClusterMark::kSplitCandidate);
      }
    }
  }
  // Flatten representatives.
  for (auto& [id, rep] : table.group) {
    (void)rep;
    table.group[id] = find_group(id);
  }
  return table;
}

std::vector<std::vector<VertexId>> SplitFragments(
    const SignedGraph& g, const AgreementState& state,
    const std::vector<VertexId>& members,
    const std::vector<VertexId>& frontier) {
  std::vector<std::vector<VertexId>> fragments;
  std::set<VertexId> seen;
  for (VertexId start : members) {
    if (seen.count(start)) continue;
    std::vector<VertexId> frag;
    std::deque<VertexId> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      VertexId w = queue.front();
      queue.pop_front();
      frag.push_back(w);
      bool w_in_frontier = SortedContains(frontier, w);
      for (VertexId x : g.PositiveNeighbors(w)) {
        if (!SortedContains(members, x) || seen.count(x)) continue;
        if (w_in_frontier && SortedContains(frontier, x)) continue;
        if (!SparsifiedEdgePresent(g, state, w, x)) continue;
        seen.insert(x);
        queue.push_back(x);
      }
    }
    std::sort(frag.begin(), frag.end());
    fragments.push_back(std::move(frag));
  }
  return fragments;
}

Clustering RebuildClustering(
    const Clustering& prev, const MarkTable& marks,
    const std::map<VertexId, int>& component_of,
    const std::map<ClusterId, std::vector<std::vector<VertexId>>>& fragments,
    const std::vector<VertexId>& frontier) {
  Clustering out;
  out.next_id = prev.next_id;

  // Node universe: one node per merge cluster, one per split fragment, one
  // per frontier component. Frontier components contribute connectivity
  // only; cluster members are always gathered from the piece nodes.
  std::vector<const std::vector<VertexId>*> pieces;
  std::map<VertexId, std::size_t> piece_of;
  for (const auto& [id, members] : prev.clusters) {
    switch (marks.MarkOf(id)) {
      case ClusterMark::kUnprocessed:
        throw Error(ErrorCode::kUnprocessedCluster,
                    "cluster " + std::to_string(id) + " left unprocessed");
      case ClusterMark::kCopyCandidate:
        out.clusters[id] = members;
        for (VertexId v : members) out.assignment[v] = id;
        break;
      case ClusterMark::kMergeCandidate:
        for (VertexId v : members) piece_of[v] = pieces.size();
        pieces.push_back(&members);
        break;
      case ClusterMark::kSplitCandidate:
        for (const auto& frag : fragments.at(id)) {
          for (VertexId v : frag) piece_of[v] = pieces.size();
          pieces.push_back(&frag);
        }
        break;
    }
  }

  int num_components = 0;
  for (const auto& [w, comp] : component_of) {
    (void)w;
    num_components = std::max(num_components, comp + 1);
  }
  UnionFind uf(pieces.size() + num_components);
  for (VertexId w : frontier) {
    auto it = piece_of.find(w);
    if (it == piece_of.end()) continue;  // member of a copy candidate
    uf.Unite(it->second, pieces.size() + component_of.at(w));
  }

  // Gather each union class's vertices from its piece nodes.
  std::map<std::size_t, std::vector<VertexId>> classes;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    auto& members = classes[uf.Find(i)];
    members.insert(members.end(), pieces[i]->begin(), pieces[i]->end());
  }
  std::vector<std::vector<VertexId>> fresh;
  fresh.reserve(classes.size());
  for (auto& [root, members] : classes) {
    (void)root;
    std::sort(members.begin(), members.end());
    fresh.push_back(std::move(members));
  }
  std::sort(fresh.begin(), fresh.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (auto& members : fresh) {
    ClusterId id = out.next_id++;
    for (VertexId v : members) out.assignment[v] = id;
    out.clusters[id] = std::move(members);
  }
  return out;
}

Clustering MaintainWithFrontier(const SignedGraph& g,
                                const AgreementState& state,
                                const Clustering& prev,
                                const std::vector<VertexId>& frontier) {
  std::map<VertexId, int> component_of = ComponentsWithin(g, state, frontier);
  MarkTable marks = MarkClusters(prev, frontier, component_of);
  std::map<ClusterId, std::vector<std::vector<VertexId>>> fragments;
  for (const auto& [id, mark] : marks.mark)
    if (mark == ClusterMark::kSplitCandidate)
      fragments[id] =
          SplitFragments(g, state, prev.clusters.at(id), frontier);
  return RebuildClustering(prev, marks, component_of, fragments, frontier);
}

Clustering MaintainAfterFlip(const SignedGraph& g, const AgreementState& state,
                             const Clustering& prev, const ChangeSet& changes,
                             MaintenanceMode mode) {
  return MaintainWithFrontier(g, state, prev,
                              ComputeFrontier(changes, mode));
}

ClusterId AddSingletonInPlace(Clustering& c, VertexId v) {
  if (c.assignment.count(v))
    throw Error(ErrorCode::kDuplicateVertex,
                "vertex " + std::to_string(v) + " already clustered");
  ClusterId id = c.next_id++;
  c.clusters[id] = {v};
  c.assignment[v] = id;
  return id;
}

void RemoveSingletonInPlace(Clustering& c, VertexId v) {
  auto it = c.assignment.find(v);
  if (it == c.assignment.end())
    throw Error(ErrorCode::kVertexNotFound,
                "vertex " + std::to_string(v) + " not clustered");
  auto cl = c.clusters.find(it->second);
  if (cl->second.size() != 1)
    throw Error(ErrorCode::kNotASingleton,
                "vertex " + std::to_string(v) + " is not a singleton");
  c.clusters.erase(cl);
  c.assignment.erase(it);
}

Clustering AddSingleton(const Clustering& c, VertexId v) {
  Clustering out = c;
  AddSingletonInPlace(out, v);
  return out;
}

Clustering RemoveSingleton(const Clustering& c, VertexId v) {
  Clustering out = c;
  RemoveSingletonInPlace(out, v);
  return out;
}

}  // namespace dyncc
