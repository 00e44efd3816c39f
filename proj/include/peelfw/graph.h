// Copyright 2026 The Authors.
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

#ifndef PEELFW_GRAPH_H_
#define PEELFW_GRAPH_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "peelfw/errors.h"
#include "peelfw/subset.h"

namespace peelfw {

// Undirected multigraph on vertices 0..n-1. Edges keep the index they were
// created with; parallel edges are repeated entries. Self-loops are rejected.
class MultiGraph {
 public:
  struct Edge {
    int u;
    int v;
  };

  MultiGraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const;

  // Number of edge endpoints at v; parallel edges count with multiplicity.
  int Degree(int v) const;
  std::span<const int> IncidentEdges(int v) const;

  // Endpoint of edge e that is not v.
  int Opposite(int e, int v) const;

  std::int64_t SumSquaredDegrees() const;

 private:
  void CheckVertex(int v) const;

  int num_vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

// Parses "u v" lines. Blank lines and lines starting with '#' are skipped.
// The vertex count is one more than the largest id seen.
MultiGraph ParseEdgeList(std::string_view text);
MultiGraph ReadEdgeListFile(const std::string& path);

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), rank_(n, 0), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false when a and b were already joined.
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --count_;
    return true;
  }

  int count() const { return count_; }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int count_;
};

// Connected components of the spanning subgraph (V, edge_subset).
int CountComponents(const MultiGraph& g, std::span<const int> edge_subset);
int CountComponents(const MultiGraph& g, const Subset& edge_subset);

bool IsConnected(const MultiGraph& g);

// Component id per vertex, ids numbered 0.. in order of first vertex.
std::vector<int> ComponentLabels(const MultiGraph& g,
                                 const Subset& edge_subset);

// Kruskal. Edges are scanned by (weight, index) so ties go to the smaller
// edge index. Returns the tree's edge indices in ascending order.
template <typename Weight>
std::vector<int> MinimumSpanningTree(const MultiGraph& g,
                                     std::span<const Weight> weights) {
  if (static_cast<int>(weights.size()) != g.num_edges()) {
    throw InputError("weight vector length does not match edge count");
  }
  std::vector<int> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] < weights[b]; });
  DisjointSets sets(g.num_vertices());
  std::vector<int> tree;
  tree.reserve(g.num_vertices() - 1);
  for (int e : order) {
    if (sets.Union(g.edge(e).u, g.edge(e).v)) tree.push_back(e);
  }
  if (sets.count() != 1) {
    throw PreconditionError("graph is disconnected; no spanning tree");
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

template <typename Weight>
std::vector<int> MinimumSpanningTree(const MultiGraph& g,
                                     const std::vector<Weight>& weights) {
  return MinimumSpanningTree(g, std::span<const Weight>(weights));
}

// Small named graphs.
MultiGraph CompleteGraph(int n);
MultiGraph StarGraph(int leaves);
MultiGraph PathGraph(int n);

}  // namespace peelfw

#endif  // PEELFW_GRAPH_H_
