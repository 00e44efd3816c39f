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

#ifndef PEELFW_TREEPACK_H_
#define PEELFW_TREEPACK_H_

#include <cstdint>
#include <vector>

#include "peelfw/frank_wolfe.h"
#include "peelfw/graph.h"
#include "peelfw/rational.h"

namespace peelfw {

// Partition enumeration (restricted-growth strings) is capped at this many
// vertices; Bell(10) is about 1.2e5.
inline constexpr int kMaxPartitionVertices = 10;

struct TnwPartition {
  std::vector<int> part_of_vertex;
  int num_parts = 0;
  int crossing_edges = 0;
  Rational strength;  // crossing_edges / (num_parts - 1)
};

// A vertex partition with at least two parts minimizing crossing edges per
// additional part; among minimizers, one with the most parts. The graph must
// be connected with at most kMaxPartitionVertices vertices.
TnwPartition FinestTnwPartition(const MultiGraph& g);

// Fractional spanning-tree packing value: min over partitions P with |P| >= 2
// of E(P) / (|P| - 1).
Rational TnwStrength(const MultiGraph& g);

// Ideal edge loads from the deletion decomposition of the graphic rank: the
// edges split off at a step with rank drop r and size s all get r / s.
// Requires a connected graph with at most 20 edges.
RationalVector IdealLoads(const MultiGraph& g);

// Ideal loads by the recursive construction: cut the edges crossing a
// minimum-strength partition, give them 1 / strength, and recurse into each
// component of what remains. Independent of IdealLoads.
RationalVector IdealLoadsByTnwRecursion(const MultiGraph& g);

struct TreePackOptions {
  int iterations = 1;
  std::vector<double> reference;  // trace distances when nonempty
  bool keep_iterates = false;
};

struct TreePackResult {
  // l^(T) = tree_counts / T.
  std::vector<double> loads;
  // Number of packed trees containing each edge.
  std::vector<std::int64_t> tree_counts;
  int iterations = 0;
  ConvergenceTrace trace;
};

// Greedy tree packing. l^(0) is the indicator of the minimum spanning tree
// under zero weights; iteration k adds the minimum spanning tree under
// weights l^(k) to the packing and sets l^(k+1) to the packing's mean.
TreePackResult GreedyTreePack(const MultiGraph& g,
                              const TreePackOptions& options);

// Frank-Wolfe on min sum l^2 over the spanning-tree polytope with the
// minimum spanning tree as oracle and l^(0) as above. With the averaging
// rule its iterates are identical to GreedyTreePack's.
FrankWolfeResult<double> FwTreePack(const MultiGraph& g, StepRule rule,
                                    const TreePackOptions& options);

// Same recurrence in exact arithmetic; meant for short runs.
FrankWolfeResult<Rational> FwTreePackExact(const MultiGraph& g, StepRule rule,
                                           int iterations);

// Indicator vector of an edge subset.
template <typename Scalar>
std::vector<Scalar> EdgeIndicator(int num_edges,
                                  const std::vector<int>& edges) {
  std::vector<Scalar> x(num_edges, Scalar(0));
  for (int e : edges) x[e] = Scalar(1);
  return x;
}

}  // namespace peelfw

#endif  // PEELFW_TREEPACK_H_
