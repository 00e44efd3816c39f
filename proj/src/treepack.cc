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

#include "peelfw/treepack.h"

#include <algorithm>
#include <functional>

#include "peelfw/decomp.h"
#include "peelfw/errors.h"
#include "peelfw/setfn.h"

namespace peelfw {

namespace {

void RequireConnected(const MultiGraph& g) {
  if (!IsConnected(g)) {
    throw PreconditionError("graph is disconnected");
  }
}

// Calls visit(labels, num_parts) for every set partition of 0..n-1 encoded as
// a restricted-growth string.
void ForEachPartition(
    int n, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> labels(n, 0);
  std::vector<int> prefix_max(n, 0);  // max of labels[0..i]
  while (true) {
    visit(labels, prefix_max[n - 1] + 1);
    int i = n - 1;
    while (i > 0 && labels[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++labels[i];
    prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
    for (int j = i + 1; j < n; ++j) {
      labels[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

void Recurse(const MultiGraph& g, const std::vector<int>& original_edge,
             RationalVector& loads) {
  if (g.num_edges() == 0) return;
  const TnwPartition p = FinestTnwPartition(g);
  Subset kept(g.num_edges());
  const Rational load = 1 / p.strength;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    if (p.part_of_vertex[ed.u] != p.part_of_vertex[ed.v]) {
      loads[original_edge[e]] = load;
    } else {
      kept.set(e);
    }
  }
  const std::vector<int> component = ComponentLabels(g, kept);
  const int num_components =
      *std::max_element(component.begin(), component.end()) + 1;
  for (int c = 0; c < num_components; ++c) {
    std::vector<int> local(g.num_vertices(), -1);
    int count = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (component[v] == c) local[v] = count++;
    }
    std::vector<MultiGraph::Edge> edges;
    std::vector<int> ids;
    for (int e = 0; e < g.num_edges(); ++e) {
      const auto& ed = g.edge(e);
      if (kept.test(e) && component[ed.u] == c) {
        edges.push_back({local[ed.u], local[ed.v]});
        ids.push_back(original_edge[e]);
      }
    }
    if (!edges.empty()) Recurse(MultiGraph(count, edges), ids, loads);
  }
}

}  // namespace

TnwPartition FinestTnwPartition(const MultiGraph& g) {
  const int n = g.num_vertices();
  if (n > kMaxPartitionVertices) {
    throw PreconditionError("too many vertices for partition enumeration: " +
                            std::to_string(n));
  }
  if (n < 2) throw PreconditionError("strength needs at least two vertices");
  RequireConnected(g);
  TnwPartition best;
  ForEachPartition(n, [&](const std::vector<int>& labels, int parts) {
    if (parts < 2) return;
    int crossing = 0;
    for (const auto& ed : g.edges()) {
      crossing += labels[ed.u] != labels[ed.v];
    }
    // crossing / (parts - 1) against best.crossing / (best.parts - 1).
    const long lhs = static_cast<long>(crossing) * (best.num_parts - 1);
    const long rhs = static_cast<long>(best.crossing_edges) * (parts - 1);
    if (best.num_parts == 0 || lhs < rhs ||
        (lhs == rhs && parts > best.num_parts)) {
      best.part_of_vertex = labels;
      best.num_parts = parts;
      best.crossing_edges = crossing;
    }
  });
  best.strength = Rational(best.crossing_edges) / (best.num_parts - 1);
  return best;
}

Rational TnwStrength(const MultiGraph& g) {
  return FinestTnwPartition(g).strength;
}

RationalVector IdealLoads(const MultiGraph& g) {
  RequireConnected(g);
  return DensityVector(GraphicRankFunction(g));
}

RationalVector IdealLoadsByTnwRecursion(const MultiGraph& g) {
  RequireConnected(g);
  RationalVector loads(g.num_edges());
  std::vector<int> ids(g.num_edges());
  std::iota(ids.begin(), ids.end(), 0);
  Recurse(g, ids, loads);
  return loads;
}

namespace {

std::vector<double> InitialTree(const MultiGraph& g) {
  const std::vector<double> zero(g.num_edges(), 0.0);
  return EdgeIndicator<double>(g.num_edges(), MinimumSpanningTree(g, zero));
}

}  // namespace

TreePackResult GreedyTreePack(const MultiGraph& g,
                              const TreePackOptions& options) {
  RequireConnected(g);
  if (options.iterations < 1) throw InputError("iterations must be >= 1");
  const int m = g.num_edges();
  if (!options.reference.empty() &&
      static_cast<int>(options.reference.size()) != m) {
    throw InputError("reference vector length does not match edge count");
  }
  TreePackResult result;
  result.tree_counts.assign(m, 0);
  std::vector<double> loads = InitialTree(g);
  FrankWolfeOptions trace_options;
  trace_options.reference = options.reference;
  trace_options.keep_iterates = options.keep_iterates;
  for (int k = 0; k < options.iterations; ++k) {
    const std::vector<int> tree = MinimumSpanningTree(g, loads);
    for (int e : tree) ++result.tree_counts[e];
    for (int e = 0; e < m; ++e) {
      loads[e] = static_cast<double>(result.tree_counts[e]) / (k + 1);
    }
    internal::RecordStep(loads, k + 1, 1.0 / (k + 1), trace_options,
                         result.trace);
  }
  result.loads = std::move(loads);
  result.iterations = options.iterations;
  return result;
}

FrankWolfeResult<double> FwTreePack(const MultiGraph& g, StepRule rule,
                                    const TreePackOptions& options) {
  RequireConnected(g);
  LinearOracle<double> lmo = [&g](std::span<const double> w) {
    return EdgeIndicator<double>(g.num_edges(), MinimumSpanningTree(g, w));
  };
  FrankWolfeOptions fw;
  fw.rule = rule;
  fw.iterations = options.iterations;
  fw.keep_iterates = options.keep_iterates;
  fw.reference = options.reference;
  return FrankWolfe<double>(lmo, InitialTree(g), fw);
}

FrankWolfeResult<Rational> FwTreePackExact(const MultiGraph& g, StepRule rule,
                                           int iterations) {
  RequireConnected(g);
  LinearOracle<Rational> lmo = [&g](std::span<const Rational> w) {
    return EdgeIndicator<Rational>(g.num_edges(), MinimumSpanningTree(g, w));
  };
  const RationalVector zero(g.num_edges());
  FrankWolfeOptions fw;
  fw.rule = rule;
  fw.iterations = iterations;
  return FrankWolfe<Rational>(
      lmo, EdgeIndicator<Rational>(g.num_edges(), MinimumSpanningTree(g, zero)),
      fw);
}

}  // namespace peelfw
