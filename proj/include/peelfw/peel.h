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

#ifndef PEELFW_PEEL_H_
#define PEELFW_PEEL_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "peelfw/errors.h"
#include "peelfw/frank_wolfe.h"
#include "peelfw/graph.h"
#include "peelfw/rational.h"
#include "peelfw/setfn.h"

namespace peelfw {

struct PeelResult {
  std::vector<int> order;  // ground positions, first peeled first
  // Marginal recorded for each ground position at the moment it was peeled.
  // The last element records f({u}) (degree 0 for graphs), so dhat is a base.
  RationalVector dhat;
  // suffix_densities[i] = f(order[i..n-1]) / (n - i).
  RationalVector suffix_densities;
};

// Reusable peeling state for a fixed graph. Each call to Peel repeatedly
// removes the vertex minimizing w(u) + deg(u) in the remaining graph (ties to
// the smaller vertex id) and records its remaining degree. The priority queue
// uses lazy re-insertion: a vertex is pushed again whenever a neighbor's
// removal lowers its degree, and stale entries are skipped on pop.
class GreedyPeeler {
 public:
  explicit GreedyPeeler(const MultiGraph& g) : graph_(g) {}

  template <typename Weight>
  void Peel(std::span<const Weight> w);

  const std::vector<int>& order() const { return order_; }
  const std::vector<std::int64_t>& dhat() const { return dhat_; }

 private:
  const MultiGraph& graph_;
  std::vector<int> order_;
  std::vector<std::int64_t> dhat_;
  std::vector<std::int64_t> degree_;
  std::vector<char> removed_;
};

template <typename Weight>
void GreedyPeeler::Peel(std::span<const Weight> w) {
  const int n = graph_.num_vertices();
  if (static_cast<int>(w.size()) != n) {
    throw InputError("weight vector length does not match vertex count");
  }
  order_.clear();
  order_.reserve(n);
  dhat_.assign(n, 0);
  degree_.resize(n);
  removed_.assign(n, 0);
  using Entry = std::pair<Weight, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  auto key = [&](int v) { return Weight(w[v]) + Weight(degree_[v]); };
  for (int v = 0; v < n; ++v) {
    degree_[v] = graph_.Degree(v);
    heap.emplace(key(v), v);
  }
  while (!heap.empty()) {
    auto [k, u] = heap.top();
    heap.pop();
    if (removed_[u] || k != key(u)) continue;
    removed_[u] = 1;
    dhat_[u] = degree_[u];
    order_.push_back(u);
    for (int e : graph_.IncidentEdges(u)) {
      const int v = graph_.Opposite(e, u);
      if (removed_[v]) continue;
      --degree_[v];
      heap.emplace(key(v), v);
    }
  }
}

// One weighted peel of the graph. Equivalent to WeightedSuperGreedy on
// EdgeCountFunction(g), since the marginal of u in f(S) = |E(S)| is its
// degree in the remaining graph.
template <typename Weight>
PeelResult WeightedGreedy(const MultiGraph& g, std::span<const Weight> w) {
  GreedyPeeler peeler(g);
  peeler.Peel(w);
  PeelResult result;
  result.order = peeler.order();
  const int n = g.num_vertices();
  result.dhat.resize(n);
  std::int64_t remaining = g.num_edges();
  for (int i = 0; i < n; ++i) {
    const int u = result.order[i];
    result.suffix_densities.push_back(Rational(remaining) / (n - i));
    result.dhat[u] = peeler.dhat()[u];
    remaining -= peeler.dhat()[u];
  }
  return result;
}

template <typename Weight>
PeelResult WeightedGreedy(const MultiGraph& g, const std::vector<Weight>& w) {
  return WeightedGreedy(g, std::span<const Weight>(w));
}

// Peels the element minimizing w(u) + f(u | V' - u), recording the marginal.
// f must be declared supermodular.
PeelResult WeightedSuperGreedy(const SetFunction& f,
                               std::span<const Rational> w);

struct GreedyPPOptions {
  int iterations = 1;
  // When nonempty, trace records carry |b^(k) - reference|_2.
  std::vector<double> reference;
  bool keep_iterates = false;
  // Stop after the first iteration whose distance to the reference is at
  // most this value.
  std::optional<double> stop_within;
};

struct GreedyPPResult {
  std::vector<int> best_set;  // sorted labels
  Rational best_density;
  RationalVector loads;   // cumulative weight w after the last iteration
  std::vector<double> b;  // loads / iterations
  int iterations = 0;     // iterations actually performed
  // Record k holds b^(k) = (loads after k peels) / k with gamma = 1/k.
  ConvergenceTrace trace;
};

// Repeated weighted peeling with cumulative loads: the first pass uses zero
// weights (one pass is the classical peeling 1/2-approximation), each later
// pass uses the accumulated loads. The densest suffix over all passes is
// kept; a suffix replaces the incumbent only when strictly denser.
GreedyPPResult GreedyPlusPlus(const MultiGraph& g,
                              const GreedyPPOptions& options);

// Same loop with WeightedSuperGreedy as the inner peel.
GreedyPPResult SuperGreedyPlusPlus(const SetFunction& f,
                                   const GreedyPPOptions& options);

}  // namespace peelfw

#endif  // PEELFW_PEEL_H_
