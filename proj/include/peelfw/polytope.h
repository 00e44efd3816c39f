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

#ifndef PEELFW_POLYTOPE_H_
#define PEELFW_POLYTOPE_H_

#include <algorithm>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "peelfw/errors.h"
#include "peelfw/graph.h"
#include "peelfw/rational.h"
#include "peelfw/setfn.h"

namespace peelfw {

// Ground positions sorted by weight ascending; equal weights keep ascending
// position order.
template <typename Weight>
std::vector<int> AscendingOrder(std::span<const Weight> w) {
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[a] < w[b]; });
  return order;
}

// Marginals along a permutation: x[order[i]] = f(A_i) - f(A_{i-1}) where A_i
// holds the first i elements. Every vertex of B_f (either kind) is of this
// form for some order.
RationalVector PrefixGreedy(const SetFunction& f, std::span<const int> order);

// x[order[i]] = f(A_i) - f(A_{i+1}) where A_i holds order[i..n-1].
RationalVector SuffixGreedy(const SetFunction& f, std::span<const int> order);

// argmin <s, w> over the polymatroid base polytope of a monotone normalized
// submodular f. Elements are taken in ascending weight order and receive
// prefix marginals.
template <typename Weight>
RationalVector LmoPolymatroid(const SetFunction& f, std::span<const Weight> w) {
  if (f.kind() != Modularity::kSubmodular) {
    throw PreconditionError("polymatroid LMO needs a submodular function");
  }
  if (static_cast<int>(w.size()) != f.ground_size()) {
    throw InputError("weight vector length does not match ground size");
  }
  const auto order = AscendingOrder(w);
  return PrefixGreedy(f, order);
}

// argmin <s, w> over the contrapolymatroid base polytope of a monotone
// normalized supermodular f. Elements are taken in ascending weight order and
// receive suffix marginals.
template <typename Weight>
RationalVector LmoContrapolymatroid(const SetFunction& f,
                                    std::span<const Weight> w) {
  if (f.kind() != Modularity::kSupermodular) {
    throw PreconditionError(
        "contrapolymatroid LMO needs a supermodular function");
  }
  if (static_cast<int>(w.size()) != f.ground_size()) {
    throw InputError("weight vector length does not match ground size");
  }
  const auto order = AscendingOrder(w);
  return SuffixGreedy(f, order);
}

// Dispatches on the oracle kind.
template <typename Weight>
RationalVector LinearMinimizer(const SetFunction& f,
                               std::span<const Weight> w) {
  return f.kind() == Modularity::kSubmodular ? LmoPolymatroid(f, w)
                                             : LmoContrapolymatroid(f, w);
}

// Distinct greedy bases over all permutations, sorted; these are the vertices
// of B_f. Ground size must not exceed limit.
std::vector<RationalVector> EnumerateBaseVertices(const SetFunction& f,
                                                  int limit = 7);

// Exact membership in B_f: x >= 0, x(V) = f(V), and x(S) <= f(S) for
// submodular f (>= for supermodular) on every subset. Ground size <= 20.
bool VerifyBase(const SetFunction& f, std::span<const Rational> x);

// Floating-point variant with absolute tolerance on every constraint.
bool VerifyBaseApprox(const SetFunction& f, std::span<const double> x,
                      double tol = 1e-9);

// Fractional orientation: edge e sends share at_u to edge(e).u and at_v to
// edge(e).v.
struct Orientation {
  struct Share {
    Rational at_u;
    Rational at_v;
  };
  std::vector<Share> shares;

  bool IsValid() const;
  // b_u = sum of the shares an edge sends to u.
  RationalVector Loads(const MultiGraph& g) const;
};

// Integral orientation: bit e of to_v set means edge e goes wholly to its v
// endpoint, otherwise to its u endpoint.
Orientation IntegralOrientation(const MultiGraph& g, const Subset& to_v);

struct OrientationOptimum {
  Orientation orientation;
  RationalVector loads;
};

// Each edge goes wholly to the endpoint of strictly smaller weight, ties to
// the smaller vertex id. The loads minimize <w, d> over all orientations.
template <typename Weight>
OrientationOptimum OptimalOrientation(const MultiGraph& g,
                                      std::span<const Weight> w) {
  if (static_cast<int>(w.size()) != g.num_vertices()) {
    throw InputError("weight vector length does not match vertex count");
  }
  OrientationOptimum out;
  out.orientation.shares.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    bool to_u = w[ed.u] < w[ed.v] || (!(w[ed.v] < w[ed.u]) && ed.u < ed.v);
    out.orientation.shares[e] =
        to_u ? Orientation::Share{1, 0} : Orientation::Share{0, 1};
  }
  out.loads = out.orientation.Loads(g);
  return out;
}

// Same rule, integer loads only; used on hot paths.
template <typename Weight>
std::vector<double> OptimalOrientationLoads(const MultiGraph& g,
                                            std::span<const Weight> w) {
  std::vector<double> loads(g.num_vertices(), 0.0);
  for (const auto& ed : g.edges()) {
    bool to_u = w[ed.u] < w[ed.v] || (!(w[ed.v] < w[ed.u]) && ed.u < ed.v);
    loads[to_u ? ed.u : ed.v] += 1.0;
  }
  return loads;
}

Rational Dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace peelfw

#endif  // PEELFW_POLYTOPE_H_
