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

#ifndef PEELFW_SETFN_H_
#define PEELFW_SETFN_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "peelfw/graph.h"
#include "peelfw/rational.h"
#include "peelfw/subset.h"

namespace peelfw {

enum class Modularity { kSubmodular, kSupermodular };

std::string ToString(Modularity kind);

// Exact value oracle over a ground set of positions 0..size-1. Each position
// carries a label (the element id in the originating problem, e.g. a vertex
// or edge index) so results can be reported after contraction or
// restriction. Kind and the monotone/normalized flags are declarations; the
// Check* functions below verify them exhaustively on small ground sets.
class SetFunction {
 public:
  using Evaluator = std::function<Rational(const Subset&)>;

  SetFunction(std::vector<int> labels, Evaluator eval, Modularity kind,
              bool monotone, bool normalized);

  int ground_size() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  Modularity kind() const { return kind_; }
  bool monotone() const { return monotone_; }
  bool normalized() const { return normalized_; }

  Rational operator()(const Subset& s) const;
  Rational FullValue() const;

  Subset EmptySet() const { return Subset(labels_.size()); }
  Subset FullSet() const { return FullSubset(ground_size()); }

 private:
  std::vector<int> labels_;
  Evaluator eval_;
  Modularity kind_;
  bool monotone_;
  bool normalized_;
};

// f(S) = |E(S)| over the vertices of g. Supermodular, monotone, normalized.
SetFunction EdgeCountFunction(const MultiGraph& g);

// r(X) = n - components(V, X) over the edges of g. Submodular, monotone,
// normalized.
SetFunction GraphicRankFunction(const MultiGraph& g);

// f(S) = sum of weights[v] over S. Declared with the given kind; modular
// functions satisfy both inequalities.
SetFunction ModularFunction(RationalVector weights, Modularity kind);

// g(X) = f(V) - f(V \ X). Requires a monotone normalized f; flips the kind.
SetFunction Dualize(const SetFunction& f);

// X -> f(X u A) - f(A) over V \ A.
SetFunction Contract(const SetFunction& f, const Subset& a);

// X -> f(X) over the positions in keep.
SetFunction Restrict(const SetFunction& f, const Subset& keep);

// X -> a f(X) + b g(X); a, b >= 0 and matching ground sets and kinds.
SetFunction NonnegativeSum(const Rational& a, const SetFunction& f,
                           const Rational& b, const SetFunction& g);

// f(A + v) - f(A); v must not be in A.
Rational Marginal(const SetFunction& f, int v, const Subset& a);

// Exhaustive verification, exponential in the ground size.
bool CheckDeclaredModularity(const SetFunction& f);
bool CheckMonotone(const SetFunction& f);
bool CheckNormalized(const SetFunction& f);

// All 2^n values indexed by bitmask; ground size must be at most 24.
RationalVector TabulateValues(const SetFunction& f);

}  // namespace peelfw

#endif  // PEELFW_SETFN_H_
