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

#ifndef PEELFW_DECOMP_H_
#define PEELFW_DECOMP_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "peelfw/rational.h"
#include "peelfw/setfn.h"
#include "peelfw/subset.h"

namespace peelfw {

// Exact dense decompositions by subset enumeration. Every routine here is
// exponential in the ground size and capped at kMaxDecompositionGround
// elements; this is the ground-truth layer, not the scalable path.
inline constexpr int kMaxDecompositionGround = 20;

enum class DecompositionVariant {
  kSupermodularContraction,
  kSubmodularDeletion
};

std::string ToString(DecompositionVariant variant);

struct DenseDecomposition {
  DecompositionVariant variant;
  // Disjoint blocks covering the ground set, each sorted by position.
  std::vector<std::vector<int>> blocks;
  // Contraction variant: the density of block i in the function contracted by
  // blocks 0..i-1; strictly decreasing.
  // Deletion variant: the ratio (|S_{i-1}| - |S_i|) / (f(S_{i-1}) - f(S_i))
  // where block i is S_{i-1} \ S_i; strictly increasing.
  RationalVector densities;
};

struct DensestSet {
  Subset set;
  Rational density;
};

// The inclusion-maximal subset attaining max f(S)/|S| over nonempty S.
DensestSet DensestSetBruteForce(const SetFunction& f);

// Repeatedly takes the maximal densest set of the function contracted by the
// blocks found so far. f must be declared supermodular.
DenseDecomposition DecomposeSupermodular(const SetFunction& f);

// Repeatedly takes the minimal S of the current set C minimizing
// (|C| - |S|) / (f(C) - f(S)) and splits off C \ S. f must be declared
// submodular with f({v}) > 0 for every element.
DenseDecomposition DecomposeSubmodularDeletion(const SetFunction& f);

// Per-element density. Supermodular f: the contraction density of the
// element's block. Submodular f: the reciprocal of the deletion ratio, i.e.
// (f(S_{i-1}) - f(S_i)) / (|S_{i-1}| - |S_i|), so the vector is a base.
RationalVector DensityVector(const SetFunction& f);

// First-order optimality of x for min sum x^2 over B_f: x is a base and
// <x, v> >= <x, x> for every vertex v of B_f. Ground size <= 7.
bool CertifyLexOptimal(const SetFunction& f, std::span<const Rational> x);

// Lexicographic comparison of sorted coordinates against every vertex of B_f.
// Supermodular f: x sorted descending is lexicographically <= every vertex
// sorted descending. Submodular f: x sorted ascending is lexicographically >=
// every vertex sorted ascending. Ground size <= 7.
bool IsLexExtreme(const SetFunction& f, std::span<const Rational> x);

// Deletion decomposition of f against the contraction decomposition of
// Dualize(f): identical block sequences and reciprocal densities.
bool VerifyDecompositionEquivalence(const SetFunction& f);

// Bitmasks of every nonempty S attaining max f(S)/|S|.
std::vector<std::uint64_t> DensityMaximizers(const SetFunction& f);

// Bitmasks of every S with f(S) < f(V) attaining
// min (|V| - |S|) / (f(V) - f(S)).
std::vector<std::uint64_t> RatioMinimizers(const SetFunction& f);

bool IsUnionClosed(std::span<const std::uint64_t> family);
bool IsIntersectionClosed(std::span<const std::uint64_t> family);
int CountInclusionMaximal(std::span<const std::uint64_t> family);
int CountInclusionMinimal(std::span<const std::uint64_t> family);

}  // namespace peelfw

#endif  // PEELFW_DECOMP_H_
