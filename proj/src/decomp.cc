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

#include "peelfw/decomp.h"

#include <algorithm>
#include <bit>
#include <functional>

#include "peelfw/errors.h"
#include "peelfw/polytope.h"

namespace peelfw {

namespace {

using Mask = std::uint64_t;

void CheckGround(const SetFunction& f) {
  if (f.ground_size() > kMaxDecompositionGround) {
    throw PreconditionError("ground set of size " +
                            std::to_string(f.ground_size()) +
                            " exceeds the enumeration cap of " +
                            std::to_string(kMaxDecompositionGround));
  }
}

Mask FullMask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<int> MaskMembers(Mask mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// Visits every nonempty submask of `of`.
void ForEachNonemptySubmask(Mask of, const std::function<void(Mask)>& visit) {
  for (Mask s = of; s; s = (s - 1) & of) visit(s);
}

// Visits every submask of `of`, including the empty set.
void ForEachSubmask(Mask of, const std::function<void(Mask)>& visit) {
  Mask s = of;
  while (true) {
    visit(s);
    if (s == 0) break;
    s = (s - 1) & of;
  }
}

struct DensestResult {
  Mask set;
  Rational density;
};

// Maximal densest nonempty X within `remaining` for X -> f(X | base) - f(base).
DensestResult MaximalDensest(const SetFunction& f, Mask base, Mask remaining) {
  const int n = f.ground_size();
  const Rational base_value = f(SubsetFromMask(n, base));
  bool found = false;
  Rational best;
  Mask union_of_best = 0;
  ForEachNonemptySubmask(remaining, [&](Mask x) {
    Rational density =
        (f(SubsetFromMask(n, x | base)) - base_value) / std::popcount(x);
    if (!found || density > best) {
      found = true;
      best = std::move(density);
      union_of_best = x;
    } else if (density == best) {
      union_of_best |= x;
    }
  });
  // Maximizers are closed under union, so the union is itself a maximizer.
  const Rational union_density =
      (f(SubsetFromMask(n, union_of_best | base)) - base_value) /
      std::popcount(union_of_best);
  if (union_density != best) {
    throw PreconditionError(
        "density maximizers are not union-closed; function is not "
        "supermodular");
  }
  return {union_of_best, best};
}

struct RatioResult {
  Mask set;
  Rational ratio;
};

// Minimal S within `current` minimizing (|C| - |S|) / (f(C) - f(S)) over S
// with f(S) < f(C).
RatioResult MinimalRatioSet(const SetFunction& f, Mask current) {
  const int n = f.ground_size();
  const Rational current_value = f(SubsetFromMask(n, current));
  const int current_size = std::popcount(current);
  bool found = false;
  Rational best;
  Mask intersection_of_best = 0;
  ForEachSubmask(current, [&](Mask s) {
    const Rational drop = current_value - f(SubsetFromMask(n, s));
    if (drop <= 0) return;
    Rational ratio = Rational(current_size - std::popcount(s)) / drop;
    if (!found || ratio < best) {
      found = true;
      best = std::move(ratio);
      intersection_of_best = s;
    } else if (ratio == best) {
      intersection_of_best &= s;
    }
  });
  if (!found) {
    throw PreconditionError(
        "deletion ratio undefined: f(S) = f(C) for every S in C");
  }
  const Rational drop =
      current_value - f(SubsetFromMask(n, intersection_of_best));
  if (drop <= 0 ||
      Rational(current_size - std::popcount(intersection_of_best)) / drop !=
          best) {
    throw PreconditionError(
        "ratio minimizers are not intersection-closed; function is not "
        "submodular");
  }
  return {intersection_of_best, best};
}

}  // namespace

std::string ToString(DecompositionVariant variant) {
  return variant == DecompositionVariant::kSupermodularContraction
             ? "supermodular_contraction"
             : "submodular_deletion";
}

DensestSet DensestSetBruteForce(const SetFunction& f) {
  CheckGround(f);
  if (f.ground_size() == 0) throw InputError("empty ground set");
  const DensestResult r = MaximalDensest(f, 0, FullMask(f.ground_size()));
  return {SubsetFromMask(f.ground_size(), r.set), r.density};
}

DenseDecomposition DecomposeSupermodular(const SetFunction& f) {
  CheckGround(f);
  if (f.kind() != Modularity::kSupermodular) {
    throw PreconditionError("contraction decomposition needs supermodular f");
  }
  DenseDecomposition out{
      DecompositionVariant::kSupermodularContraction, {}, {}};
  Mask contracted = 0;
  Mask remaining = FullMask(f.ground_size());
  while (remaining) {
    DensestResult r = MaximalDensest(f, contracted, remaining);
    out.blocks.push_back(MaskMembers(r.set));
    out.densities.push_back(std::move(r.density));
    contracted |= r.set;
    remaining &= ~r.set;
  }
  return out;
}

DenseDecomposition DecomposeSubmodularDeletion(const SetFunction& f) {
  CheckGround(f);
  if (f.kind() != Modularity::kSubmodular) {
    throw PreconditionError("deletion decomposition needs submodular f");
  }
  const int n = f.ground_size();
  for (int v = 0; v < n; ++v) {
    if (f(SubsetOf(n, {v})) <= 0) {
      throw PreconditionError(
          "deletion decomposition needs f({v}) > 0; "
          "element " +
          std::to_string(f.labels()[v]) + " violates it");
    }
  }
  DenseDecomposition out{DecompositionVariant::kSubmodularDeletion, {}, {}};
  Mask current = FullMask(n);
  while (current) {
    RatioResult r = MinimalRatioSet(f, current);
    out.blocks.push_back(MaskMembers(current & ~r.set));
    out.densities.push_back(std::move(r.ratio));
    current = r.set;
  }
  return out;
}

RationalVector DensityVector(const SetFunction& f) {
  const bool super = f.kind() == Modularity::kSupermodular;
  const DenseDecomposition d =
      super ? DecomposeSupermodular(f) : DecomposeSubmodularDeletion(f);
  RationalVector x(f.ground_size());
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const Rational value = super ? d.densities[i] : 1 / d.densities[i];
    for (int v : d.blocks[i]) x[v] = value;
  }
  return x;
}

bool CertifyLexOptimal(const SetFunction& f, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != f.ground_size()) return false;
  const auto vertices = EnumerateBaseVertices(f, 7);
  if (!VerifyBase(f, x)) return false;
  const Rational self = Dot(x, x);
  for (const RationalVector& v : vertices) {
    if (Dot(x, v) < self) return false;
  }
  return true;
}

bool IsLexExtreme(const SetFunction& f, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != f.ground_size()) return false;
  const auto vertices = EnumerateBaseVertices(f, 7);
  const bool super = f.kind() == Modularity::kSupermodular;
  auto sorted = [super](RationalVector v) {
    if (super) {
      std::sort(v.begin(), v.end(), std::greater<>());
    } else {
      std::sort(v.begin(), v.end());
    }
    return v;
  };
  const RationalVector xs = sorted(RationalVector(x.begin(), x.end()));
  for (const RationalVector& v : vertices) {
    const RationalVector vs = sorted(v);
    if (super ? vs < xs : xs < vs) return false;
  }
  return true;
}

bool VerifyDecompositionEquivalence(const SetFunction& f) {
  const DenseDecomposition deletion = DecomposeSubmodularDeletion(f);
  const DenseDecomposition contraction = DecomposeSupermodular(Dualize(f));
  if (deletion.blocks != contraction.blocks) return false;
  for (std::size_t i = 0; i < deletion.densities.size(); ++i) {
    if (deletion.densities[i] * contraction.densities[i] != 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> DensityMaximizers(const SetFunction& f) {
  CheckGround(f);
  const int n = f.ground_size();
  std::vector<Mask> family;
  Rational best;
  ForEachNonemptySubmask(FullMask(n), [&](Mask s) {
    Rational density = f(SubsetFromMask(n, s)) / std::popcount(s);
    if (family.empty() || density > best) {
      best = std::move(density);
      family.assign(1, s);
    } else if (density == best) {
      family.push_back(s);
    }
  });
  std::sort(family.begin(), family.end());
  return family;
}

std::vector<std::uint64_t> RatioMinimizers(const SetFunction& f) {
  CheckGround(f);
  const int n = f.ground_size();
  const Rational full = f.FullValue();
  std::vector<Mask> family;
  Rational best;
  ForEachSubmask(FullMask(n), [&](Mask s) {
    const Rational drop = full - f(SubsetFromMask(n, s));
    if (drop <= 0) return;
    Rational ratio = Rational(n - std::popcount(s)) / drop;
    if (family.empty() || ratio < best) {
      best = std::move(ratio);
      family.assign(1, s);
    } else if (ratio == best) {
      family.push_back(s);
    }
  });
  std::sort(family.begin(), family.end());
  return family;
}

bool IsUnionClosed(std::span<const std::uint64_t> unsorted) {
  std::vector<Mask> family(unsorted.begin(), unsorted.end());
  std::sort(family.begin(), family.end());
  for (Mask a : family)
    for (Mask b : family)
      if (!std::binary_search(family.begin(), family.end(), a | b))
        return false;
  return true;
}

bool IsIntersectionClosed(std::span<const std::uint64_t> unsorted) {
  std::vector<Mask> family(unsorted.begin(), unsorted.end());
  std::sort(family.begin(), family.end());
  for (Mask a : family)
    for (Mask b : family)
      if (!std::binary_search(family.begin(), family.end(), a & b))
        return false;
  return true;
}

int CountInclusionMaximal(std::span<const std::uint64_t> family) {
  int count = 0;
  for (Mask a : family) {
    bool maximal = true;
    for (Mask b : family) {
      if (b != a && (a & b) == a) maximal = false;
    }
    count += maximal;
  }
  return count;
}

int CountInclusionMinimal(std::span<const std::uint64_t> family) {
  int count = 0;
  for (Mask a : family) {
    bool minimal = true;
    for (Mask b : family) {
      if (b != a && (a & b) == b) minimal = false;
    }
    count += minimal;
  }
  return count;
}

}  // namespace peelfw
