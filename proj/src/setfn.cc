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

#include "peelfw/setfn.h"

#include <memory>
#include <numeric>

#include "peelfw/errors.h"

namespace peelfw {

namespace {

constexpr int kMaxTabulated = 24;
constexpr int kMaxExhaustivePairs = 12;

std::vector<int> IdentityLabels(int n) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return labels;
}

Modularity Flip(Modularity kind) {
  return kind == Modularity::kSubmodular ? Modularity::kSupermodular
                                         : Modularity::kSubmodular;
}

// Embeds a subset over `positions.size()` child positions into the parent
// ground set of size parent_size.
Subset Embed(const Subset& child, const std::vector<int>& positions,
             int parent_size) {
  Subset parent(static_cast<Subset::size_type>(parent_size));
  for (auto i = child.find_first(); i != Subset::npos; i = child.find_next(i)) {
    parent.set(positions[i]);
  }
  return parent;
}

}  // namespace

std::string ToString(Modularity kind) {
  return kind == Modularity::kSubmodular ? "submodular" : "supermodular";
}

SetFunction::SetFunction(std::vector<int> labels, Evaluator eval,
                         Modularity kind, bool monotone, bool normalized)
    : labels_(std::move(labels)),
      eval_(std::move(eval)),
      kind_(kind),
      monotone_(monotone),
      normalized_(normalized) {}

Rational SetFunction::operator()(const Subset& s) const {
  if (static_cast<int>(s.size()) != ground_size()) {
    throw InputError("subset size " + std::to_string(s.size()) +
                     " does not match ground size " +
                     std::to_string(ground_size()));
  }
  return eval_(s);
}

Rational SetFunction::FullValue() const { return (*this)(FullSet()); }

SetFunction EdgeCountFunction(const MultiGraph& g) {
  auto graph = std::make_shared<const MultiGraph>(g);
  auto eval = [graph](const Subset& s) {
    long count = 0;
    for (const auto& e : graph->edges()) {
      if (s.test(e.u) && s.test(e.v)) ++count;
    }
    return Rational(count);
  };
  return SetFunction(IdentityLabels(g.num_vertices()), eval,
                     Modularity::kSupermodular, /*monotone=*/true,
                     /*normalized=*/true);
}

SetFunction GraphicRankFunction(const MultiGraph& g) {
  auto graph = std::make_shared<const MultiGraph>(g);
  auto eval = [graph](const Subset& x) {
    return Rational(graph->num_vertices() - CountComponents(*graph, x));
  };
  return SetFunction(IdentityLabels(g.num_edges()), eval,
                     Modularity::kSubmodular, /*monotone=*/true,
                     /*normalized=*/true);
}

SetFunction ModularFunction(RationalVector weights, Modularity kind) {
  bool nonnegative = true;
  for (const Rational& w : weights) nonnegative = nonnegative && w >= 0;
  const int n = static_cast<int>(weights.size());
  auto shared = std::make_shared<const RationalVector>(std::move(weights));
  auto eval = [shared](const Subset& s) {
    Rational total = 0;
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
      total += (*shared)[i];
    }
    return total;
  };
  return SetFunction(IdentityLabels(n), eval, kind, nonnegative,
                     /*normalized=*/true);
}

SetFunction Dualize(const SetFunction& f) {
  if (!f.monotone() || !f.normalized()) {
    throw PreconditionError("dualize requires a monotone normalized function");
  }
  const Rational full = f.FullValue();
  auto eval = [f, full](const Subset& x) {
    Subset complement = x;
    complement.flip();
    return full - f(complement);
  };
  return SetFunction(f.labels(), eval, Flip(f.kind()), /*monotone=*/true,
                     /*normalized=*/true);
}

SetFunction Contract(const SetFunction& f, const Subset& a) {
  if (static_cast<int>(a.size()) != f.ground_size()) {
    throw InputError("contracted set is not over the function's ground set");
  }
  std::vector<int> positions;
  std::vector<int> labels;
  for (int i = 0; i < f.ground_size(); ++i) {
    if (!a.test(i)) {
      positions.push_back(i);
      labels.push_back(f.labels()[i]);
    }
  }
  const Rational base = f(a);
  const int parent_size = f.ground_size();
  auto eval = [f, a, base, positions, parent_size](const Subset& x) {
    return f(Embed(x, positions, parent_size) | a) - base;
  };
  return SetFunction(std::move(labels), eval, f.kind(), f.monotone(),
                     /*normalized=*/true);
}

SetFunction Restrict(const SetFunction& f, const Subset& keep) {
  if (static_cast<int>(keep.size()) != f.ground_size()) {
    throw InputError("restriction set is not over the function's ground set");
  }
  std::vector<int> positions = Members(keep);
  std::vector<int> labels;
  for (int i : positions) labels.push_back(f.labels()[i]);
  const int parent_size = f.ground_size();
  auto eval = [f, positions, parent_size](const Subset& x) {
    return f(Embed(x, positions, parent_size));
  };
  return SetFunction(std::move(labels), eval, f.kind(), f.monotone(),
                     f.normalized());
}

SetFunction NonnegativeSum(const Rational& a, const SetFunction& f,
                           const Rational& b, const SetFunction& g) {
  if (a < 0 || b < 0) {
    throw InputError("nonnegative sum requires a, b >= 0");
  }
  if (f.ground_size() != g.ground_size() || f.labels() != g.labels()) {
    throw InputError("nonnegative sum requires identical ground sets");
  }
  if (f.kind() != g.kind()) {
    throw PreconditionError(
        "nonnegative sum of a submodular and a supermodular function");
  }
  auto eval = [a, f, b, g](const Subset& x) { return a * f(x) + b * g(x); };
  return SetFunction(f.labels(), eval, f.kind(), f.monotone() && g.monotone(),
                     f.normalized() && g.normalized());
}

Rational Marginal(const SetFunction& f, int v, const Subset& a) {
  if (v < 0 || v >= f.ground_size()) {
    throw InputError("invalid ground element " + std::to_string(v));
  }
  if (a.test(v)) {
    throw InputError("marginal of an element already in the set");
  }
  Subset with = a;
  with.set(v);
  return f(with) - f(a);
}

RationalVector TabulateValues(const SetFunction& f) {
  const int n = f.ground_size();
  if (n > kMaxTabulated) {
    throw PreconditionError("ground set too large to tabulate: " +
                            std::to_string(n));
  }
  RationalVector values(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
    values[mask] = f(SubsetFromMask(n, mask));
  }
  return values;
}

bool CheckDeclaredModularity(const SetFunction& f) {
  const int n = f.ground_size();
  if (n > kMaxExhaustivePairs) {
    throw PreconditionError("ground set too large for exhaustive pair check");
  }
  const RationalVector values = TabulateValues(f);
  const std::uint64_t count = values.size();
  for (std::uint64_t a = 0; a < count; ++a) {
    for (std::uint64_t b = a + 1; b < count; ++b) {
      const Rational lhs = values[a] + values[b];
      const Rational rhs = values[a | b] + values[a & b];
      if (f.kind() == Modularity::kSubmodular ? lhs < rhs : lhs > rhs) {
        return false;
      }
    }
  }
  return true;
}

bool CheckMonotone(const SetFunction& f) {
  const RationalVector values = TabulateValues(f);
  const int n = f.ground_size();
  // Single-element extensions suffice for monotonicity.
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
    for (int v = 0; v < n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (!(mask & bit) && values[mask] > values[mask | bit]) return false;
    }
  }
  return true;
}

bool CheckNormalized(const SetFunction& f) { return f(f.EmptySet()) == 0; }

}  // namespace peelfw
