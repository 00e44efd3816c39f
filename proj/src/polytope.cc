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

#include "peelfw/polytope.h"

#include <bit>
#include <cmath>
#include <set>

namespace peelfw {

namespace {

constexpr int kMaxVerifyGround = 20;

void CheckPermutation(const SetFunction& f, std::span<const int> order) {
  std::vector<char> seen(f.ground_size(), 0);
  bool ok = static_cast<int>(order.size()) == f.ground_size();
  for (std::size_t i = 0; ok && i < order.size(); ++i) {
    const int v = order[i];
    ok = v >= 0 && v < f.ground_size() && !seen[v];
    if (ok) seen[v] = 1;
  }
  if (!ok) throw InputError("order is not a permutation of the ground set");
}

}  // namespace

RationalVector PrefixGreedy(const SetFunction& f, std::span<const int> order) {
  CheckPermutation(f, order);
  RationalVector x(f.ground_size());
  Subset prefix = f.EmptySet();
  Rational previous = f(prefix);
  for (int v : order) {
    prefix.set(v);
    Rational current = f(prefix);
    x[v] = current - previous;
    previous = std::move(current);
  }
  return x;
}

RationalVector SuffixGreedy(const SetFunction& f, std::span<const int> order) {
  CheckPermutation(f, order);
  RationalVector x(f.ground_size());
  Subset suffix = f.EmptySet();
  Rational previous = f(suffix);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    suffix.set(*it);
    Rational current = f(suffix);
    x[*it] = current - previous;
    previous = std::move(current);
  }
  return x;
}

std::vector<RationalVector> EnumerateBaseVertices(const SetFunction& f,
                                                  int limit) {
  const int n = f.ground_size();
  if (n > limit) {
    throw PreconditionError("ground set of size " + std::to_string(n) +
                            " exceeds vertex enumeration limit " +
                            std::to_string(limit));
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::set<RationalVector> vertices;
  do {
    vertices.insert(PrefixGreedy(f, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return {vertices.begin(), vertices.end()};
}

bool VerifyBase(const SetFunction& f, std::span<const Rational> x) {
  const int n = f.ground_size();
  if (n > kMaxVerifyGround) {
    throw PreconditionError("ground set too large for base verification");
  }
  if (static_cast<int>(x.size()) != n) return false;
  for (const Rational& xi : x) {
    if (xi < 0) return false;
  }
  const bool upper = f.kind() == Modularity::kSubmodular;
  const std::uint64_t count = std::uint64_t{1} << n;
  // Subset sums built incrementally from the lowest set bit.
  RationalVector sums(count);
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)] + x[low];
    const Rational value = f(SubsetFromMask(n, mask));
    if (upper ? sums[mask] > value : sums[mask] < value) return false;
  }
  return sums[count - 1] == f.FullValue();
}

bool VerifyBaseApprox(const SetFunction& f, std::span<const double> x,
                      double tol) {
  const int n = f.ground_size();
  if (n > kMaxVerifyGround) {
    throw PreconditionError("ground set too large for base verification");
  }
  if (static_cast<int>(x.size()) != n) return false;
  for (double xi : x) {
    if (xi < -tol) return false;
  }
  const bool upper = f.kind() == Modularity::kSubmodular;
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<double> sums(count, 0.0);
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)] + x[low];
    const double value = ToDouble(f(SubsetFromMask(n, mask)));
    if (upper ? sums[mask] > value + tol : sums[mask] < value - tol) {
      return false;
    }
  }
  return std::abs(sums[count - 1] - ToDouble(f.FullValue())) <= tol;
}

bool Orientation::IsValid() const {
  for (const Share& s : shares) {
    if (s.at_u < 0 || s.at_v < 0 || s.at_u + s.at_v != 1) return false;
  }
  return true;
}

RationalVector Orientation::Loads(const MultiGraph& g) const {
  if (static_cast<int>(shares.size()) != g.num_edges()) {
    throw InputError("orientation does not cover every edge");
  }
  RationalVector loads(g.num_vertices());
  for (int e = 0; e < g.num_edges(); ++e) {
    loads[g.edge(e).u] += shares[e].at_u;
    loads[g.edge(e).v] += shares[e].at_v;
  }
  return loads;
}

Orientation IntegralOrientation(const MultiGraph& g, const Subset& to_v) {
  Orientation o;
  o.shares.reserve(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    o.shares.push_back(to_v.test(e) ? Orientation::Share{0, 1}
                                    : Orientation::Share{1, 0});
  }
  return o;
}

Rational Dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InputError("dot product length mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

}  // namespace peelfw
